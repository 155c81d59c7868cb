#include "tatecoh/tate.hpp"

#include <algorithm>
#include <sstream>

#include "json.hpp"
#include "tatecoh/error.hpp"

namespace tatecoh {

using ojson = nlohmann::ordered_json;

TateExt tate_ext(const Module& m, const Module& n, int degree, Engine engine) {
  if (!m.algebra().same(n.algebra())) throw Error(ErrorCode::InvalidArgument, "modules over different algebras");
  TateExt out;
  out.degree = degree;
  out.source = syzygy_tower(m, engine)->at(degree);
  out.target = n;
  out.stable = stable_hom(out.source, n);
  for (std::size_t i = 0; i < out.stable.dim(); ++i) out.basis.push_back({degree, out.stable.representative(i), engine});
  return out;
}

std::vector<std::size_t> CohomologyTable::dims() const {
  std::vector<std::size_t> out;
  for (const auto& e : entries) out.push_back(e.dim);
  return out;
}

std::size_t CohomologyTable::dim(int degree) const {
  if (degree < lo || degree > hi) throw Error(ErrorCode::DegreeOutsideWindow, "degree " + std::to_string(degree) + " is not in the table");
  return entries[degree - lo].dim;
}

CohomologyTable ext_table(const Module& m, const Module& n, int lo, int hi, Engine engine, std::string label) {
  if (lo > hi) throw Error(ErrorCode::InvalidArgument, "empty degree range");
  CohomologyTable t;
  t.label = std::move(label);
  t.lo = lo;
  t.hi = hi;
  t.engine = engine;
  for (int d = lo; d <= hi; ++d) {
    TateExt e = tate_ext(m, n, d, engine);
    t.entries.push_back({d, e.dim(), std::move(e.basis)});
  }
  return t;
}

CohomologyTable tate_cohomology(const HopfAlgebra& h, const Module& m, int lo, int hi, Engine engine) {
  return ext_table(trivial_module(h), m, lo, hi, engine, "H^n(A, M)");
}

CohomologyTable tate_hochschild(const HopfAlgebra& h, int lo, int hi, Engine engine) {
  Module a = algebra_as_enveloping_module(h);
  return ext_table(a, a, lo, hi, engine, "HH^n(A, A)");
}

std::string table_to_text(const CohomologyTable& t) {
  std::ostringstream os;
  os << t.label << "  [" << (t.route.empty() ? engine_name(t.engine) : t.route) << "]\n";
  std::size_t width = 6;
  for (const auto& e : t.entries) width = std::max(width, std::to_string(e.degree).size());
  os << std::string(width - 6, ' ') << "degree  dim\n";
  for (const auto& e : t.entries) {
    std::string d = std::to_string(e.degree);
    os << std::string(width - d.size(), ' ') << d << "  " << e.dim << "\n";
  }
  return os.str();
}

namespace {

ojson matrix_rows(const Matrix& m) {
  ojson rows = ojson::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    ojson row = ojson::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m(r, c).to_string());
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

std::string table_to_json(const CohomologyTable& t, bool representatives) {
  ojson j;
  j["label"] = t.label;
  j["engine"] = t.route.empty() ? engine_name(t.engine) : t.route;
  j["lo"] = t.lo;
  j["hi"] = t.hi;
  ojson rows = ojson::array();
  for (const auto& e : t.entries) {
    ojson r;
    r["degree"] = e.degree;
    r["dim"] = e.dim;
    if (representatives) {
      ojson reps = ojson::array();
      for (const auto& c : e.basis) reps.push_back(matrix_rows(c.representative));
      r["representatives"] = std::move(reps);
    }
    rows.push_back(std::move(r));
  }
  j["rows"] = std::move(rows);
  return j.dump(1) + "\n";
}

// ---------------------------------------------------------------------------

namespace {

// Rank of phi -> phi o d on Hom(P, N), d: Q -> P.
std::size_t precompose_rank(const std::vector<ModuleMap>& hom, const Matrix& d) {
  if (hom.empty()) return 0;
  const auto& f = d.field();
  std::vector<Vector> cols;
  for (const auto& phi : hom) cols.push_back((phi.matrix * d).flatten());
  return rank(Matrix::from_columns(f, cols.front().size(), cols));
}

}  // namespace

std::size_t classical_ext(const Module& m, const Module& n, int degree) {
  if (degree < 0) throw Error(ErrorCode::InvalidArgument, "classical Ext lives in nonnegative degrees");
  auto tower = syzygy_tower(m, Engine::Minimal, false);
  auto diff = [&](int i) { return tower->cover_at(i - 1).inclusion * tower->cover_at(i).epi; };
  const Cover c = tower->cover_at(degree);
  auto hom = hom_space(c.projective, n);
  std::size_t out = hom.size() - precompose_rank(hom, diff(degree + 1));
  if (degree > 0) out -= precompose_rank(hom_space(tower->cover_at(degree - 1).projective, n), diff(degree));
  return out;
}

const Module& CompleteResolution::term(int i) const {
  if (i < -length || i > length) throw Error(ErrorCode::DegreeOutsideWindow, "no term in degree " + std::to_string(i));
  return terms[i + length];
}

const Matrix& CompleteResolution::differential(int i) const {
  if (i <= -length || i > length) throw Error(ErrorCode::DegreeOutsideWindow, "no differential in degree " + std::to_string(i));
  return differentials[i + length];
}

CompleteResolution spliced_complete_resolution(const HopfAlgebra& h, int length) {
  if (length < 1) throw Error(ErrorCode::InvalidArgument, "resolution length must be positive");
  const auto& f = h.field();
  const Module k = trivial_module(h);
  auto tower = syzygy_tower(k, Engine::Minimal, false);
  std::vector<Module> pos;
  std::vector<Matrix> dpos;  // dpos[i] = d_i for i >= 1
  for (int i = 0; i <= length; ++i) {
    pos.push_back(tower->cover_at(i).projective);
    dpos.push_back(i == 0 ? Matrix(f, 0, 0) : tower->cover_at(i - 1).inclusion * tower->cover_at(i).epi);
  }
  CompleteResolution r;
  r.length = length;
  r.terms.resize(2 * length + 1);
  r.differentials.resize(2 * length + 1, Matrix(f, 0, 0));
  for (int i = 0; i <= length; ++i) r.terms[i + length] = pos[i];
  for (int i = 1; i <= length; ++i) r.terms[-i + length] = hopf_dual_module(h, pos[i - 1]);
  r.augmentation = tower->cover_at(0).epi;
  r.coaugmentation = r.augmentation.transpose();
  r.splice = r.coaugmentation * r.augmentation;
  for (int i = 1; i <= length; ++i) r.differentials[i + length] = dpos[i];
  r.differentials[length] = r.splice;
  for (int i = 1; i < length; ++i) r.differentials[-i + length] = dpos[i].transpose();

  auto fail = [](int i, const std::string& what) {
    throw Error(ErrorCode::ExactnessFailure, what + " fails in degree " + std::to_string(i));
  };
  if (!is_homomorphism(r.term(0), k, r.augmentation)) fail(0, "augmentation");
  if (!is_homomorphism(k, r.term(-1), r.coaugmentation)) fail(-1, "coaugmentation");
  for (int i = -length + 1; i <= length; ++i)
    if (!is_homomorphism(r.term(i), r.term(i - 1), r.differential(i))) fail(i, "module map property");
  for (int i = -length + 1; i < length; ++i) {
    if (!(r.differential(i) * r.differential(i + 1)).is_zero()) fail(i, "d o d = 0");
    if (rank(r.differential(i)) + rank(r.differential(i + 1)) != r.term(i).dim()) fail(i, "exactness");
  }
  for (int i = -length; i <= length; ++i)
    if (!is_projective(r.term(i)).projective) fail(i, "projectivity");
  return r;
}

std::size_t cohomology_from_resolution(const CompleteResolution& r, const Module& m, int degree) {
  if (degree < r.safe_lo() || degree > r.safe_hi())
    throw Error(ErrorCode::DegreeOutsideWindow, "degree " + std::to_string(degree) + " is outside the resolution window");
  auto hom = hom_space(r.term(degree), m);
  return hom.size() - precompose_rank(hom, r.differential(degree + 1)) -
         precompose_rank(hom_space(r.term(degree - 1), m), r.differential(degree));
}

// ---------------------------------------------------------------------------

CupProduct::CupProduct(const HopfAlgebra& h)
    : hopf_(h), trivial_(trivial_module(h)), tower_(syzygy_tower(trivial_, Engine::Minimal, false)) {}

const TateExt& CupProduct::group(int degree) {
  for (const auto& [d, e] : groups_)
    if (d == degree) return e;
  groups_.emplace_back(degree, tate_ext(trivial_, trivial_, degree, Engine::Minimal));
  return groups_.back().second;
}

namespace {

// An A-map h: P -> Q with constraint(h) = rhs for a linear constraint.
template <class Constraint>
Matrix solve_through(const Module& p, const Module& q, Constraint constraint, const Matrix& rhs) {
  const auto& f = p.field();
  auto hom = hom_space(p, q);
  std::vector<Vector> cols;
  for (const auto& m : hom) cols.push_back(constraint(m.matrix).flatten());
  if (cols.empty()) {
    if (rhs.is_zero()) return Matrix(f, q.dim(), p.dim());
    throw Error(ErrorCode::NoSolution, "no lift through the projective");
  }
  auto x = try_solve(Matrix::from_columns(f, rhs.rows() * rhs.cols(), cols), rhs.flatten());
  if (!x) throw Error(ErrorCode::NoSolution, "no lift through the projective");
  Matrix out(f, q.dim(), p.dim());
  for (std::size_t i = 0; i < hom.size(); ++i)
    if (!(*x)[i].is_zero()) out = out + hom[i].matrix.scaled((*x)[i]);
  return out;
}

}  // namespace

Matrix CupProduct::shift_once(const Matrix& f, int a, int b) {
  LevelSequence sa = tower_->sequence_at(a), sb = tower_->sequence_at(b);
  auto post = [&](const Matrix& h) { return sb.projection * h; };
  Matrix h = solve_through(sa.projective, sb.projective, post, f * sa.projection);
  return solve_matrix(sb.inclusion, h * sa.inclusion);
}

Matrix CupProduct::unshift_once(const Matrix& f, int a, int b) {
  LevelSequence sa = tower_->sequence_at(a - 1), sb = tower_->sequence_at(b - 1);
  auto pre = [&](const Matrix& h) { return h * sa.inclusion; };
  Matrix h = solve_through(sa.projective, sb.projective, pre, sb.inclusion * f);
  return solve_matrix(sa.projection.transpose(), (sb.projection * h).transpose()).transpose();
}

Matrix CupProduct::shift(const Matrix& f, int a, int b, int steps) {
  Matrix g = f;
  for (; steps > 0; --steps, ++a, ++b) g = shift_once(g, a, b);
  for (; steps < 0; ++steps, --a, --b) g = unshift_once(g, a, b);
  return g;
}

Matrix CupProduct::composite(const TateClass& a, const TateClass& b) {
  return a.representative * shift(b.representative, b.degree, 0, a.degree);
}

Vector CupProduct::classify(int degree, const Matrix& f) { return group(degree).stable.classify(f); }

Vector CupProduct::product(int i, const Vector& a, int j, const Vector& b) {
  auto combine = [&](int d, const Vector& c) {
    const TateExt& g = group(d);
    Matrix m(hopf_.field(), g.target.dim(), g.source.dim());
    for (std::size_t t = 0; t < c.size(); ++t)
      if (!c[t].is_zero()) m = m + g.basis[t].representative.scaled(c[t]);
    return TateClass{d, m, Engine::Minimal};
  };
  const TateExt& target = group(i + j);
  if (target.dim() == 0) return {};
  return classify(i + j, composite(combine(i, a), combine(j, b)));
}

Vector CupProduct::identity_class() {
  if (group(0).dim() == 0) return {};
  return classify(0, Matrix::identity(hopf_.field(), 1));
}

TateClass cup_product(CupProduct& ring, const TateClass& a, const TateClass& b) {
  return {a.degree + b.degree, ring.composite(a, b), Engine::Minimal};
}

RingTable ring_table(const HopfAlgebra& h, int lo, int hi) {
  if (lo > hi) throw Error(ErrorCode::InvalidArgument, "empty degree range");
  CupProduct ring(h);
  const auto& f = h.field();
  RingTable t;
  t.lo = lo;
  t.hi = hi;
  for (int d = lo; d <= hi; ++d) t.dims.push_back(ring.group(d).dim());
  auto dim = [&](int d) { return t.dims[d - lo]; };
  auto in = [&](int d) { return d >= lo && d <= hi; };
  auto unit = [&](std::size_t n, std::size_t i) { return unit_vector(f, n, i); };
  for (int i = lo; i <= hi; ++i)
    for (int j = lo; j <= hi; ++j) {
      if (!in(i + j)) continue;
      for (std::size_t a = 0; a < dim(i); ++a)
        for (std::size_t b = 0; b < dim(j); ++b) {
          Vector p = ring.product(i, unit(dim(i), a), j, unit(dim(j), b));
          if (p.empty()) p = zero_vector(f, 0);
          t.entries.push_back({i, static_cast<int>(a), j, static_cast<int>(b), std::move(p)});
        }
    }
  auto lookup = [&](int i, std::size_t a, int j, std::size_t b) -> const Vector& {
    for (const auto& e : t.entries)
      if (e.i == i && e.j == j && e.a == static_cast<int>(a) && e.b == static_cast<int>(b)) return e.product;
    throw Error(ErrorCode::InvalidArgument, "product not tabulated");
  };
  if (in(0) && dim(0) > 0) {
    Vector one = ring.identity_class();
    for (int i = lo; i <= hi; ++i)
      for (std::size_t a = 0; a < dim(i); ++a) {
        Vector ea = unit(dim(i), a);
        if (ring.product(0, one, i, ea) != ea || ring.product(i, ea, 0, one) != ea) t.unit_ok = false;
      }
  }
  for (int i = lo; i <= hi; ++i)
    for (int j = lo; j <= hi; ++j)
      for (int l = lo; l <= hi; ++l) {
        if (!in(i + j) || !in(j + l) || !in(i + j + l)) continue;
        for (std::size_t a = 0; a < dim(i); ++a)
          for (std::size_t b = 0; b < dim(j); ++b)
            for (std::size_t c = 0; c < dim(l); ++c) {
              const Vector& ab = lookup(i, a, j, b);
              const Vector& bc = lookup(j, b, l, c);
              Vector left = dim(i + j) ? ring.product(i + j, ab, l, unit(dim(l), c)) : zero_vector(f, dim(i + j + l));
              Vector right = dim(j + l) ? ring.product(i, unit(dim(i), a), j + l, bc) : zero_vector(f, dim(i + j + l));
              if (left.empty()) left = zero_vector(f, 0);
              if (right.empty()) right = zero_vector(f, 0);
              ++t.triples_checked;
              if (left != right) t.associative = false;
            }
      }
  return t;
}

// ---------------------------------------------------------------------------

bool CheckReport::passed() const {
  return std::all_of(rows.begin(), rows.end(), [](const CheckRow& r) { return r.ok; });
}

std::vector<CheckRow> CheckReport::mismatches() const {
  std::vector<CheckRow> out;
  for (const auto& r : rows)
    if (!r.ok) out.push_back(r);
  return out;
}

namespace {

CheckRow equal_row(int degree, std::string what, std::size_t lhs, std::size_t rhs) {
  return {degree, std::move(what), static_cast<long long>(lhs), static_cast<long long>(rhs), lhs == rhs};
}

}  // namespace

CheckReport check_positive_agreement(const HopfAlgebra& h, const Module& m, int upto) {
  CheckReport rep;
  rep.name = "positive";
  if (upto < 1) return rep;
  const Module k = trivial_module(h);
  CohomologyTable tate = ext_table(k, m, 1, upto, Engine::Minimal);
  for (int n = 1; n <= upto; ++n) rep.rows.push_back(equal_row(n, "Ext_A(k, M): tate vs classical", tate.dim(n), classical_ext(k, m, n)));
  const Module a = algebra_as_enveloping_module(h);
  CohomologyTable hh = ext_table(a, a, 1, upto, Engine::Minimal);
  for (int n = 1; n <= upto; ++n) rep.rows.push_back(equal_row(n, "HH(A): tate vs classical", hh.dim(n), classical_ext(a, a, n)));
  return rep;
}

CheckReport check_theorem_iso(const HopfAlgebra& h, int lo, int hi, Engine engine) {
  CheckReport rep;
  rep.name = "theorem";
  CohomologyTable hh = tate_hochschild(h, lo, hi, engine);
  CohomologyTable ad = tate_cohomology(h, adjoint_module(h), lo, hi, engine);
  for (int n = lo; n <= hi; ++n) rep.rows.push_back(equal_row(n, "HH^n(A, A) vs H^n(A, A^ad)", hh.dim(n), ad.dim(n)));
  return rep;
}

CheckReport check_summand_decomposition(const HopfAlgebra& h, int lo, int hi, Engine engine) {
  CheckReport rep;
  rep.name = "summand";
  const Module k = trivial_module(h);
  const Module ad = adjoint_module(h);
  const Module ker = counit_kernel_module(h);
  const Matrix split = adjoint_splitting(h);
  const bool certified = is_homomorphism(direct_sum(k, ker), ad, split) && rank(split) == ad.dim();
  rep.rows.push_back({lo, "A^ad = k + Ker eps splitting certified", certified, 1, certified});
  CohomologyTable tad = tate_cohomology(h, ad, lo, hi, engine);
  CohomologyTable tk = tate_cohomology(h, k, lo, hi, engine);
  CohomologyTable tker = tate_cohomology(h, ker, lo, hi, engine);
  for (int n = lo; n <= hi; ++n)
    rep.rows.push_back(equal_row(n, "H^n(A, A^ad) vs H^n(A, k) + Ext^n(k, Ker eps)", tad.dim(n), tk.dim(n) + tker.dim(n)));
  if (hi >= 1) {
    CohomologyTable hh = tate_hochschild(h, std::max(lo, 1), hi, engine);
    for (int n = std::max(lo, 1); n <= hi; ++n) {
      const auto a = static_cast<long long>(tk.dim(n)), b = static_cast<long long>(hh.dim(n));
      rep.rows.push_back({n, "H^n(A, k) at most HH^n(A, A)", a, b, a <= b});
    }
  }
  return rep;
}

CheckReport check_nu_symmetry(const HopfAlgebra& h, int lo, int hi, Engine engine) {
  CheckReport rep;
  rep.name = "symmetry";
  if (!nakayama_square(h).identity) {
    rep.skipped = true;
    rep.notice = "nu^2 is not the identity";
    return rep;
  }
  CohomologyTable hh = tate_hochschild(h, lo, hi, engine);
  for (int n = lo; n <= hi; ++n) {
    const int m = -(n + 1);
    if (m < lo || m > hi) continue;
    rep.rows.push_back(equal_row(n, "HH^n vs HH^-(n+1)", hh.dim(n), hh.dim(m)));
  }
  return rep;
}

std::string report_to_text(const CheckReport& r) {
  std::ostringstream os;
  if (r.skipped) {
    os << r.name << ": SKIP (" << r.notice << ")\n";
    return os.str();
  }
  for (const auto& row : r.rows)
    os << r.name << "  n=" << row.degree << "  " << row.what << ": " << row.lhs << " " << row.rhs << "  "
       << (row.ok ? "ok" : "MISMATCH") << "\n";
  os << r.name << ": " << (r.passed() ? "PASS" : "FAIL") << "\n";
  return os.str();
}

std::string report_to_json(const CheckReport& r) {
  ojson j;
  j["check"] = r.name;
  j["status"] = r.skipped ? "skip" : (r.passed() ? "pass" : "fail");
  if (r.skipped) j["notice"] = r.notice;
  ojson rows = ojson::array();
  for (const auto& row : r.rows) {
    ojson x;
    x["degree"] = row.degree;
    x["what"] = row.what;
    x["lhs"] = row.lhs;
    x["rhs"] = row.rhs;
    x["ok"] = row.ok;
    rows.push_back(std::move(x));
  }
  j["rows"] = std::move(rows);
  return j.dump(1) + "\n";
}

}  // namespace tatecoh
