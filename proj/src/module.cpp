#include "tatecoh/module.hpp"

#include <cstdio>
#include <functional>
#include <mutex>
#include <optional>
#include <random>

#include "tatecoh/error.hpp"

namespace tatecoh {

namespace {

using SparseColumn = std::vector<std::pair<std::uint32_t, FieldElement>>;
using SparseColumns = std::vector<SparseColumn>;

SparseColumns to_sparse(const Matrix& m) {
  SparseColumns out(m.cols());
  for (std::size_t c = 0; c < m.cols(); ++c)
    for (std::size_t r = 0; r < m.rows(); ++r)
      if (!m(r, c).is_zero()) out[c].emplace_back(static_cast<std::uint32_t>(r), m(r, c));
  return out;
}

Vector sparse_apply(const SparseColumns& s, const FieldDescriptor& f, const Vector& v) {
  Vector out = zero_vector(f, v.size());
  for (std::size_t c = 0; c < v.size(); ++c) {
    if (v[c].is_zero()) continue;
    const FieldElement neg = -v[c];
    for (const auto& [r, x] : s[c]) out[r].sub_mul(x, neg);
  }
  return out;
}

std::uint64_t fnv(std::uint64_t h, const std::string& s) {
  for (unsigned char ch : s) {
    h ^= ch;
    h *= 1099511628211ULL;
  }
  return h;
}

}  // namespace

struct Module::Impl {
  Algebra algebra;
  std::size_t dim = 0;
  std::vector<Matrix> gens;
  std::vector<SparseColumns> sparse;

  std::mutex basis_mutex;
  std::vector<std::optional<Matrix>> basis_actions;

  std::once_flag words_flag;
  std::vector<Matrix> words;

  std::once_flag presentation_flag;
  Presentation presentation;

  std::once_flag fingerprint_flag;
  std::string fingerprint;
};

Module Module::create(const Algebra& algebra, std::size_t dim, std::vector<Matrix> generator_actions) {
  if (generator_actions.size() != algebra.generators().size())
    throw Error(ErrorCode::ShapeMismatch, "one action matrix per algebra generator is required");
  for (const auto& m : generator_actions) {
    if (m.rows() != dim || m.cols() != dim) throw Error(ErrorCode::ShapeMismatch, "action matrix has wrong shape");
    if (dim > 0 && m.field() != algebra.field()) throw Error(ErrorCode::MixedFields, "action matrix field");
  }
  auto impl = std::make_shared<Impl>();
  impl->algebra = algebra;
  impl->dim = dim;
  impl->gens = std::move(generator_actions);
  for (auto& m : impl->gens) {
    if (dim == 0) m = Matrix(algebra.field(), 0, 0);
    impl->sparse.push_back(to_sparse(m));
  }
  impl->basis_actions.resize(algebra.dim());
  return Module(impl);
}

Module Module::from_basis_action(const Algebra& algebra, const std::vector<Matrix>& basis_actions) {
  if (basis_actions.size() != algebra.dim())
    throw Error(ErrorCode::ShapeMismatch, "one action matrix per algebra basis element is required");
  const std::size_t dim = basis_actions.empty() ? 0 : basis_actions[0].rows();
  std::vector<Matrix> gens;
  for (auto g : algebra.generators()) gens.push_back(basis_actions[g]);
  Module m = create(algebra, dim, std::move(gens));
  for (std::size_t i = 0; i < basis_actions.size(); ++i) {
    if (basis_actions[i].rows() != dim || basis_actions[i].cols() != dim)
      throw Error(ErrorCode::ShapeMismatch, "action matrix has wrong shape");
    m.impl_->basis_actions[i] = basis_actions[i];
  }
  return m;
}

Module Module::zero(const Algebra& algebra) {
  return create(algebra, 0, std::vector<Matrix>(algebra.generators().size(), Matrix(algebra.field(), 0, 0)));
}

Module Module::regular(const Algebra& algebra) {
  std::vector<Matrix> gens;
  for (auto g : algebra.generators()) gens.push_back(algebra.left_multiplication(algebra.basis_vector(g)));
  return create(algebra, algebra.dim(), std::move(gens));
}

const Algebra& Module::algebra() const { return impl_->algebra; }
const FieldDescriptor& Module::field() const { return impl_->algebra.field(); }
std::size_t Module::dim() const { return impl_->dim; }
const std::vector<Matrix>& Module::generator_actions() const { return impl_->gens; }

Vector Module::act_generator(std::size_t g, const Vector& m) const {
  if (m.size() != dim()) throw Error(ErrorCode::ShapeMismatch, "module vector length");
  return sparse_apply(impl_->sparse[g], field(), m);
}

std::vector<Vector> Module::orbit(const Vector& m) const {
  const auto& steps = algebra().words().steps;
  std::vector<Vector> out;
  out.reserve(steps.size());
  out.push_back(m);
  for (std::size_t k = 1; k < steps.size(); ++k) out.push_back(act_generator(steps[k].generator, out[steps[k].parent]));
  return out;
}

Vector Module::act(const Vector& a, const Vector& m) const {
  Vector c = algebra().word_coordinates(a);
  const auto& steps = algebra().words().steps;
  std::vector<std::optional<Vector>> memo(steps.size());
  std::function<const Vector&(std::size_t)> word = [&](std::size_t k) -> const Vector& {
    if (!memo[k]) memo[k] = k == 0 ? m : act_generator(steps[k].generator, word(steps[k].parent));
    return *memo[k];
  };
  Vector out = zero_vector(field(), dim());
  for (std::size_t k = 0; k < c.size(); ++k) {
    if (c[k].is_zero()) continue;
    const Vector& w = word(k);
    for (std::size_t i = 0; i < dim(); ++i)
      if (!w[i].is_zero()) out[i].sub_mul(-c[k], w[i]);
  }
  return out;
}

namespace {

Matrix apply_generator(const Module& m, std::size_t g, const Matrix& x) {
  Matrix out(m.field(), m.dim(), x.cols());
  for (std::size_t c = 0; c < x.cols(); ++c) out.set_column(c, m.act_generator(g, x.column(c)));
  return out;
}

}  // namespace

const std::vector<Matrix>& Module::word_actions() const {
  std::call_once(impl_->words_flag, [this] {
    const auto& steps = algebra().words().steps;
    std::vector<Matrix> w;
    w.push_back(Matrix::identity(field(), dim()));
    for (std::size_t k = 1; k < steps.size(); ++k) w.push_back(apply_generator(*this, steps[k].generator, w[steps[k].parent]));
    impl_->words = std::move(w);
  });
  return impl_->words;
}

Matrix Module::action_of(const Vector& a) const {
  Vector c = algebra().word_coordinates(a);
  const auto& steps = algebra().words().steps;
  Matrix out(field(), dim(), dim());
  std::vector<std::optional<Matrix>> memo(steps.size());
  std::function<const Matrix&(std::size_t)> word = [&](std::size_t k) -> const Matrix& {
    if (!memo[k]) memo[k] = k == 0 ? Matrix::identity(field(), dim())
                                   : apply_generator(*this, steps[k].generator, word(steps[k].parent));
    return *memo[k];
  };
  for (std::size_t k = 0; k < c.size(); ++k) {
    if (c[k].is_zero()) continue;
    out = out + word(k).scaled(c[k]);
  }
  return out;
}

Matrix Module::action(std::size_t basis_index) const {
  {
    std::lock_guard<std::mutex> lock(impl_->basis_mutex);
    if (impl_->basis_actions[basis_index]) return *impl_->basis_actions[basis_index];
  }
  const auto& gens = algebra().generators();
  Matrix m;
  bool done = false;
  for (std::size_t g = 0; g < gens.size(); ++g)
    if (gens[g] == basis_index) {
      m = impl_->gens[g];
      done = true;
    }
  if (!done) m = action_of(algebra().basis_vector(basis_index));
  std::lock_guard<std::mutex> lock(impl_->basis_mutex);
  impl_->basis_actions[basis_index] = m;
  return m;
}

ValidationReport Module::validate() const {
  ValidationReport rep;
  const Algebra& a = algebra();
  const std::size_t n = a.dim();
  std::vector<Matrix> acts;
  for (std::size_t i = 0; i < n; ++i) acts.push_back(action(i));
  Matrix one(field(), dim(), dim());
  for (std::size_t i = 0; i < n; ++i)
    if (!a.unit()[i].is_zero()) one = one + acts[i].scaled(a.unit()[i]);
  if (!one.is_identity()) rep.violations.push_back("the unit does not act as the identity");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Matrix lhs = acts[i] * acts[j];
      Matrix rhs(field(), dim(), dim());
      for (const auto& t : a.product(i, j)) rhs = rhs + acts[t.index].scaled(t.coef);
      if (lhs != rhs) {
        rep.violations.push_back("action is not multiplicative at basis pair (" + std::to_string(i) + "," +
                                 std::to_string(j) + ")");
        if (rep.violations.size() > 64) return rep;
      }
    }
  return rep;
}

const std::string& Module::fingerprint() const {
  std::call_once(impl_->fingerprint_flag, [this] {
    std::uint64_t h = 1469598103934665603ULL;
    h = fnv(h, field().name());
    h = fnv(h, std::to_string(algebra().dim()) + ":" + std::to_string(dim()));
    for (const auto& l : algebra().labels()) h = fnv(h, l);
    for (const auto& s : impl_->sparse)
      for (std::size_t c = 0; c < s.size(); ++c)
        for (const auto& [r, x] : s[c]) h = fnv(h, std::to_string(r) + "," + std::to_string(c) + "=" + x.to_string());
    char buf[32];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    impl_->fingerprint = buf;
  });
  return impl_->fingerprint;
}

const Presentation& Module::presentation() const {
  std::call_once(impl_->presentation_flag, [this] {
    const std::size_t n = algebra().dim();
    const std::size_t d = dim();
    std::vector<Vector> candidates;
    try {
      candidates = top_lifts(*this);
    } catch (const Error&) {
      for (std::size_t j = 0; j < d; ++j) candidates.push_back(unit_vector(field(), d, j));
    }
    for (std::size_t j = 0; j < d; ++j) candidates.push_back(unit_vector(field(), d, j));
    Presentation p;
    EchelonBasis span(field(), d);
    std::vector<Vector> cols;
    for (const auto& c : candidates) {
      if (span.dim() == d) break;
      if (span.contains(c)) continue;
      auto orb = orbit(c);
      for (const auto& v : orb) span.add(v);
      p.generators.push_back(c);
      for (auto& v : orb) cols.push_back(std::move(v));
    }
    p.orbit = Matrix::from_columns(field(), d, cols);
    const auto r = rref(p.orbit);
    p.pivots = r.pivots;
    std::vector<bool> is_pivot(cols.size(), false);
    for (auto q : r.pivots) is_pivot[q] = true;
    std::vector<Vector> rel;
    for (std::size_t f = 0; f < cols.size(); ++f) {
      if (is_pivot[f]) continue;
      Vector v = unit_vector(field(), cols.size(), f);
      for (std::size_t i = 0; i < r.pivots.size(); ++i) v[r.pivots[i]] = -r.reduced(i, f);
      rel.push_back(std::move(v));
    }
    p.relations = Matrix::from_columns(field(), cols.size(), rel);
    std::vector<Vector> pc;
    for (auto q : r.pivots) pc.push_back(cols[q]);
    p.pivot_inverse = inverse(Matrix::from_columns(field(), d, pc));
    (void)n;
    impl_->presentation = std::move(p);
  });
  return impl_->presentation;
}

// ---------------------------------------------------------------------------

bool is_homomorphism(const Module& source, const Module& target, const Matrix& f) {
  if (!source.algebra().same(target.algebra())) return false;
  if (f.rows() != target.dim() || f.cols() != source.dim()) return false;
  if (source.dim() == 0 || target.dim() == 0) return true;
  for (std::size_t g = 0; g < source.generator_actions().size(); ++g)
    if (f * source.generator_actions()[g] != target.generator_actions()[g] * f) return false;
  return true;
}

ModuleMap identity_map(const Module& m) { return {m, m, Matrix::identity(m.field(), m.dim())}; }

std::vector<Vector> hom_images(const Module& m, const Module& n) {
  if (!m.algebra().same(n.algebra())) throw Error(ErrorCode::InvalidArgument, "Hom between modules over different algebras");
  if (m.dim() == 0 || n.dim() == 0) return {};
  const auto& pres = m.presentation();
  const std::size_t s = pres.generators.size();
  const std::size_t na = m.algebra().dim();
  const std::size_t dn = n.dim();
  const std::size_t ambient = s * dn;
  const auto& words = n.word_actions();
  const auto& f = m.field();
  EchelonBasis eq(f, ambient);
  for (std::size_t c = 0; c < pres.relations.cols() && eq.dim() < ambient; ++c) {
    std::vector<Matrix> blocks(s, Matrix(f, dn, dn));
    std::vector<bool> used(s, false);
    for (std::size_t t = 0; t < s; ++t)
      for (std::size_t k = 0; k < na; ++k) {
        const FieldElement& x = pres.relations(t * na + k, c);
        if (x.is_zero()) continue;
        used[t] = true;
        const Matrix& w = words[k];
        Matrix& b = blocks[t];
        for (std::size_t i = 0; i < dn; ++i)
          for (std::size_t q = 0; q < dn; ++q)
            if (!w(i, q).is_zero()) b(i, q).sub_mul(-x, w(i, q));
      }
    for (std::size_t i = 0; i < dn; ++i) {
      Vector row = zero_vector(f, ambient);
      for (std::size_t t = 0; t < s; ++t)
        if (used[t])
          for (std::size_t q = 0; q < dn; ++q) row[t * dn + q] = blocks[t](i, q);
      eq.add(row);
    }
  }
  return eq.null_space();
}

Matrix map_from_images(const Module& m, const Module& n, const Vector& images) {
  const auto& pres = m.presentation();
  const std::size_t s = pres.generators.size();
  const std::size_t na = m.algebra().dim();
  const std::size_t dn = n.dim(), dm = m.dim();
  Matrix out(m.field(), dn, dm);
  if (dm == 0 || dn == 0) return out;
  std::vector<std::vector<Vector>> orbits;
  for (std::size_t t = 0; t < s; ++t)
    orbits.push_back(n.orbit(Vector(images.begin() + t * dn, images.begin() + (t + 1) * dn)));
  for (std::size_t pi = 0; pi < pres.pivots.size(); ++pi) {
    const std::size_t p = pres.pivots[pi];
    const Vector& v = orbits[p / na][p % na];
    for (std::size_t j = 0; j < dm; ++j) {
      const FieldElement& c = pres.pivot_inverse(pi, j);
      if (c.is_zero()) continue;
      for (std::size_t i = 0; i < dn; ++i)
        if (!v[i].is_zero()) out(i, j).sub_mul(-c, v[i]);
    }
  }
  return out;
}

Vector images_of_map(const Module& m, const Matrix& f) {
  Vector out;
  for (const auto& g : m.presentation().generators) {
    Vector v = f * g;
    out.insert(out.end(), v.begin(), v.end());
  }
  return out;
}

std::vector<ModuleMap> hom_space(const Module& m, const Module& n) {
  std::vector<ModuleMap> out;
  for (const auto& x : hom_images(m, n)) {
    Matrix f = map_from_images(m, n, x);
    if (!is_homomorphism(m, n, f)) throw Error(ErrorCode::ValidationFailed, "Hom basis element is not an intertwiner");
    out.push_back({m, n, std::move(f)});
  }
  return out;
}

// ---------------------------------------------------------------------------

EchelonBasis submodule_generated(const Module& m, const std::vector<Vector>& seeds) {
  EchelonBasis span(m.field(), m.dim());
  std::vector<Vector> queue;
  for (const auto& s : seeds)
    if (span.add(s)) queue.push_back(s);
  const std::size_t ng = m.generator_actions().size();
  for (std::size_t q = 0; q < queue.size() && span.dim() < m.dim(); ++q)
    for (std::size_t g = 0; g < ng; ++g) {
      Vector v = m.act_generator(g, queue[q]);
      if (span.add(v)) queue.push_back(std::move(v));
    }
  return span;
}

Vector submodule_coordinates(const EchelonBasis& sub, const Vector& v) { return sub.coordinates(v); }

Module submodule(const Module& m, const EchelonBasis& sub) {
  const std::size_t d = sub.dim();
  std::vector<Matrix> gens;
  for (std::size_t g = 0; g < m.generator_actions().size(); ++g) {
    Matrix a(m.field(), d, d);
    for (std::size_t c = 0; c < d; ++c) {
      Vector img = m.act_generator(g, sub.rows()[c]);
      a.set_column(c, sub.coordinates(img));
    }
    gens.push_back(std::move(a));
  }
  return Module::create(m.algebra(), d, std::move(gens));
}

Module quotient(const Module& m, const EchelonBasis& sub) {
  const auto freec = sub.free_columns();
  const std::size_t d = freec.size();
  std::vector<Matrix> gens;
  for (std::size_t g = 0; g < m.generator_actions().size(); ++g) {
    Matrix a(m.field(), d, d);
    for (std::size_t c = 0; c < d; ++c) {
      Vector img = sub.reduce(m.act_generator(g, unit_vector(m.field(), m.dim(), freec[c])));
      for (std::size_t r = 0; r < d; ++r) a(r, c) = img[freec[r]];
    }
    gens.push_back(std::move(a));
  }
  return Module::create(m.algebra(), d, std::move(gens));
}

EchelonBasis radical_submodule(const Module& m) {
  const auto& rad = m.algebra().radical();
  std::vector<Vector> seeds;
  for (const auto& r : rad.ideal_generators) {
    Matrix a = m.action_of(r);
    for (std::size_t c = 0; c < a.cols(); ++c) {
      Vector v = a.column(c);
      if (!is_zero(v)) seeds.push_back(std::move(v));
    }
  }
  return submodule_generated(m, seeds);
}

EchelonBasis socle_submodule(const Module& m) {
  const auto& rad = m.algebra().radical();
  const auto& f = m.field();
  const std::size_t d = m.dim();
  std::vector<Matrix> acts;
  for (const auto& r : rad.ideal_generators) acts.push_back(m.action_of(r));
  // K0 = common kernel of the ideal generators
  std::vector<Vector> rows;
  for (const auto& a : acts)
    for (std::size_t i = 0; i < d; ++i) rows.push_back(a.row(i));
  Matrix stacked = Matrix::from_rows(f, d, rows);
  std::vector<Vector> basis = rows.empty() ? Matrix::identity(f, d).columns() : kernel_basis(stacked).columns();
  // shrink to the largest submodule inside
  for (;;) {
    EchelonBasis span(f, d);
    for (const auto& b : basis) span.add(b);
    auto annihilators = span.null_space();
    if (annihilators.empty()) break;
    std::vector<Vector> cond;
    for (std::size_t g = 0; g < m.generator_actions().size(); ++g) {
      std::vector<Vector> imgs;
      for (const auto& b : basis) imgs.push_back(m.act_generator(g, b));
      for (const auto& y : annihilators) {
        Vector row(basis.size(), FieldElement(f));
        for (std::size_t c = 0; c < basis.size(); ++c)
          for (std::size_t i = 0; i < d; ++i)
            if (!y[i].is_zero() && !imgs[c][i].is_zero()) row[c] += y[i] * imgs[c][i];
        cond.push_back(std::move(row));
      }
    }
    Matrix cm = Matrix::from_rows(f, basis.size(), cond);
    Matrix k = kernel_basis(cm);
    if (k.cols() == basis.size()) break;
    std::vector<Vector> next;
    for (std::size_t c = 0; c < k.cols(); ++c) {
      Vector v = zero_vector(f, d);
      for (std::size_t b = 0; b < basis.size(); ++b)
        if (!k(b, c).is_zero())
          for (std::size_t i = 0; i < d; ++i)
            if (!basis[b][i].is_zero()) v[i] += k(b, c) * basis[b][i];
      next.push_back(std::move(v));
    }
    basis = std::move(next);
  }
  EchelonBasis out(f, d);
  for (const auto& b : basis) out.add(b);
  return out;
}

Module radical_of_module(const Module& m) { return submodule(m, radical_submodule(m)); }
Module top(const Module& m) { return quotient(m, radical_submodule(m)); }
Module socle(const Module& m) { return submodule(m, socle_submodule(m)); }

std::vector<Vector> top_lifts(const Module& m) {
  auto jm = radical_submodule(m);
  std::vector<Vector> out;
  for (auto c : jm.free_columns()) out.push_back(unit_vector(m.field(), m.dim(), c));
  return out;
}

Module dual_module(const Module& m) {
  Algebra op = m.algebra().opposite();
  std::vector<Matrix> gens;
  for (auto g : op.generators()) gens.push_back(m.action(g).transpose());
  return Module::create(op, m.dim(), std::move(gens));
}

Module direct_sum(const Module& m, const Module& n) { return direct_sum(std::vector<Module>{m, n}); }

Module direct_sum(const std::vector<Module>& parts) {
  if (parts.empty()) throw Error(ErrorCode::InvalidArgument, "direct sum of no modules");
  const Algebra& a = parts[0].algebra();
  std::size_t d = 0;
  for (const auto& p : parts) {
    if (!p.algebra().same(a)) throw Error(ErrorCode::InvalidArgument, "direct sum over different algebras");
    d += p.dim();
  }
  std::vector<Matrix> gens;
  for (std::size_t g = 0; g < a.generators().size(); ++g) {
    Matrix m(a.field(), d, d);
    std::size_t off = 0;
    for (const auto& p : parts) {
      const Matrix& x = p.generator_actions()[g];
      for (std::size_t r = 0; r < p.dim(); ++r)
        for (std::size_t c = 0; c < p.dim(); ++c) m(off + r, off + c) = x(r, c);
      off += p.dim();
    }
    gens.push_back(std::move(m));
  }
  return Module::create(a, d, std::move(gens));
}

Module restrict_module(const Module& m, const Algebra& b, const Matrix& phi) {
  std::vector<Matrix> gens;
  for (auto g : b.generators()) gens.push_back(m.action_of(phi.column(g)));
  return Module::create(b, m.dim(), std::move(gens));
}

IsoResult modules_isomorphic(const Module& m, const Module& n, std::uint64_t seed, int attempts) {
  IsoResult res{IsoVerdict::NotIsomorphic, Matrix(), seed};
  if (m.dim() != n.dim()) return res;
  if (m.dim() == 0) {
    res.verdict = IsoVerdict::Isomorphic;
    res.certificate = Matrix(m.field(), 0, 0);
    return res;
  }
  auto basis = hom_space(m, n);
  if (basis.empty()) return res;
  // Isomorphic modules have equal endomorphism and Hom dimensions.
  if (hom_images(m, m).size() != basis.size() || hom_images(n, n).size() != basis.size()) return res;
  if (top(m).dim() != top(n).dim() || socle(m).dim() != socle(n).dim()) return res;
  for (const auto& b : basis)
    if (rank(b.matrix) == m.dim()) {
      res.verdict = IsoVerdict::Isomorphic;
      res.certificate = b.matrix;
      return res;
    }
  std::mt19937_64 rng(seed);
  for (int t = 0; t < attempts; ++t) {
    Matrix c(m.field(), n.dim(), m.dim());
    for (const auto& b : basis) c = c + b.matrix.scaled(FieldElement::random(m.field(), rng, 5));
    if (rank(c) == m.dim()) {
      res.verdict = IsoVerdict::Isomorphic;
      res.certificate = c;
      return res;
    }
  }
  res.verdict = IsoVerdict::Undecided;
  return res;
}

}  // namespace tatecoh
