#include "tatecoh/algebra.hpp"

#include <cstdio>
#include <mutex>
#include <random>
#include <sstream>

#include "tatecoh/error.hpp"

namespace tatecoh {

SparseVector sparse_from_dense(const Vector& v) {
  SparseVector out;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (!v[i].is_zero()) out.push_back({i, v[i]});
  return out;
}

Vector dense_from_sparse(const FieldDescriptor& field, std::size_t n, const SparseVector& v) {
  Vector out = zero_vector(field, n);
  for (const auto& t : v) out[t.index] += t.coef;
  return out;
}

struct Algebra::Impl {
  FieldDescriptor field;
  std::size_t n = 0;
  std::vector<std::string> labels;
  Vector unit;
  std::vector<SparseVector> table;

  std::mutex opposite_mutex;
  std::weak_ptr<Impl> opposite_of;
  std::shared_ptr<Impl> opposite_cache;
  std::shared_ptr<Impl> factor_a, factor_b;

  std::once_flag words_flag;
  std::vector<std::size_t> generators;
  WordProgram words;

  std::once_flag radical_flag;
  Radical radical;
  std::exception_ptr radical_error;

  std::mutex frobenius_mutex;
  bool frobenius_done = false;
  std::optional<Vector> frobenius;

  std::once_flag fingerprint_flag;
  std::string fingerprint;

  std::once_flag idempotent_flag;
  std::vector<Vector> idempotents;
  std::exception_ptr idempotent_error;
};

namespace {

// Linear span closure of seeds under left multiplication by generators.
struct Closure {
  EchelonBasis span;
  std::vector<WordProgram::Step> steps;
  std::vector<Vector> vectors;
};

Closure word_closure(const Algebra& a, const std::vector<std::size_t>& gens) {
  Closure c{EchelonBasis(a.field(), a.dim()), {}, {}};
  c.span.add(a.unit());
  c.steps.push_back({0, 0});
  c.vectors.push_back(a.unit());
  for (std::size_t w = 0; w < c.vectors.size(); ++w) {
    for (std::size_t g = 0; g < gens.size(); ++g) {
      Vector v = a.multiply(a.basis_vector(gens[g]), c.vectors[w]);
      if (c.span.add(v)) {
        c.steps.push_back({g, w});
        c.vectors.push_back(std::move(v));
      }
    }
  }
  return c;
}

// Two-sided ideal generated by seeds, as an echelon basis.
EchelonBasis ideal_closure(const Algebra& a, const std::vector<Vector>& seeds) {
  EchelonBasis span(a.field(), a.dim());
  std::vector<Vector> queue;
  for (const auto& s : seeds)
    if (span.add(s)) queue.push_back(s);
  const auto& gens = a.generators();
  for (std::size_t q = 0; q < queue.size(); ++q) {
    for (auto g : gens) {
      Vector l = a.multiply(a.basis_vector(g), queue[q]);
      if (span.add(l)) queue.push_back(std::move(l));
      Vector r = a.multiply(queue[q], a.basis_vector(g));
      if (span.add(r)) queue.push_back(std::move(r));
    }
  }
  return span;
}

// Quotient algebra data: structure constants of A/I on the free columns of I.
struct Quotient {
  std::vector<std::size_t> columns;
  std::vector<Matrix> left;  // left multiplication by each quotient basis element
};

Quotient quotient_structure(const Algebra& a, const EchelonBasis& ideal) {
  Quotient q;
  q.columns = ideal.free_columns();
  const std::size_t r = q.columns.size();
  for (std::size_t u = 0; u < r; ++u) {
    Matrix m(a.field(), r, r);
    for (std::size_t v = 0; v < r; ++v) {
      Vector prod = ideal.reduce(dense_from_sparse(a.field(), a.dim(), a.product(q.columns[u], q.columns[v])));
      for (std::size_t w = 0; w < r; ++w) m(w, v) = prod[q.columns[w]];
    }
    q.left.push_back(std::move(m));
  }
  return q;
}

FieldElement trace(const Matrix& m) {
  FieldElement t(m.field());
  for (std::size_t i = 0; i < m.rows(); ++i) t += m(i, i);
  return t;
}

// Trace form of the left regular representation of A: Tr(L_{b_x b_y}).
Matrix trace_form(const Algebra& a) {
  const std::size_t n = a.dim();
  Vector tau = zero_vector(a.field(), n);
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (const auto& t : a.product(k, i))
        if (t.index == i) tau[k] += t.coef;
  Matrix form(a.field(), n, n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (const auto& t : a.product(x, y)) form(x, y) += t.coef * tau[t.index];
  return form;
}

using IntMatrix = std::vector<std::vector<std::int64_t>>;

IntMatrix int_mul(const IntMatrix& x, const IntMatrix& y, std::int64_t mod) {
  const std::size_t n = x.size();
  IntMatrix z(n, std::vector<std::int64_t>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      if (x[i][k] == 0) continue;
      for (std::size_t j = 0; j < n; ++j)
        if (y[k][j] != 0) z[i][j] = static_cast<std::int64_t>((static_cast<__int128>(x[i][k]) * y[k][j] + z[i][j]) % mod);
    }
  return z;
}

// (Tr(lift(L_a)^(p^i)) mod p^(i+1)) / p^i for a in a prime field algebra.
std::int64_t ciw_functional(const Algebra& alg, const Vector& a, std::int64_t p, int i) {
  const std::size_t n = alg.dim();
  std::int64_t mod = 1;
  for (int s = 0; s <= i; ++s) mod *= p;
  Matrix l = alg.left_multiplication(a);
  IntMatrix base(n, std::vector<std::int64_t>(n));
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) base[r][c] = l(r, c).residue();
  std::int64_t e = 1;
  for (int s = 0; s < i; ++s) e *= p;
  IntMatrix result(n, std::vector<std::int64_t>(n, 0));
  for (std::size_t r = 0; r < n; ++r) result[r][r] = 1;
  while (e > 0) {
    if (e & 1) result = int_mul(result, base, mod);
    e >>= 1;
    if (e) base = int_mul(base, base, mod);
  }
  std::int64_t t = 0;
  for (std::size_t r = 0; r < n; ++r) t = (t + result[r][r]) % mod;
  return t / (mod / p);
}

EchelonBasis span_of(const FieldDescriptor& f, std::size_t n, const std::vector<Vector>& vs) {
  EchelonBasis e(f, n);
  for (const auto& v : vs) e.add(v);
  return e;
}

Radical compute_radical(const Algebra& a) {
  const auto& f = a.field();
  const std::size_t n = a.dim();
  Radical rad;
  std::vector<Vector> candidate;
  if (f.characteristic() == 0) {
    rad.method = "trace form";
    auto k = kernel_basis(trace_form(a));
    candidate = k.columns();
  } else {
    const std::int64_t p = f.characteristic();
    int l = 0;
    for (std::int64_t pw = p; pw <= static_cast<std::int64_t>(n); pw *= p) ++l;
    rad.method = l == 0 ? "trace form" : "iterated trace functionals";
    std::vector<Vector> current;
    for (std::size_t i = 0; i < n; ++i) current.push_back(a.basis_vector(i));
    for (int i = 0; i <= l && !current.empty(); ++i) {
      EchelonBasis cur = span_of(f, n, current);
      const auto& rows = cur.rows();
      Vector g(rows.size(), FieldElement(f));
      for (std::size_t s = 0; s < rows.size(); ++s) g[s] = FieldElement::from_int(f, ciw_functional(a, rows[s], p, i));
      // condition matrix: x in I_i iff sum_s x_s g(row_s * b_j) = 0 for all j
      Matrix cond(f, n, rows.size());
      for (std::size_t s = 0; s < rows.size(); ++s)
        for (std::size_t j = 0; j < n; ++j) {
          Vector prod = a.multiply(rows[s], a.basis_vector(j));
          Vector coords = cur.coordinates(prod);
          FieldElement val(f);
          for (std::size_t r = 0; r < coords.size(); ++r)
            if (!coords[r].is_zero()) val += coords[r] * g[r];
          cond(j, s) = val;
        }
      auto k = kernel_basis(cond);
      std::vector<Vector> next;
      for (std::size_t c = 0; c < k.cols(); ++c) {
        Vector v = zero_vector(f, n);
        for (std::size_t s = 0; s < rows.size(); ++s)
          if (!k(s, c).is_zero())
            for (std::size_t t = 0; t < n; ++t)
              if (!rows[s][t].is_zero()) v[t] += k(s, c) * rows[s][t];
        next.push_back(std::move(v));
      }
      current = std::move(next);
    }
    candidate = std::move(current);
  }

  EchelonBasis j = span_of(f, n, candidate);
  rad.basis = j.rows();

  // ideal check
  for (const auto& r : rad.basis)
    for (auto g : a.generators()) {
      if (!j.contains(a.multiply(a.basis_vector(g), r)) || !j.contains(a.multiply(r, a.basis_vector(g))))
        throw Error(ErrorCode::RadicalVerificationFailed, "candidate radical (" + rad.method + ") is not an ideal");
    }
  // nilpotency
  std::vector<Vector> power = rad.basis;
  std::size_t m = 1;
  while (!power.empty()) {
    if (m > n) throw Error(ErrorCode::RadicalVerificationFailed, "candidate radical is not nilpotent");
    EchelonBasis next(f, n);
    for (const auto& x : power)
      for (const auto& y : rad.basis) next.add(a.multiply(x, y));
    power = next.rows();
    ++m;
  }
  rad.nilpotency = rad.basis.empty() ? 1 : m;
  if (rad.basis.empty()) rad.nilpotency = 1;
  // semisimple quotient: trace form of A/J nondegenerate
  Quotient q = quotient_structure(a, j);
  const std::size_t r = q.columns.size();
  Matrix form(f, r, r);
  for (std::size_t u = 0; u < r; ++u)
    for (std::size_t v = 0; v < r; ++v) form(u, v) = trace(q.left[u] * q.left[v]);
  if (rank(form) != r)
    throw Error(ErrorCode::RadicalVerificationFailed, "trace form of the quotient by the candidate radical is degenerate");

  // ideal generators: words and radical basis elements, greedily
  std::vector<Vector> candidates;
  for (std::size_t k = 0; k < a.words().words.cols(); ++k) {
    Vector w = a.words().words.column(k);
    if (!is_zero(w) && j.contains(w)) candidates.push_back(std::move(w));
  }
  for (const auto& b : rad.basis) candidates.push_back(b);
  std::vector<Vector> chosen;
  std::size_t generated = 0;
  for (const auto& c : candidates) {
    if (generated == rad.basis.size()) break;
    std::vector<Vector> trial = chosen;
    trial.push_back(c);
    std::size_t d = ideal_closure(a, trial).dim();
    if (d > generated) {
      chosen = std::move(trial);
      generated = d;
    }
  }
  rad.ideal_generators = std::move(chosen);
  return rad;
}

// Eigenvalue candidates for the idempotent splitting.
std::vector<FieldElement> eigen_candidates(const FieldDescriptor& f) {
  std::vector<FieldElement> out;
  out.push_back(FieldElement::zero(f));
  if (f.kind() == FieldKind::PrimeField) {
    const std::int64_t p = f.characteristic();
    for (std::int64_t v = 1; v < p && v <= 5000; ++v) out.push_back(FieldElement::from_int(f, v));
    return out;
  }
  std::int64_t order = f.parameter() % 2 == 0 ? f.parameter() : 2 * f.parameter();
  auto z = primitive_root_of_unity(f, order);
  FieldElement pw = FieldElement::one(f);
  for (std::int64_t i = 0; i < order; ++i) {
    out.push_back(pw);
    pw *= z;
  }
  for (int v = 2; v <= 4; ++v) {
    out.push_back(FieldElement::from_int(f, v));
    out.push_back(FieldElement::from_int(f, -v));
  }
  return out;
}

std::vector<Vector> split_idempotents(const Algebra& a) {
  const auto& f = a.field();
  const std::size_t n = a.dim();
  EchelonBasis j = span_of(f, n, a.radical().basis);
  Quotient q = quotient_structure(a, j);
  const std::size_t r = q.columns.size();
  for (std::size_t u = 0; u < r; ++u)
    for (std::size_t v = u + 1; v < r; ++v)
      if (q.left[u].column(v) != q.left[v].column(u))
        throw Error(ErrorCode::NotSplitCommutative, "semisimple quotient is not commutative");

  // quotient unit
  Vector unit_bar = j.reduce(a.unit());
  Vector one(r, FieldElement(f));
  for (std::size_t w = 0; w < r; ++w) one[w] = unit_bar[q.columns[w]];
  auto mult_bar = [&](const Vector& x, const Vector& y) {
    Vector out = zero_vector(f, r);
    for (std::size_t u = 0; u < r; ++u)
      if (!x[u].is_zero()) {
        Vector col = q.left[u] * y;
        for (std::size_t w = 0; w < r; ++w)
          if (!col[w].is_zero()) out[w] += x[u] * col[w];
      }
    return out;
  };

  const auto candidates = eigen_candidates(f);
  std::vector<Vector> idem{one};
  for (std::size_t y = 0; y < r; ++y) {
    std::vector<Vector> next;
    for (const auto& e : idem) {
      // basis of eB and the matrix of L_y on it
      EchelonBasis eb(f, r);
      for (std::size_t u = 0; u < r; ++u) eb.add(mult_bar(e, unit_vector(f, r, u)));
      const std::size_t d = eb.dim();
      if (d == 1) {
        next.push_back(e);
        continue;
      }
      Matrix ly(f, d, d);
      for (std::size_t c = 0; c < d; ++c) {
        Vector img = q.left[y] * eb.rows()[c];
        Vector co = eb.coordinates(img);
        for (std::size_t rr = 0; rr < d; ++rr) ly(rr, c) = co[rr];
      }
      std::vector<Vector> eigvecs;  // in eB coordinates
      std::vector<std::size_t> owner;
      std::size_t found = 0;
      std::vector<FieldElement> values;
      for (const auto& lam : candidates) {
        if (found == d) break;
        Matrix shifted = ly - Matrix::identity(f, d).scaled(lam);
        auto k = kernel_basis(shifted);
        if (k.cols() == 0) continue;
        for (std::size_t c = 0; c < k.cols(); ++c) {
          eigvecs.push_back(k.column(c));
          owner.push_back(values.size());
        }
        values.push_back(lam);
        found += k.cols();
      }
      if (found != d)
        throw Error(ErrorCode::NotSplitCommutative, "semisimple quotient does not split over the base field");
      if (values.size() == 1) {
        next.push_back(e);
        continue;
      }
      // decompose e (coordinates in eB) along the eigenspaces
      Matrix basis = Matrix::from_columns(f, d, eigvecs);
      Vector ecoords = eb.coordinates(e);
      Vector sol = solve(basis, ecoords);
      for (std::size_t vi = 0; vi < values.size(); ++vi) {
        Vector comp = zero_vector(f, d);
        for (std::size_t c = 0; c < eigvecs.size(); ++c)
          if (owner[c] == vi && !sol[c].is_zero())
            for (std::size_t rr = 0; rr < d; ++rr) comp[rr] += sol[c] * eigvecs[c][rr];
        Vector full = zero_vector(f, r);
        for (std::size_t rr = 0; rr < d; ++rr)
          if (!comp[rr].is_zero())
            for (std::size_t w = 0; w < r; ++w) full[w] += comp[rr] * eb.rows()[rr][w];
        if (!is_zero(full)) next.push_back(std::move(full));
      }
    }
    idem = std::move(next);
  }
  for (const auto& e : idem) {
    EchelonBasis eb(f, r);
    for (std::size_t u = 0; u < r; ++u) eb.add(mult_bar(e, unit_vector(f, r, u)));
    if (eb.dim() != 1) throw Error(ErrorCode::NotSplitCommutative, "semisimple quotient is not split commutative");
    if (mult_bar(e, e) != e) throw Error(ErrorCode::NotSplitCommutative, "idempotent splitting failed");
  }

  // lift sequentially: e_i in (1 - f) A (1 - f), refine with e <- 3e^2 - 2e^3
  std::vector<Vector> lifted;
  Vector fsum = zero_vector(f, n);
  const FieldElement three = FieldElement::from_int(f, 3), two = FieldElement::from_int(f, 2);
  for (const auto& eb : idem) {
    Vector lift = zero_vector(f, n);
    for (std::size_t w = 0; w < r; ++w) lift[q.columns[w]] = eb[w];
    Vector comp = a.unit();
    for (std::size_t i = 0; i < n; ++i) comp[i] -= fsum[i];
    Vector e = a.multiply(a.multiply(comp, lift), comp);
    for (int iter = 0;; ++iter) {
      Vector e2 = a.multiply(e, e);
      if (e2 == e) break;
      if (iter > 64) throw Error(ErrorCode::NotSplitCommutative, "idempotent lifting did not terminate");
      Vector e3 = a.multiply(e2, e);
      for (std::size_t i = 0; i < n; ++i) e[i] = three * e2[i] - two * e3[i];
    }
    for (std::size_t i = 0; i < n; ++i) fsum[i] += e[i];
    lifted.push_back(std::move(e));
  }
  if (fsum != a.unit()) throw Error(ErrorCode::NotSplitCommutative, "lifted idempotents do not sum to 1");
  return lifted;
}

}  // namespace

// ---------------------------------------------------------------------------

Algebra Algebra::create(FieldDescriptor field, std::vector<std::string> labels, Vector unit,
                        std::vector<SparseVector> table) {
  const std::size_t n = labels.size();
  if (n == 0) throw Error(ErrorCode::ValidationFailed, "algebra must have positive dimension");
  if (unit.size() != n) throw Error(ErrorCode::ShapeMismatch, "unit vector length differs from dimension");
  if (table.size() != n * n) throw Error(ErrorCode::ShapeMismatch, "multiplication table must have n^2 entries");
  for (const auto& x : unit)
    if (x.field() != field) throw Error(ErrorCode::MixedFields, "unit vector");
  for (auto& entry : table) {
    SparseVector merged;
    Vector acc;
    bool dense_needed = false;
    for (const auto& t : entry) {
      if (t.index >= n) throw Error(ErrorCode::ShapeMismatch, "structure constant index out of range");
      if (t.coef.field() != field) throw Error(ErrorCode::MixedFields, "structure constant");
      dense_needed = true;
    }
    if (dense_needed) {
      acc = zero_vector(field, n);
      for (const auto& t : entry) acc[t.index] += t.coef;
      merged = sparse_from_dense(acc);
    }
    entry = std::move(merged);
  }
  auto impl = std::make_shared<Impl>();
  impl->field = field;
  impl->n = n;
  impl->labels = std::move(labels);
  impl->unit = std::move(unit);
  impl->table = std::move(table);
  return Algebra(impl);
}

const FieldDescriptor& Algebra::field() const { return impl_->field; }
std::size_t Algebra::dim() const { return impl_->n; }
const std::vector<std::string>& Algebra::labels() const { return impl_->labels; }
const Vector& Algebra::unit() const { return impl_->unit; }
const SparseVector& Algebra::product(std::size_t i, std::size_t j) const { return impl_->table[i * impl_->n + j]; }

FieldElement Algebra::structure(std::size_t i, std::size_t j, std::size_t k) const {
  for (const auto& t : product(i, j))
    if (t.index == k) return t.coef;
  return FieldElement(field());
}

Vector Algebra::basis_vector(std::size_t i) const { return unit_vector(field(), dim(), i); }

Vector Algebra::multiply(const Vector& a, const Vector& b) const {
  const std::size_t n = dim();
  if (a.size() != n || b.size() != n) throw Error(ErrorCode::ShapeMismatch, "algebra element length");
  Vector out = zero_vector(field(), n);
  std::vector<std::size_t> sb;
  for (std::size_t j = 0; j < n; ++j)
    if (!b[j].is_zero()) sb.push_back(j);
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i].is_zero()) continue;
    for (auto j : sb) {
      const FieldElement s = a[i] * b[j];
      for (const auto& t : product(i, j)) out[t.index].sub_mul(-s, t.coef);
    }
  }
  return out;
}

Vector Algebra::power(const Vector& a, std::size_t e) const {
  Vector out = unit();
  for (std::size_t i = 0; i < e; ++i) out = multiply(out, a);
  return out;
}

Matrix Algebra::left_multiplication(const Vector& a) const {
  std::vector<Vector> cols;
  for (std::size_t j = 0; j < dim(); ++j) cols.push_back(multiply(a, basis_vector(j)));
  return Matrix::from_columns(field(), dim(), cols);
}

Matrix Algebra::right_multiplication(const Vector& a) const {
  std::vector<Vector> cols;
  for (std::size_t j = 0; j < dim(); ++j) cols.push_back(multiply(basis_vector(j), a));
  return Matrix::from_columns(field(), dim(), cols);
}

ValidationReport Algebra::validate() const {
  ValidationReport rep;
  const std::size_t n = dim();
  const std::size_t cap = 64;
  std::size_t extra = 0;
  auto note = [&](std::string s) {
    if (rep.violations.size() < cap)
      rep.violations.push_back(std::move(s));
    else
      ++extra;
  };
  for (std::size_t i = 0; i < n; ++i) {
    Vector b = basis_vector(i);
    if (multiply(unit(), b) != b) note("unit law fails on the left at " + labels()[i]);
    if (multiply(b, unit()) != b) note("unit law fails on the right at " + labels()[i]);
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Vector left_ij = dense_from_sparse(field(), n, product(i, j));
      for (std::size_t k = 0; k < n; ++k) {
        Vector lhs = multiply(left_ij, basis_vector(k));
        Vector rhs = multiply(basis_vector(i), dense_from_sparse(field(), n, product(j, k)));
        if (lhs != rhs)
          note("associativity fails at (" + labels()[i] + ", " + labels()[j] + ", " + labels()[k] + "): (" +
               labels()[i] + " " + labels()[j] + ") " + labels()[k] + " = " + format_element(*this, lhs) + " but " +
               labels()[i] + " (" + labels()[j] + " " + labels()[k] + ") = " + format_element(*this, rhs));
      }
    }
  if (extra) rep.violations.push_back("... and " + std::to_string(extra) + " further violations");
  return rep;
}

Algebra Algebra::opposite() const {
  std::lock_guard<std::mutex> lock(impl_->opposite_mutex);
  if (auto orig = impl_->opposite_of.lock()) return Algebra(orig);
  if (impl_->opposite_cache) return Algebra(impl_->opposite_cache);
  const std::size_t n = dim();
  std::vector<SparseVector> table(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) table[i * n + j] = product(j, i);
  std::vector<std::string> labels;
  for (const auto& l : impl_->labels) labels.push_back(l + "^op");
  Algebra op = create(field(), std::move(labels), unit(), std::move(table));
  op.impl_->opposite_of = impl_;
  impl_->opposite_cache = op.impl_;
  return op;
}

bool Algebra::is_opposite_of(const Algebra& other) const {
  auto orig = impl_->opposite_of.lock();
  if (orig && orig == other.impl_) return true;
  auto back = other.impl_->opposite_of.lock();
  return back && back == impl_;
}

Algebra tensor_algebra(const Algebra& a, const Algebra& b) {
  if (a.field() != b.field()) throw Error(ErrorCode::MixedFields, "tensor product of algebras over different fields");
  const std::size_t na = a.dim(), nb = b.dim(), n = na * nb;
  std::vector<SparseVector> table(n * n);
  for (std::size_t i = 0; i < na; ++i)
    for (std::size_t j = 0; j < nb; ++j)
      for (std::size_t k = 0; k < na; ++k)
        for (std::size_t l = 0; l < nb; ++l) {
          SparseVector& entry = table[(i * nb + j) * n + (k * nb + l)];
          for (const auto& s : a.product(i, k))
            for (const auto& t : b.product(j, l)) entry.push_back({s.index * nb + t.index, s.coef * t.coef});
        }
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < na; ++i)
    for (std::size_t j = 0; j < nb; ++j) labels.push_back(a.labels()[i] + "⊗" + b.labels()[j]);
  Vector unit = zero_vector(a.field(), n);
  for (std::size_t i = 0; i < na; ++i)
    for (std::size_t j = 0; j < nb; ++j)
      if (!a.unit()[i].is_zero() && !b.unit()[j].is_zero()) unit[i * nb + j] = a.unit()[i] * b.unit()[j];
  Algebra out = Algebra::create(a.field(), std::move(labels), std::move(unit), std::move(table));
  out.impl_->factor_a = a.impl_;
  out.impl_->factor_b = b.impl_;
  return out;
}

Algebra Algebra::enveloping() const { return tensor_algebra(*this, opposite()); }

std::pair<Algebra, Algebra> Algebra::tensor_factors() const {
  if (!impl_->factor_a) return {};
  return {Algebra(impl_->factor_a), Algebra(impl_->factor_b)};
}

const std::vector<std::size_t>& Algebra::generators() const {
  std::call_once(impl_->words_flag, [this] {
    std::vector<std::size_t> gens;
    Closure c = word_closure(*this, gens);
    for (std::size_t i = 0; i < dim() && c.span.dim() < dim(); ++i) {
      if (c.span.contains(basis_vector(i))) continue;
      gens.push_back(i);
      c = word_closure(*this, gens);
    }
    impl_->generators = gens;
    impl_->words.steps = c.steps;
    impl_->words.words = Matrix::from_columns(field(), dim(), c.vectors);
    impl_->words.inverse = inverse(impl_->words.words);
  });
  return impl_->generators;
}

const WordProgram& Algebra::words() const {
  generators();
  return impl_->words;
}

Vector Algebra::word_coordinates(const Vector& a) const { return words().inverse * a; }

const Radical& Algebra::radical() const {
  std::call_once(impl_->radical_flag, [this] {
    try {
      impl_->radical = compute_radical(*this);
    } catch (...) {
      impl_->radical_error = std::current_exception();
    }
  });
  if (impl_->radical_error) std::rethrow_exception(impl_->radical_error);
  return impl_->radical;
}

Matrix Algebra::gram_matrix(const Vector& lambda) const {
  const std::size_t n = dim();
  Matrix g(field(), n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (const auto& t : product(i, j))
        if (!lambda[t.index].is_zero()) g(i, j) += t.coef * lambda[t.index];
  return g;
}

void Algebra::set_frobenius_form(const Vector& lambda) const {
  if (lambda.size() != dim()) throw Error(ErrorCode::ShapeMismatch, "Frobenius functional length");
  if (rank(gram_matrix(lambda)) != dim()) throw Error(ErrorCode::DegenerateForm, "bilinear form is degenerate");
  std::lock_guard<std::mutex> lock(impl_->frobenius_mutex);
  impl_->frobenius = lambda;
  impl_->frobenius_done = true;
}

std::optional<Vector> Algebra::frobenius_form() const {
  {
    std::lock_guard<std::mutex> lock(impl_->frobenius_mutex);
    if (impl_->frobenius_done) return impl_->frobenius;
  }
  std::optional<Vector> found;
  const std::size_t n = dim();
  auto good = [&](const Vector& l) { return rank(gram_matrix(l)) == n; };
  if (impl_->factor_a) {
    auto fa = Algebra(impl_->factor_a).frobenius_form();
    auto fb = Algebra(impl_->factor_b).frobenius_form();
    if (fa && fb) {
      const std::size_t nb = impl_->factor_b->n;
      Vector l = zero_vector(field(), n);
      for (std::size_t i = 0; i < fa->size(); ++i)
        for (std::size_t j = 0; j < nb; ++j)
          if (!(*fa)[i].is_zero() && !(*fb)[j].is_zero()) l[i * nb + j] = (*fa)[i] * (*fb)[j];
      found = l;
    }
  }
  if (!found) {
    if (auto orig = impl_->opposite_of.lock()) {
      found = Algebra(orig).frobenius_form();
    } else if (impl_->opposite_cache) {
      std::lock_guard<std::mutex> lock(impl_->opposite_cache->frobenius_mutex);
      if (impl_->opposite_cache->frobenius_done) found = impl_->opposite_cache->frobenius;
    }
  }
  if (!found) {
    for (std::size_t k = 0; k < n && !found; ++k) {
      Vector l = unit_vector(field(), n, k);
      if (good(l)) found = l;
    }
    std::mt19937_64 rng(0x5eed);
    for (int t = 0; t < 24 && !found; ++t) {
      Vector l(n, FieldElement(field()));
      for (auto& x : l) x = FieldElement::random(field(), rng, 3);
      if (good(l)) found = l;
    }
  }
  std::lock_guard<std::mutex> lock(impl_->frobenius_mutex);
  if (!impl_->frobenius_done) {
    impl_->frobenius = found;
    impl_->frobenius_done = true;
  }
  return impl_->frobenius;
}

const std::string& Algebra::structure_fingerprint() const {
  std::call_once(impl_->fingerprint_flag, [this] {
    std::uint64_t h = 1469598103934665603ULL;
    auto mix = [&h](const std::string& s) {
      for (unsigned char ch : s) {
        h ^= ch;
        h *= 1099511628211ULL;
      }
      h ^= 0xff;
      h *= 1099511628211ULL;
    };
    mix(field().name());
    for (const auto& l : labels()) mix(l);
    for (const auto& u : unit()) mix(u.to_string());
    for (std::size_t p = 0; p < impl_->table.size(); ++p)
      for (const auto& t : impl_->table[p]) mix(std::to_string(p) + ":" + std::to_string(t.index) + "=" + t.coef.to_string());
    char buf[32];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    impl_->fingerprint = buf;
  });
  return impl_->fingerprint;
}

const std::vector<Vector>& Algebra::primitive_idempotents() const {
  std::call_once(impl_->idempotent_flag, [this] {
    try {
      impl_->idempotents = split_idempotents(*this);
    } catch (...) {
      impl_->idempotent_error = std::current_exception();
    }
  });
  if (impl_->idempotent_error) std::rethrow_exception(impl_->idempotent_error);
  return impl_->idempotents;
}

std::string format_element(const Algebra& a, const Vector& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i].is_zero()) continue;
    std::string c = v[i].to_string();
    bool negative = false;
    if (c.size() > 1 && c[0] == '-' && c.find(' ') == std::string::npos) {
      negative = true;
      c = c.substr(1);
    }
    if (c.find(' ') != std::string::npos) c = "(" + c + ")";
    const std::string& label = a.labels()[i];
    std::string term = label == "1" ? c : (c == "1" ? label : c + "*" + label);
    if (out.empty())
      out = negative ? "-" + term : term;
    else
      out += (negative ? " - " : " + ") + term;
  }
  return out.empty() ? "0" : out;
}

}  // namespace tatecoh
