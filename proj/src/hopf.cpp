#include "tatecoh/hopf.hpp"

#include <mutex>

#include "tatecoh/error.hpp"

namespace tatecoh {

struct HopfAlgebra::Impl {
  Algebra algebra;
  Coproduct coproduct;
  Vector counit;
  Matrix antipode;

  std::once_flag env_flag;
  Algebra enveloping;

  std::once_flag sigma_flag;
  Matrix sigma;
  std::exception_ptr sigma_error;
};

HopfAlgebra HopfAlgebra::create(Algebra algebra, Coproduct coproduct, Vector counit, Matrix antipode) {
  const std::size_t n = algebra.dim();
  if (coproduct.size() != n || counit.size() != n || antipode.rows() != n || antipode.cols() != n)
    throw Error(ErrorCode::ShapeMismatch, "Hopf data does not match the algebra dimension");
  for (const auto& d : coproduct)
    for (const auto& t : d)
      if (t.left >= n || t.right >= n) throw Error(ErrorCode::ShapeMismatch, "coproduct index out of range");
  auto impl = std::make_shared<Impl>();
  impl->algebra = std::move(algebra);
  impl->coproduct = std::move(coproduct);
  impl->counit = std::move(counit);
  impl->antipode = std::move(antipode);
  return HopfAlgebra(impl);
}

const Algebra& HopfAlgebra::algebra() const { return impl_->algebra; }
const FieldDescriptor& HopfAlgebra::field() const { return impl_->algebra.field(); }
std::size_t HopfAlgebra::dim() const { return impl_->algebra.dim(); }
const Coproduct& HopfAlgebra::coproduct() const { return impl_->coproduct; }
const Vector& HopfAlgebra::counit() const { return impl_->counit; }
const Matrix& HopfAlgebra::antipode() const { return impl_->antipode; }

Vector HopfAlgebra::apply_coproduct(const Vector& a) const {
  const std::size_t n = dim();
  Vector out = zero_vector(field(), n * n);
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i].is_zero()) continue;
    for (const auto& t : impl_->coproduct[i]) out[t.left * n + t.right] += a[i] * t.coef;
  }
  return out;
}

FieldElement HopfAlgebra::apply_counit(const Vector& a) const {
  FieldElement s(field());
  for (std::size_t i = 0; i < dim(); ++i)
    if (!a[i].is_zero()) s += a[i] * impl_->counit[i];
  return s;
}

const Algebra& HopfAlgebra::enveloping() const {
  std::call_once(impl_->env_flag, [this] { impl_->enveloping = impl_->algebra.enveloping(); });
  return impl_->enveloping;
}

const Matrix& HopfAlgebra::sigma() const {
  std::call_once(impl_->sigma_flag, [this] {
    try {
      const std::size_t n = dim();
      const Algebra& e = enveloping();
      const Matrix& s = antipode();
      Matrix sig(field(), n * n, n);
      for (std::size_t i = 0; i < n; ++i)
        for (const auto& t : coproduct()[i])
          for (std::size_t r = 0; r < n; ++r)
            if (!s(r, t.right).is_zero()) sig(t.left * n + r, i) += t.coef * s(r, t.right);
      if (sig * algebra().unit() != e.unit()) throw Error(ErrorCode::ValidationFailed, "sigma(1) is not the unit");
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
          Vector lhs = sig * algebra().multiply(algebra().basis_vector(i), algebra().basis_vector(j));
          if (lhs != e.multiply(sig.column(i), sig.column(j)))
            throw Error(ErrorCode::ValidationFailed, "sigma is not multiplicative");
        }
      if (rank(sig) != n) throw Error(ErrorCode::ValidationFailed, "sigma is not injective");
      impl_->sigma = std::move(sig);
    } catch (...) {
      impl_->sigma_error = std::current_exception();
    }
  });
  if (impl_->sigma_error) std::rethrow_exception(impl_->sigma_error);
  return impl_->sigma;
}

// ---------------------------------------------------------------------------

namespace {

void note(ValidationReport& rep, const std::string& s) {
  if (rep.violations.size() < 64) rep.violations.push_back(s);
}

std::string at(std::size_t i) { return " at b" + std::to_string(i); }

}  // namespace

Vector tensor_square_multiply(const Algebra& a, const Vector& x, const Vector& y) {
  const std::size_t n = a.dim();
  Vector out = zero_vector(a.field(), n * n);
  for (std::size_t p = 0; p < n * n; ++p) {
    if (x[p].is_zero()) continue;
    for (std::size_t q = 0; q < n * n; ++q) {
      if (y[q].is_zero()) continue;
      const FieldElement c = x[p] * y[q];
      for (const auto& s : a.product(p / n, q / n))
        for (const auto& t : a.product(p % n, q % n)) out[s.index * n + t.index] += c * s.coef * t.coef;
    }
  }
  return out;
}

ValidationReport validate_hopf(const HopfAlgebra& h) {
  ValidationReport rep;
  const Algebra& a = h.algebra();
  const auto& f = a.field();
  const std::size_t n = a.dim();
  const auto& delta = h.coproduct();
  const Matrix& s = h.antipode();
  for (std::size_t i = 0; i < n; ++i) {
    // coassociativity
    Vector lhs = zero_vector(f, n * n * n), rhs = zero_vector(f, n * n * n);
    for (const auto& t : delta[i]) {
      for (const auto& u : delta[t.left]) lhs[(u.left * n + u.right) * n + t.right] += t.coef * u.coef;
      for (const auto& u : delta[t.right]) rhs[t.left * n * n + u.left * n + u.right] += t.coef * u.coef;
    }
    if (lhs != rhs) note(rep, "coassociativity fails" + at(i));
    // counit
    Vector l = zero_vector(f, n), r = zero_vector(f, n);
    for (const auto& t : delta[i]) {
      l[t.right] += t.coef * h.counit()[t.left];
      r[t.left] += t.coef * h.counit()[t.right];
    }
    if (l != a.basis_vector(i) || r != a.basis_vector(i)) note(rep, "counit law fails" + at(i));
    // antipode
    Vector sl = zero_vector(f, n), sr = zero_vector(f, n);
    for (const auto& t : delta[i]) {
      Vector sa = s.column(t.left), sb = s.column(t.right);
      for (std::size_t k = 0; k < n; ++k) {
        if (!sa[k].is_zero())
          for (const auto& p : a.product(k, t.right)) sl[p.index] += t.coef * sa[k] * p.coef;
        if (!sb[k].is_zero())
          for (const auto& p : a.product(t.left, k)) sr[p.index] += t.coef * sb[k] * p.coef;
      }
    }
    Vector eps1 = a.unit();
    for (auto& x : eps1) x *= h.counit()[i];
    if (sl != eps1) note(rep, "antipode law S(a1)a2 = eps(a)1 fails" + at(i));
    if (sr != eps1) note(rep, "antipode law a1S(a2) = eps(a)1 fails" + at(i));
  }
  // unit and counit compatibility
  Vector one_one = zero_vector(f, n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) one_one[i * n + j] = a.unit()[i] * a.unit()[j];
  if (h.apply_coproduct(a.unit()) != one_one) note(rep, "coproduct of the unit is not 1 (x) 1");
  if (h.apply_counit(a.unit()) != FieldElement::one(f)) note(rep, "counit of the unit is not 1");
  // bialgebra axiom
  std::vector<Vector> d;
  for (std::size_t i = 0; i < n; ++i) d.push_back(h.apply_coproduct(a.basis_vector(i)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Vector prod = dense_from_sparse(f, n, a.product(i, j));
      if (h.apply_coproduct(prod) != tensor_square_multiply(a, d[i], d[j]))
        note(rep, "coproduct is not multiplicative at (b" + std::to_string(i) + ", b" + std::to_string(j) + ")");
      if (h.apply_counit(prod) != h.counit()[i] * h.counit()[j])
        note(rep, "counit is not multiplicative at (b" + std::to_string(i) + ", b" + std::to_string(j) + ")");
    }
  if (rank(s) != n) note(rep, "antipode is not invertible");
  return rep;
}

Matrix antipode_inverse(const HopfAlgebra& h) { return inverse(h.antipode()); }

int matrix_order(const Matrix& m, int bound) {
  Matrix p = m;
  for (int k = 1; k <= bound; ++k) {
    if (p.is_identity()) return k;
    p = p * m;
  }
  return 0;
}

std::optional<int> antipode_order(const HopfAlgebra& h, int bound) {
  if (bound <= 0) bound = static_cast<int>(2 * h.dim() * h.dim());
  int k = matrix_order(h.antipode(), bound);
  if (k == 0) return std::nullopt;
  return k;
}

Vector convolution(const HopfAlgebra& h, const Vector& f, const Vector& g) {
  Vector out = zero_vector(h.field(), h.dim());
  for (std::size_t i = 0; i < h.dim(); ++i)
    for (const auto& t : h.coproduct()[i]) out[i] += t.coef * f[t.left] * g[t.right];
  return out;
}

Matrix left_hit_matrix(const HopfAlgebra& h, const Vector& f) {
  Matrix m(h.field(), h.dim(), h.dim());
  for (std::size_t i = 0; i < h.dim(); ++i)
    for (const auto& t : h.coproduct()[i]) m(t.right, i) += t.coef * f[t.left];
  return m;
}

Matrix right_hit_matrix(const HopfAlgebra& h, const Vector& f) {
  Matrix m(h.field(), h.dim(), h.dim());
  for (std::size_t i = 0; i < h.dim(); ++i)
    for (const auto& t : h.coproduct()[i]) m(t.left, i) += t.coef * f[t.right];
  return m;
}

std::vector<Vector> integrals(const HopfAlgebra& h, Side side, Where where) {
  const Algebra& a = h.algebra();
  const auto& f = a.field();
  const std::size_t n = a.dim();
  std::vector<Vector> rows;
  for (std::size_t b = 0; b < n; ++b) {
    Matrix m(f, n, n);
    FieldElement scale(f);
    if (where == Where::Algebra) {
      m = side == Side::Left ? a.left_multiplication(a.basis_vector(b)) : a.right_multiplication(a.basis_vector(b));
      scale = h.counit()[b];
    } else {
      // (delta_b . f)(b_i) or (f . delta_b)(b_i)
      for (std::size_t i = 0; i < n; ++i)
        for (const auto& t : h.coproduct()[i]) {
          if (side == Side::Left && t.left == b) m(i, t.right) += t.coef;
          if (side == Side::Right && t.right == b) m(i, t.left) += t.coef;
        }
      scale = a.unit()[b];
    }
    for (std::size_t i = 0; i < n; ++i) {
      Vector r = m.row(i);
      r[i] -= scale;
      rows.push_back(std::move(r));
    }
  }
  return kernel_basis(Matrix::from_rows(f, n, rows)).columns();
}

namespace {

const Vector& single(const std::vector<Vector>& basis, const char* what) {
  if (basis.size() != 1)
    throw Error(ErrorCode::DimensionNotOne, std::string(what) + " has dimension " + std::to_string(basis.size()));
  return basis[0];
}

}  // namespace

Vector modular_function(const HopfAlgebra& h) {
  const Algebra& a = h.algebra();
  const auto& f = a.field();
  const std::size_t n = a.dim();
  const Vector t = single(integrals(h, Side::Right, Where::Algebra), "the space of right integrals");
  std::size_t p = 0;
  while (t[p].is_zero()) ++p;
  Vector alpha(n, FieldElement(f));
  for (std::size_t i = 0; i < n; ++i) {
    Vector v = a.multiply(a.basis_vector(i), t);
    FieldElement lambda = v[p] / t[p];
    for (std::size_t k = 0; k < n; ++k)
      if (v[k] != lambda * t[k]) throw Error(ErrorCode::NotEigenvector, "b" + std::to_string(i) + " t is not a multiple of t");
    alpha[i] = lambda;
  }
  FieldElement at_one(f);
  for (std::size_t i = 0; i < n; ++i) at_one += a.unit()[i] * alpha[i];
  if (at_one != FieldElement::one(f)) throw Error(ErrorCode::NotEigenvector, "alpha(1) is not 1");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      FieldElement v(f);
      for (const auto& s : a.product(i, j)) v += s.coef * alpha[s.index];
      if (v != alpha[i] * alpha[j]) throw Error(ErrorCode::NotEigenvector, "alpha is not multiplicative");
    }
  return alpha;
}

bool is_algebra_automorphism(const Algebra& a, const Matrix& phi) {
  const std::size_t n = a.dim();
  if (phi.rows() != n || phi.cols() != n || rank(phi) != n) return false;
  if (phi * a.unit() != a.unit()) return false;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (phi * dense_from_sparse(a.field(), n, a.product(i, j)) != a.multiply(phi.column(i), phi.column(j))) return false;
  return true;
}

namespace {

Nakayama finish_nakayama(const HopfAlgebra& h, Matrix nu) {
  if (!is_algebra_automorphism(h.algebra(), nu)) throw Error(ErrorCode::NotAutomorphism, "nu is not an algebra automorphism");
  const int bound = static_cast<int>(2 * h.dim());
  int order = matrix_order(nu, bound);
  if (order == 0 || bound % order != 0) throw Error(ErrorCode::NotAutomorphism, "the order of nu does not divide 2 dim A");
  return {std::move(nu), order};
}

}  // namespace

Nakayama nakayama_via_modular(const HopfAlgebra& h) {
  Matrix sbar = antipode_inverse(h);
  return finish_nakayama(h, sbar * sbar * left_hit_matrix(h, modular_function(h)));
}

FrobeniusData hopf_frobenius_form(const HopfAlgebra& h) {
  FrobeniusData d;
  d.functional = single(integrals(h, Side::Right, Where::Dual), "the space of integrals of the dual");
  d.gram = h.algebra().gram_matrix(d.functional);
  if (rank(d.gram) != h.dim()) throw Error(ErrorCode::DegenerateForm, "the Frobenius form is degenerate");
  return d;
}

Nakayama nakayama_via_frobenius(const HopfAlgebra& h) {
  auto d = hopf_frobenius_form(h);
  return finish_nakayama(h, inverse(d.gram) * d.gram.transpose());
}

NakayamaSquare nakayama_square(const HopfAlgebra& h) {
  NakayamaSquare out;
  Matrix nu = nakayama_via_modular(h).matrix;
  out.matrix = nu * nu;
  out.identity = out.matrix.is_identity();
  Vector alpha = modular_function(h);
  Matrix sbar = antipode_inverse(h);
  Matrix s4 = sbar * sbar * sbar * sbar;
  out.matches_closed_form = left_hit_matrix(h, convolution(h, alpha, alpha)) * s4 == out.matrix;
  return out;
}

// ---------------------------------------------------------------------------

Module trivial_module(const HopfAlgebra& h) {
  std::vector<Matrix> acts;
  for (std::size_t i = 0; i < h.dim(); ++i) {
    Matrix m(h.field(), 1, 1);
    m(0, 0) = h.counit()[i];
    acts.push_back(std::move(m));
  }
  return Module::from_basis_action(h.algebra(), acts);
}

Module adjoint_module(const HopfAlgebra& h) {
  const Algebra& a = h.algebra();
  const std::size_t n = a.dim();
  std::vector<Matrix> acts;
  for (std::size_t i = 0; i < n; ++i) {
    Matrix m(a.field(), n, n);
    for (const auto& t : h.coproduct()[i]) {
      Matrix lr = a.left_multiplication(a.basis_vector(t.left)) * a.right_multiplication(h.antipode().column(t.right));
      m = m + lr.scaled(t.coef);
    }
    acts.push_back(std::move(m));
  }
  Module out = Module::from_basis_action(a, acts);
  if (!out.validate().ok()) throw Error(ErrorCode::ValidationFailed, "adjoint action is not a module");
  return out;
}

namespace {

EchelonBasis counit_kernel(const HopfAlgebra& h) {
  Matrix row = Matrix::from_rows(h.field(), h.dim(), {h.counit()});
  EchelonBasis k(h.field(), h.dim());
  for (const auto& v : kernel_basis(row).columns()) k.add(v);
  return k;
}

}  // namespace

Module counit_kernel_module(const HopfAlgebra& h) {
  Module ad = adjoint_module(h);
  EchelonBasis k = counit_kernel(h);
  for (std::size_t g = 0; g < ad.generator_actions().size(); ++g)
    for (const auto& r : k.rows())
      if (!k.contains(ad.act_generator(g, r))) throw Error(ErrorCode::ValidationFailed, "Ker eps is not a submodule");
  return submodule(ad, k);
}

Matrix adjoint_splitting(const HopfAlgebra& h) {
  EchelonBasis k = counit_kernel(h);
  std::vector<Vector> cols{h.algebra().unit()};
  for (const auto& r : k.rows()) cols.push_back(r);
  Matrix m = Matrix::from_columns(h.field(), h.dim(), cols);
  Module sum = direct_sum(trivial_module(h), counit_kernel_module(h));
  if (!is_homomorphism(sum, adjoint_module(h), m) || rank(m) != h.dim())
    throw Error(ErrorCode::ValidationFailed, "k (+) Ker eps -> A^ad is not an isomorphism");
  return m;
}

Module hopf_dual_module(const HopfAlgebra& h, const Module& m) {
  std::vector<Matrix> acts;
  for (std::size_t i = 0; i < h.dim(); ++i) acts.push_back(m.action_of(h.antipode().column(i)).transpose());
  if (m.dim() == 0) return Module::zero(h.algebra());
  return Module::from_basis_action(h.algebra(), acts);
}

Module algebra_as_enveloping_module(const HopfAlgebra& h) {
  const Algebra& a = h.algebra();
  const Algebra& e = h.enveloping();
  const std::size_t n = a.dim();
  std::vector<Matrix> gens;
  for (auto g : e.generators())
    gens.push_back(a.left_multiplication(a.basis_vector(g / n)) * a.right_multiplication(a.basis_vector(g % n)));
  return Module::create(e, n, std::move(gens));
}

Module induced_module(const HopfAlgebra& h, const Module& m) {
  const Algebra& a = h.algebra();
  const Algebra& e = h.enveloping();
  const Matrix& sig = h.sigma();
  const std::size_t ne = e.dim(), dm = m.dim();
  const auto& f = a.field();
  std::vector<Matrix> gens;
  for (auto g : e.generators()) gens.push_back(kronecker(e.left_multiplication(e.basis_vector(g)), Matrix::identity(f, dm)));
  Module x = Module::create(e, ne * dm, std::move(gens));
  EchelonBasis rel(f, ne * dm);
  for (std::size_t u = 0; u < ne; ++u)
    for (std::size_t gi = 0; gi < a.generators().size(); ++gi) {
      const std::size_t g = a.generators()[gi];
      Vector us = e.multiply(e.basis_vector(u), sig.column(g));
      for (std::size_t q = 0; q < dm; ++q) {
        Vector v = zero_vector(f, ne * dm);
        for (std::size_t w = 0; w < ne; ++w)
          if (!us[w].is_zero()) v[w * dm + q] += us[w];
        Vector aq = m.act_generator(gi, unit_vector(f, dm, q));
        for (std::size_t r = 0; r < dm; ++r)
          if (!aq[r].is_zero()) v[u * dm + r] -= aq[r];
        rel.add(v);
      }
    }
  return quotient(x, rel);
}

Module enveloping_right_restriction(const HopfAlgebra& h) {
  Algebra op = h.algebra().opposite();
  const Algebra& e = h.enveloping();
  std::vector<Matrix> gens;
  for (auto g : op.generators()) gens.push_back(e.right_multiplication(h.sigma().column(g)));
  return Module::create(op, e.dim(), std::move(gens));
}

Module enveloping_left_restriction(const HopfAlgebra& h) {
  const Algebra& e = h.enveloping();
  std::vector<Matrix> gens;
  for (auto g : h.algebra().generators()) gens.push_back(e.left_multiplication(h.sigma().column(g)));
  return Module::create(h.algebra(), e.dim(), std::move(gens));
}

}  // namespace tatecoh
