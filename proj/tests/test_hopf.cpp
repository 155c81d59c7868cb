#include "doctest.h"
#include "helpers.hpp"
#include "tatecoh/error.hpp"
#include "tatecoh/examples.hpp"

using namespace tatecoh;
using testing::same_span;
using testing::vec;

namespace {

// Left integrals b t = eps(b) t (right: t b = eps(b) t) as a stacked kernel.
std::vector<Vector> brute_integrals(const HopfAlgebra& h, bool left) {
  const Algebra& a = h.algebra();
  const std::size_t n = a.dim();
  Matrix sys(a.field(), n * n, n);
  for (std::size_t b = 0; b < n; ++b) {
    Matrix m = left ? a.left_multiplication(a.basis_vector(b)) : a.right_multiplication(a.basis_vector(b));
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) sys(b * n + r, c) = m(r, c) - (r == c ? h.counit()[b] : FieldElement::zero(a.field()));
  }
  return kernel_basis(sys).columns();
}

// nu(a) = Sbar^2(a <- alpha), with a <- alpha = sum alpha(a_1) a_2 taken from the coproduct table.
Matrix closed_form_nu(const HopfAlgebra& h, const Vector& alpha) {
  const std::size_t n = h.dim();
  const auto& f = h.field();
  Matrix hit(f, n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (const auto& t : h.coproduct()[i]) hit(t.right, i) += t.coef * alpha[t.left];
  Matrix sbar = inverse(h.antipode());
  return sbar * sbar * hit;
}

FieldElement pairing(const Vector& f, const Vector& x) {
  FieldElement s = FieldElement::zero(x.front().field());
  for (std::size_t i = 0; i < x.size(); ++i) s += f[i] * x[i];
  return s;
}

HopfAlgebra h4() { return sweedler(FieldDescriptor::rationals()); }

}  // namespace

TEST_CASE("sweedler integrals and modular data") {
  auto q = FieldDescriptor::rationals();
  HopfAlgebra h = h4();
  auto left = integrals(h, Side::Left, Where::Algebra);
  auto right = integrals(h, Side::Right, Where::Algebra);
  CHECK(same_span(left, {vec(q, {"0", "0", "1", "1"})}));
  CHECK(same_span(right, {vec(q, {"0", "0", "1", "-1"})}));
  CHECK(same_span(left, brute_integrals(h, true)));
  CHECK(same_span(right, brute_integrals(h, false)));
  Vector alpha = modular_function(h);
  CHECK(alpha == vec(q, {"1", "-1", "0", "0"}));
  Nakayama nu = nakayama_via_modular(h);
  CHECK(nu.matrix.column(1) == vec(q, {"0", "-1", "0", "0"}));
  CHECK(nu.matrix.column(2) == vec(q, {"0", "0", "-1", "0"}));
  CHECK(nu.matrix.column(3) == vec(q, {"0", "0", "0", "1"}));
  CHECK(nu.order == 2);
  CHECK(antipode_order(h) == 4);
  CHECK(nakayama_square(h).identity);
}

TEST_CASE("modular function matches the brute force right integral") {
  for (const auto& name : builtin_names()) {
    Input in = builtin(name);
    if (!in.hopf) continue;
    CAPTURE(name);
    const HopfAlgebra& h = *in.hopf;
    auto t = brute_integrals(h, false);
    REQUIRE(t.size() == 1);
    Vector alpha = modular_function(h);
    const Algebra& a = h.algebra();
    for (std::size_t b = 0; b < a.dim(); ++b) {
      Vector bt = a.multiply(a.basis_vector(b), t[0]);
      Vector scaled = t[0];
      for (auto& x : scaled) x *= alpha[b];
      CHECK(bt == scaled);
    }
  }
}

TEST_CASE("both nakayama routes agree with the closed form") {
  for (const auto& name : builtin_names()) {
    Input in = builtin(name);
    if (!in.hopf) continue;
    CAPTURE(name);
    const HopfAlgebra& h = *in.hopf;
    Nakayama m = nakayama_via_modular(h);
    Nakayama f = nakayama_via_frobenius(h);
    CHECK(m.matrix == f.matrix);
    CHECK(m.matrix == closed_form_nu(h, modular_function(h)));
    CHECK(is_algebra_automorphism(h.algebra(), m.matrix));
    CHECK(nakayama_square(h).matches_closed_form);
  }
}

TEST_CASE("frobenius functional satisfies the twisted trace identity") {
  for (const auto& name : builtin_names()) {
    Input in = builtin(name);
    if (!in.hopf) continue;
    CAPTURE(name);
    const HopfAlgebra& h = *in.hopf;
    const Algebra& a = h.algebra();
    FrobeniusData fd = hopf_frobenius_form(h);
    CHECK(rank(fd.gram) == a.dim());
    Matrix nu = nakayama_via_modular(h).matrix;
    for (std::size_t x = 0; x < a.dim(); ++x)
      for (std::size_t b = 0; b < a.dim(); ++b) {
        auto lhs = pairing(fd.functional, a.multiply(a.basis_vector(x), a.basis_vector(b)));
        auto rhs = pairing(fd.functional, a.multiply(a.basis_vector(b), nu.column(x)));
        CHECK(lhs == rhs);
      }
  }
}

TEST_CASE("taft over the cyclotomic field and over F7") {
  for (auto f : {FieldDescriptor::cyclotomic(3), FieldDescriptor::prime(7)}) {
    CAPTURE(f.name());
    HopfAlgebra t = taft(3, f);
    const FieldElement w = f.characteristic() == 0 ? FieldElement::parse(f, "w") : FieldElement::from_int(f, 2);
    CHECK(w * w * w == FieldElement::one(f));
    CHECK(w != FieldElement::one(f));
    // sum_j x^2 g^j; the basis is g^i x^j at index i + 3 j
    const Algebra& a = t.algebra();
    Vector x2 = a.power(a.basis_vector(3), 2), sum = zero_vector(f, 9);
    for (std::size_t j = 0; j < 3; ++j) {
      Vector term = a.multiply(x2, a.power(a.basis_vector(1), j));
      for (std::size_t k = 0; k < 9; ++k) sum[k] += term[k];
    }
    CHECK(same_span(integrals(t, Side::Right, Where::Algebra), {sum}));
    CHECK_FALSE(same_span(integrals(t, Side::Left, Where::Algebra), {sum}));
    Vector alpha = modular_function(t);
    CHECK(alpha[1] == w);
    Matrix nu = nakayama_via_modular(t).matrix;
    Vector g = zero_vector(f, 9), x = zero_vector(f, 9);
    g[1] = w;
    x[3] = w;
    CHECK(nu.column(1) == g);
    CHECK(nu.column(3) == x);
    CHECK_FALSE(nakayama_square(t).identity);
    CHECK(antipode_order(t) == 6);
  }
}

TEST_CASE("group algebras") {
  HopfAlgebra z = cyclic_group_algebra(3, FieldDescriptor::rationals());
  auto q = z.field();
  CHECK(same_span(integrals(z, Side::Left, Where::Algebra), {vec(q, {"1", "1", "1"})}));
  CHECK(nakayama_via_modular(z).matrix.is_identity());
  CHECK(antipode_order(z) == 2);
  CHECK(antipode_order(builtin("kz2_f2").hopf.value()) == 1);
}

TEST_CASE("dual integrals") {
  HopfAlgebra h = h4();
  auto dl = integrals(h, Side::Left, Where::Dual);
  auto dr = integrals(h, Side::Right, Where::Dual);
  REQUIRE(dl.size() == 1);
  REQUIRE(dr.size() == 1);
  Vector eps = h.counit();
  for (std::size_t b = 0; b < h.dim(); ++b) {
    Vector p = zero_vector(h.field(), h.dim());
    p[b] = FieldElement::one(h.field());
    Vector l = convolution(h, p, dl[0]), r = convolution(h, dr[0], p);
    Vector pl = dl[0], pr = dr[0];
    FieldElement p1 = pairing(p, h.algebra().unit());
    for (auto& c : pl) c *= p1;
    for (auto& c : pr) c *= p1;
    CHECK(l == pl);
    CHECK(r == pr);
  }
}

TEST_CASE("adjoint splitting") {
  for (HopfAlgebra h : {h4(), taft(3, FieldDescriptor::cyclotomic(3))}) {
    Module ad = adjoint_module(h);
    Module sum = direct_sum(trivial_module(h), counit_kernel_module(h));
    Matrix s = adjoint_splitting(h);
    CHECK(is_homomorphism(sum, ad, s));
    CHECK(rank(s) == h.dim());
  }
}

TEST_CASE("enveloping modules") {
  HopfAlgebra h = h4();
  const Matrix& sigma = h.sigma();
  const Algebra& e = h.enveloping();
  CHECK(rank(sigma) == h.dim());
  for (std::size_t i = 0; i < h.dim(); ++i)
    for (std::size_t j = 0; j < h.dim(); ++j) {
      Vector ab = h.algebra().multiply(h.algebra().basis_vector(i), h.algebra().basis_vector(j));
      CHECK(sigma * Matrix::from_columns(h.field(), h.dim(), {ab}) ==
            Matrix::from_columns(h.field(), e.dim(), {e.multiply(sigma.column(i), sigma.column(j))}));
    }
  Module aa = algebra_as_enveloping_module(h);
  CHECK(aa.validate().ok());
  Module ind = induced_module(h, trivial_module(h));
  CHECK(ind.validate().ok());
  CHECK(modules_isomorphic(ind, aa).verdict == IsoVerdict::Isomorphic);
}

TEST_CASE("hopf axioms failures are reported") {
  HopfAlgebra h = h4();
  Matrix s = h.antipode();
  s(0, 2) = FieldElement::one(h.field());
  HopfAlgebra bad = HopfAlgebra::create(h.algebra(), h.coproduct(), h.counit(), s);
  CHECK_FALSE(validate_hopf(bad).ok());
  Vector eps = h.counit();
  eps[2] = FieldElement::one(h.field());
  CHECK_FALSE(validate_hopf(HopfAlgebra::create(h.algebra(), h.coproduct(), eps, h.antipode())).ok());
}
