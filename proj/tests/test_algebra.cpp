#include "doctest.h"
#include "helpers.hpp"
#include "tatecoh/error.hpp"
#include "tatecoh/examples.hpp"

using namespace tatecoh;
using testing::vec;

namespace {

std::vector<SparseVector> table_of(const Algebra& a) {
  std::vector<SparseVector> t;
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) t.push_back(a.product(i, j));
  return t;
}

}  // namespace

TEST_CASE("bundled algebras satisfy the axioms") {
  for (const auto& name : builtin_names()) {
    CAPTURE(name);
    Input in = builtin(name);
    CHECK(in.algebra.validate().ok());
    if (in.hopf) CHECK(validate_hopf(*in.hopf).ok());
  }
}

TEST_CASE("broken associativity is reported with a witness") {
  auto f = FieldDescriptor::rationals();
  Algebra h = sweedler(f).algebra();
  auto t = table_of(h);
  t[1 * 4 + 1] = {{1, FieldElement::one(f)}};  // g g = g
  Algebra broken = Algebra::create(f, h.labels(), h.unit(), t);
  auto r = broken.validate();
  REQUIRE_FALSE(r.ok());
  CHECK(r.violations.front().find("g") != std::string::npos);
}

TEST_CASE("unit must act as identity") {
  auto f = FieldDescriptor::rationals();
  Algebra h = sweedler(f).algebra();
  Algebra bad = Algebra::create(f, h.labels(), vec(f, {"0", "1", "0", "0"}), table_of(h));
  CHECK_FALSE(bad.validate().ok());
}

TEST_CASE("radical dimensions") {
  auto q = FieldDescriptor::rationals();
  CHECK(sweedler(q).algebra().radical().basis.size() == 2);
  CHECK(sweedler(q).algebra().radical().nilpotency == 2);
  CHECK(taft(3, FieldDescriptor::cyclotomic(3)).algebra().radical().basis.size() == 6);
  CHECK(taft(3, FieldDescriptor::prime(7)).algebra().radical().nilpotency == 3);
  CHECK(cyclic_group_algebra(3, q).algebra().radical().basis.empty());
  CHECK(cyclic_group_algebra(2, FieldDescriptor::prime(2)).algebra().radical().basis.size() == 1);
  CHECK(cyclic_group_algebra(4, FieldDescriptor::prime(2)).algebra().radical().basis.size() == 3);
  CHECK(dual_numbers(q).radical().basis.size() == 1);
}

TEST_CASE("radical elements are nilpotent and span an ideal") {
  Algebra a = taft(3, FieldDescriptor::cyclotomic(3)).algebra();
  const auto& j = a.radical().basis;
  for (const auto& v : j) CHECK(is_zero(a.power(v, 3)));
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (const auto& v : j) {
      std::vector<Vector> ext = j;
      ext.push_back(a.multiply(a.basis_vector(i), v));
      ext.push_back(a.multiply(v, a.basis_vector(i)));
      CHECK(rank(Matrix::from_columns(a.field(), a.dim(), ext)) == j.size());
    }
}

TEST_CASE("opposite and enveloping algebras") {
  Algebra h = sweedler(FieldDescriptor::rationals()).algebra();
  Algebra op = h.opposite();
  CHECK(op.validate().ok());
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j)
      CHECK(op.multiply(op.basis_vector(i), op.basis_vector(j)) == h.multiply(h.basis_vector(j), h.basis_vector(i)));
  CHECK(op.opposite().structure_fingerprint() == h.structure_fingerprint());
  CHECK(op.is_opposite_of(h));
  Algebra e = h.enveloping();
  CHECK(e.dim() == 16);
  CHECK(e.validate().ok());
  CHECK(e.radical().basis.size() == 12);
}

TEST_CASE("frobenius forms are nondegenerate") {
  for (const auto& name : builtin_names()) {
    CAPTURE(name);
    Input in = builtin(name);
    auto lambda = in.algebra.frobenius_form();
    REQUIRE(lambda.has_value());
    CHECK(rank(in.algebra.gram_matrix(*lambda)) == in.algebra.dim());
  }
}

TEST_CASE("primitive idempotents") {
  auto check_set = [](const Algebra& a, std::size_t count) {
    const auto& es = a.primitive_idempotents();
    REQUIRE(es.size() == count);
    Vector sum = zero_vector(a.field(), a.dim());
    for (std::size_t i = 0; i < es.size(); ++i) {
      for (std::size_t k = 0; k < a.dim(); ++k) sum[k] += es[i][k];
      for (std::size_t j = 0; j < es.size(); ++j) {
        Vector p = a.multiply(es[i], es[j]);
        CHECK(p == (i == j ? es[i] : zero_vector(a.field(), a.dim())));
      }
    }
    CHECK(sum == a.unit());
  };
  check_set(sweedler(FieldDescriptor::rationals()).algebra(), 2);
  check_set(taft(3, FieldDescriptor::cyclotomic(3)).algebra(), 3);
  check_set(cyclic_group_algebra(3, FieldDescriptor::cyclotomic(3)).algebra(), 3);
  CHECK_THROWS_AS(cyclic_group_algebra(3, FieldDescriptor::rationals()).algebra().primitive_idempotents(), Error);
}

TEST_CASE("element formatting") {
  auto q = FieldDescriptor::rationals();
  Algebra h = sweedler(q).algebra();
  CHECK(format_element(h, vec(q, {"0", "0", "1", "1"})) == "x + gx");
  CHECK(format_element(h, vec(q, {"0", "0", "1", "-1"})) == "x - gx");
  CHECK(format_element(h, vec(q, {"0", "-2", "0", "0"})) == "-2*g");
  CHECK(format_element(h, zero_vector(q, 4)) == "0");
  auto c = FieldDescriptor::cyclotomic(3);
  Algebra t = taft(3, c).algebra();
  Vector v = zero_vector(c, 9);
  v[1] = FieldElement::parse(c, "w");
  v[3] = FieldElement::from_int(c, -1);
  CHECK(format_element(t, v) == "w*g - x");
}
