#pragma once

// Hopf algebra structure on top of an Algebra: axioms, integrals, the modular
// function, Nakayama automorphisms and the modules built from the Hopf data.

#include <memory>
#include <optional>
#include <vector>

#include "tatecoh/algebra.hpp"
#include "tatecoh/module.hpp"

namespace tatecoh {

struct CoTerm {
  FieldElement coef;
  std::size_t left;
  std::size_t right;
};
using Coproduct = std::vector<std::vector<CoTerm>>;  // Delta(b_i) = sum coef b_left (x) b_right

class HopfAlgebra {
 public:
  HopfAlgebra() = default;
  // antipode column c holds S(b_c).
  static HopfAlgebra create(Algebra algebra, Coproduct coproduct, Vector counit, Matrix antipode);

  bool valid_handle() const { return static_cast<bool>(impl_); }
  const Algebra& algebra() const;
  const FieldDescriptor& field() const;
  std::size_t dim() const;
  const Coproduct& coproduct() const;
  const Vector& counit() const;
  const Matrix& antipode() const;

  // Delta(a) in A (x) A, index j * dim + k.
  Vector apply_coproduct(const Vector& a) const;
  FieldElement apply_counit(const Vector& a) const;

  // A (x) A^op, built once per Hopf algebra.
  const Algebra& enveloping() const;
  // sigma(a) = sum a_1 (x) S(a_2) as a dim A^e x dim A matrix, verified to be an
  // injective algebra map.
  const Matrix& sigma() const;

  struct Impl;

 private:
  explicit HopfAlgebra(std::shared_ptr<Impl> impl) : impl_(std::move(impl)) {}
  std::shared_ptr<Impl> impl_;
};

ValidationReport validate_hopf(const HopfAlgebra& h);

// Product in A (x) A of elements given in j * dim + k coordinates.
Vector tensor_square_multiply(const Algebra& a, const Vector& x, const Vector& y);

Matrix antipode_inverse(const HopfAlgebra& h);
// Least m <= bound with S^m = id; nullopt if none (bound defaults to 2 dim^2).
std::optional<int> antipode_order(const HopfAlgebra& h, int bound = 0);

// Convolution product of functionals given by their values on the basis.
Vector convolution(const HopfAlgebra& h, const Vector& f, const Vector& g);
// Matrix of a -> a <- f = sum f(a_1) a_2.
Matrix left_hit_matrix(const HopfAlgebra& h, const Vector& f);
// Matrix of a -> f -> a = sum a_1 f(a_2).
Matrix right_hit_matrix(const HopfAlgebra& h, const Vector& f);

enum class Side { Left, Right };
enum class Where { Algebra, Dual };
std::vector<Vector> integrals(const HopfAlgebra& h, Side side, Where where);

// alpha with a t = alpha(a) t for a right integral t.
Vector modular_function(const HopfAlgebra& h);

struct Nakayama {
  Matrix matrix;  // column i holds nu(b_i)
  int order = 0;
};
Nakayama nakayama_via_modular(const HopfAlgebra& h);

// The functional is an integral of the dual with f * p = p(1) f under
// (p * q)(a) = sum p(a_1) q(a_2), which is a left integral for the product taken
// along the opposite coproduct. With it f(x b) = f(b nu(x)) holds for the nu of
// nakayama_via_modular.
struct FrobeniusData {
  Vector functional;
  Matrix gram;        // gram(i, j) = f(b_i b_j)
};
FrobeniusData hopf_frobenius_form(const HopfAlgebra& h);
Nakayama nakayama_via_frobenius(const HopfAlgebra& h);

struct NakayamaSquare {
  Matrix matrix;
  bool identity = false;
  bool matches_closed_form = false;  // nu^2 = (Sbar^4 a) <- alpha^2
};
NakayamaSquare nakayama_square(const HopfAlgebra& h);

// Order of an invertible matrix, up to bound; 0 if not reached.
int matrix_order(const Matrix& m, int bound);
bool is_algebra_automorphism(const Algebra& a, const Matrix& phi);

Module trivial_module(const HopfAlgebra& h);
Module adjoint_module(const HopfAlgebra& h);
Module counit_kernel_module(const HopfAlgebra& h);
// Inclusion k (+) Ker eps -> A^ad, (c, v) -> c 1 + v; an isomorphism of modules.
Matrix adjoint_splitting(const HopfAlgebra& h);
// (a . f)(m) = f(S(a) m), a left module over A.
Module hopf_dual_module(const HopfAlgebra& h, const Module& m);

// A as a left A^e-module: (a (x) b) m = a m b.
Module algebra_as_enveloping_module(const HopfAlgebra& h);
// A^e (x)_A M with A acting on A^e through sigma on the right.
Module induced_module(const HopfAlgebra& h, const Module& m);
// A^e as a left A^op-module by u . a = u sigma(a) (the right module of the enveloping
// algebra over A), and as a left A-module by a . u = sigma(a) u.
Module enveloping_right_restriction(const HopfAlgebra& h);
Module enveloping_left_restriction(const HopfAlgebra& h);

}  // namespace tatecoh
