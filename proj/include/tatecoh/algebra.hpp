#pragma once

// Finite dimensional associative unital algebras given by structure constants.

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "tatecoh/field.hpp"
#include "tatecoh/matrix.hpp"

namespace tatecoh {

struct Term {
  std::size_t index;
  FieldElement coef;
};
using SparseVector = std::vector<Term>;

SparseVector sparse_from_dense(const Vector& v);
Vector dense_from_sparse(const FieldDescriptor& field, std::size_t n, const SparseVector& v);

struct ValidationReport {
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};

// Jacobson radical with the data the module code needs.
struct Radical {
  std::vector<Vector> basis;            // echelon basis of J
  std::vector<Vector> ideal_generators; // J is the two-sided ideal they generate
  std::size_t nilpotency = 0;           // least m with J^m = 0
  std::string method;
};

// Word program: w_0 = 1, w_k = b_{gen} * w_{parent}. The words form a basis of A,
// so any element a equals sum_k (W^{-1} a)_k w_k.
struct WordProgram {
  struct Step {
    std::size_t generator;  // position in generators()
    std::size_t parent;
  };
  std::vector<Step> steps;  // steps[0] is the unit word (unused fields)
  Matrix words;             // column k = coordinates of w_k
  Matrix inverse;           // words^{-1}
};

class Algebra {
 public:
  Algebra() = default;

  // table[i * n + j] lists b_i b_j.
  static Algebra create(FieldDescriptor field, std::vector<std::string> labels, Vector unit,
                        std::vector<SparseVector> table);

  bool valid_handle() const { return static_cast<bool>(impl_); }
  const FieldDescriptor& field() const;
  std::size_t dim() const;
  const std::vector<std::string>& labels() const;
  const Vector& unit() const;
  const SparseVector& product(std::size_t i, std::size_t j) const;
  FieldElement structure(std::size_t i, std::size_t j, std::size_t k) const;

  Vector basis_vector(std::size_t i) const;
  Vector multiply(const Vector& a, const Vector& b) const;
  Vector power(const Vector& a, std::size_t e) const;
  // Matrices of x -> a x and x -> x a.
  Matrix left_multiplication(const Vector& a) const;
  Matrix right_multiplication(const Vector& a) const;

  ValidationReport validate() const;

  Algebra opposite() const;
  Algebra enveloping() const;
  friend Algebra tensor_algebra(const Algebra& a, const Algebra& b);

  // For tensor products: the two factors; otherwise empty handles.
  std::pair<Algebra, Algebra> tensor_factors() const;
  bool is_opposite_of(const Algebra& other) const;

  // Identity of the underlying structure (handles to the same algebra).
  bool same(const Algebra& other) const { return impl_ == other.impl_; }
  std::uintptr_t id() const { return reinterpret_cast<std::uintptr_t>(impl_.get()); }
  // Hash of field, labels, unit and structure constants.
  const std::string& structure_fingerprint() const;

  // Basis indices generating A as an algebra, and the derived word program.
  const std::vector<std::size_t>& generators() const;
  const WordProgram& words() const;
  // Coefficients of a in the word basis.
  Vector word_coordinates(const Vector& a) const;

  // Throws RadicalVerificationFailed if the computed candidate fails the checks.
  const Radical& radical() const;

  // A functional whose bilinear form lambda(ab) is nondegenerate; nullopt if the
  // search fails (the algebra may not be Frobenius).
  std::optional<Vector> frobenius_form() const;
  void set_frobenius_form(const Vector& lambda) const;
  // Gram matrix G_ij = lambda(b_i b_j).
  Matrix gram_matrix(const Vector& lambda) const;

  // Complete set of primitive orthogonal idempotents when A/J is split and
  // commutative; throws NotSplitCommutative otherwise.
  const std::vector<Vector>& primitive_idempotents() const;

  struct Impl;

 private:
  explicit Algebra(std::shared_ptr<Impl> impl) : impl_(std::move(impl)) {}
  std::shared_ptr<Impl> impl_;
};

Algebra tensor_algebra(const Algebra& a, const Algebra& b);

// "x + gx", "w*g - x", "0".
std::string format_element(const Algebra& a, const Vector& v);

}  // namespace tatecoh
