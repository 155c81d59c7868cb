#pragma once

// Dense exact linear algebra over a FieldDescriptor.

#include <cstddef>
#include <optional>
#include <vector>

#include "tatecoh/field.hpp"

namespace tatecoh {

using Vector = std::vector<FieldElement>;

Vector zero_vector(const FieldDescriptor& field, std::size_t n);
Vector unit_vector(const FieldDescriptor& field, std::size_t n, std::size_t i);
bool is_zero(const Vector& v);

class Matrix {
 public:
  Matrix() = default;
  Matrix(FieldDescriptor field, std::size_t rows, std::size_t cols);

  static Matrix identity(const FieldDescriptor& field, std::size_t n);
  static Matrix from_columns(const FieldDescriptor& field, std::size_t rows, const std::vector<Vector>& columns);
  static Matrix from_rows(const FieldDescriptor& field, std::size_t cols, const std::vector<Vector>& rows);

  const FieldDescriptor& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  FieldElement& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const FieldElement& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Vector column(std::size_t c) const;
  Vector row(std::size_t r) const;
  std::vector<Vector> columns() const;
  void set_column(std::size_t c, const Vector& v);

  Matrix transpose() const;
  bool is_zero() const;
  bool is_identity() const;

  Matrix operator*(const Matrix& rhs) const;
  Vector operator*(const Vector& v) const;
  Matrix operator+(const Matrix& rhs) const;
  Matrix operator-(const Matrix& rhs) const;
  Matrix scaled(const FieldElement& s) const;
  bool operator==(const Matrix& other) const;
  bool operator!=(const Matrix& other) const { return !(*this == other); }

  // Rows [r0, r0+nr) and columns [c0, c0+nc).
  Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;

  // Row-major entries, v[r * cols + c].
  Vector flatten() const { return data_; }
  static Matrix unflatten(const FieldDescriptor& field, std::size_t rows, std::size_t cols, const Vector& v);

 private:
  FieldDescriptor field_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<FieldElement> data_;
};

struct RrefResult {
  Matrix reduced;
  std::vector<std::size_t> pivots;
  std::size_t rank = 0;
};

// Gauss-Jordan with deterministic pivoting: the first nonzero entry in column
// order, searched top-down among the remaining rows.
RrefResult rref(const Matrix& m);
std::size_t rank(const Matrix& m);
// Columns form a basis of {x : M x = 0}; each basis vector has a 1 in its own
// free column and 0 in the other free columns.
Matrix kernel_basis(const Matrix& m);
// Columns of M at the pivot positions of rref(M).
Matrix image_basis(const Matrix& m);
// One solution of M x = b; throws NoSolution.
Vector solve(const Matrix& m, const Vector& b);
std::optional<Vector> try_solve(const Matrix& m, const Vector& b);
// X with M X = B, column by column; throws NoSolution.
Matrix solve_matrix(const Matrix& m, const Matrix& b);
Matrix inverse(const Matrix& m);
Matrix kronecker(const Matrix& a, const Matrix& b);
Matrix direct_sum(const Matrix& a, const Matrix& b);

// Incrementally built subspace of F^n kept in reduced row echelon form. Used
// for spans, membership tests, quotients and incremental linear systems.
class EchelonBasis {
 public:
  EchelonBasis() = default;
  EchelonBasis(FieldDescriptor field, std::size_t ambient);

  std::size_t ambient() const { return ambient_; }
  std::size_t dim() const { return rows_.size(); }
  const FieldDescriptor& field() const { return field_; }

  // Returns true if v was independent of the current span.
  bool add(const Vector& v);
  // Remainder of v after reduction by the basis; zero iff v is in the span.
  Vector reduce(Vector v) const;
  bool contains(const Vector& v) const;
  // Coordinates of v (assumed in the span) with respect to the echelon rows.
  Vector coordinates(const Vector& v) const;

  const std::vector<Vector>& rows() const { return rows_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }
  // Columns that carry no pivot; they index a basis of the quotient.
  std::vector<std::size_t> free_columns() const;
  // Basis of {x : r . x = 0 for every row r}, in kernel_basis normal form.
  std::vector<Vector> null_space() const;

 private:
  FieldDescriptor field_;
  std::size_t ambient_ = 0;
  std::vector<Vector> rows_;          // insertion order, fully reduced
  std::vector<std::size_t> pivots_;   // pivots_[i] is the pivot column of rows_[i]
  std::vector<long> pivot_row_;       // column -> row index or -1
};

}  // namespace tatecoh
