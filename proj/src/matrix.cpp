#include "tatecoh/matrix.hpp"

#include "tatecoh/error.hpp"

namespace tatecoh {

Vector zero_vector(const FieldDescriptor& field, std::size_t n) { return Vector(n, FieldElement(field)); }

Vector unit_vector(const FieldDescriptor& field, std::size_t n, std::size_t i) {
  Vector v = zero_vector(field, n);
  v[i] = FieldElement::one(field);
  return v;
}

bool is_zero(const Vector& v) {
  for (const auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

Matrix::Matrix(FieldDescriptor field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols), data_(rows * cols, FieldElement(field)) {}

Matrix Matrix::identity(const FieldDescriptor& field, std::size_t n) {
  Matrix m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = FieldElement::one(field);
  return m;
}

Matrix Matrix::from_columns(const FieldDescriptor& field, std::size_t rows, const std::vector<Vector>& columns) {
  Matrix m(field, rows, columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) {
    if (columns[c].size() != rows) throw Error(ErrorCode::ShapeMismatch, "column length mismatch");
    for (std::size_t r = 0; r < rows; ++r) m(r, c) = columns[c][r];
  }
  return m;
}

Matrix Matrix::from_rows(const FieldDescriptor& field, std::size_t cols, const std::vector<Vector>& rows) {
  Matrix m(field, rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw Error(ErrorCode::ShapeMismatch, "row length mismatch");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

Vector Matrix::column(std::size_t c) const {
  Vector v;
  v.reserve(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v.push_back((*this)(r, c));
  return v;
}

Vector Matrix::row(std::size_t r) const {
  return Vector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

std::vector<Vector> Matrix::columns() const {
  std::vector<Vector> out;
  out.reserve(cols_);
  for (std::size_t c = 0; c < cols_; ++c) out.push_back(column(c));
  return out;
}

void Matrix::set_column(std::size_t c, const Vector& v) {
  if (v.size() != rows_) throw Error(ErrorCode::ShapeMismatch, "set_column length");
  for (std::size_t r = 0; r < rows_; ++r) (*this)(r, c) = v[r];
}

Matrix Matrix::transpose() const {
  Matrix t(field_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

bool Matrix::is_zero() const {
  for (const auto& x : data_)
    if (!x.is_zero()) return false;
  return true;
}

bool Matrix::is_identity() const {
  if (rows_ != cols_) return false;
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) {
      const auto& x = (*this)(r, c);
      if (r == c ? !x.is_one() : !x.is_zero()) return false;
    }
  return true;
}

Matrix Matrix::operator*(const Matrix& rhs) const {
  if (cols_ != rhs.rows_) throw Error(ErrorCode::ShapeMismatch, "matrix product");
  if (field_ != rhs.field_) throw Error(ErrorCode::MixedFields, "matrix product");
  Matrix out(field_, rows_, rhs.cols_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t k = 0; k < cols_; ++k) {
      const auto& a = (*this)(r, k);
      if (a.is_zero()) continue;
      for (std::size_t c = 0; c < rhs.cols_; ++c) {
        const auto& b = rhs(k, c);
        if (!b.is_zero()) out(r, c).sub_mul(-a, b);
      }
    }
  return out;
}

Vector Matrix::operator*(const Vector& v) const {
  if (cols_ != v.size()) throw Error(ErrorCode::ShapeMismatch, "matrix-vector product");
  Vector out = zero_vector(field_, rows_);
  for (std::size_t k = 0; k < cols_; ++k) {
    if (v[k].is_zero()) continue;
    const FieldElement neg = -v[k];
    for (std::size_t r = 0; r < rows_; ++r) {
      const auto& a = (*this)(r, k);
      if (!a.is_zero()) out[r].sub_mul(a, neg);
    }
  }
  return out;
}

Matrix Matrix::operator+(const Matrix& rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw Error(ErrorCode::ShapeMismatch, "matrix sum");
  Matrix out = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] += rhs.data_[i];
  return out;
}

Matrix Matrix::operator-(const Matrix& rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw Error(ErrorCode::ShapeMismatch, "matrix difference");
  Matrix out = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] -= rhs.data_[i];
  return out;
}

Matrix Matrix::scaled(const FieldElement& s) const {
  Matrix out = *this;
  for (auto& x : out.data_)
    if (!x.is_zero()) x *= s;
  return out;
}

bool Matrix::operator==(const Matrix& other) const {
  return rows_ == other.rows_ && cols_ == other.cols_ && field_ == other.field_ && data_ == other.data_;
}

Matrix Matrix::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
  if (r0 + nr > rows_ || c0 + nc > cols_) throw Error(ErrorCode::ShapeMismatch, "block out of range");
  Matrix out(field_, nr, nc);
  for (std::size_t r = 0; r < nr; ++r)
    for (std::size_t c = 0; c < nc; ++c) out(r, c) = (*this)(r0 + r, c0 + c);
  return out;
}

Matrix Matrix::unflatten(const FieldDescriptor& field, std::size_t rows, std::size_t cols, const Vector& v) {
  if (v.size() != rows * cols) throw Error(ErrorCode::ShapeMismatch, "unflatten");
  Matrix m(field, rows, cols);
  m.data_ = v;
  return m;
}

// ---------------------------------------------------------------------------

RrefResult rref(const Matrix& m) {
  RrefResult out{m, {}, 0};
  Matrix& a = out.reduced;
  const std::size_t rows = a.rows(), cols = a.cols();
  std::size_t lead = 0;
  std::vector<std::size_t> nz;
  for (std::size_t c = 0; c < cols && lead < rows; ++c) {
    std::size_t p = lead;
    while (p < rows && a(p, c).is_zero()) ++p;
    if (p == rows) continue;
    if (p != lead)
      for (std::size_t k = c; k < cols; ++k) std::swap(a(p, k), a(lead, k));
    const FieldElement inv = a(lead, c).inverse();
    nz.clear();
    for (std::size_t k = c; k < cols; ++k)
      if (!a(lead, k).is_zero()) {
        a(lead, k) *= inv;
        nz.push_back(k);
      }
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == lead || a(r, c).is_zero()) continue;
      const FieldElement f = a(r, c);
      for (std::size_t k : nz) a(r, k).sub_mul(f, a(lead, k));
    }
    out.pivots.push_back(c);
    ++lead;
  }
  out.rank = out.pivots.size();
  return out;
}

std::size_t rank(const Matrix& m) { return rref(m).rank; }

Matrix kernel_basis(const Matrix& m) {
  const auto r = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : r.pivots) is_pivot[p] = true;
  std::vector<Vector> cols;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    Vector v = unit_vector(m.field(), m.cols(), f);
    for (std::size_t i = 0; i < r.pivots.size(); ++i) v[r.pivots[i]] = -r.reduced(i, f);
    cols.push_back(std::move(v));
  }
  return Matrix::from_columns(m.field(), m.cols(), cols);
}

Matrix image_basis(const Matrix& m) {
  const auto r = rref(m);
  std::vector<Vector> cols;
  for (auto p : r.pivots) cols.push_back(m.column(p));
  return Matrix::from_columns(m.field(), m.rows(), cols);
}

std::optional<Vector> try_solve(const Matrix& m, const Vector& b) {
  if (b.size() != m.rows()) throw Error(ErrorCode::ShapeMismatch, "solve: rhs length");
  Matrix aug(m.field(), m.rows(), m.cols() + 1);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) aug(r, c) = m(r, c);
    aug(r, m.cols()) = b[r];
  }
  const auto red = rref(aug);
  Vector x = zero_vector(m.field(), m.cols());
  for (std::size_t i = 0; i < red.pivots.size(); ++i) {
    if (red.pivots[i] == m.cols()) return std::nullopt;
    x[red.pivots[i]] = red.reduced(i, m.cols());
  }
  return x;
}

Vector solve(const Matrix& m, const Vector& b) {
  auto x = try_solve(m, b);
  if (!x) throw Error(ErrorCode::NoSolution, "linear system is inconsistent");
  return *x;
}

Matrix solve_matrix(const Matrix& m, const Matrix& b) {
  if (b.rows() != m.rows()) throw Error(ErrorCode::ShapeMismatch, "solve_matrix");
  Matrix aug(m.field(), m.rows(), m.cols() + b.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) aug(r, c) = m(r, c);
    for (std::size_t c = 0; c < b.cols(); ++c) aug(r, m.cols() + c) = b(r, c);
  }
  const auto red = rref(aug);
  Matrix x(m.field(), m.cols(), b.cols());
  for (std::size_t i = 0; i < red.pivots.size(); ++i) {
    const std::size_t p = red.pivots[i];
    if (p >= m.cols()) throw Error(ErrorCode::NoSolution, "matrix equation is inconsistent");
    for (std::size_t c = 0; c < b.cols(); ++c) x(p, c) = red.reduced(i, m.cols() + c);
  }
  return x;
}

Matrix inverse(const Matrix& m) {
  if (m.rows() != m.cols()) throw Error(ErrorCode::ShapeMismatch, "inverse of a non-square matrix");
  const std::size_t n = m.rows();
  Matrix aug(m.field(), n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = m(r, c);
    aug(r, n + r) = FieldElement::one(m.field());
  }
  const auto red = rref(aug);
  if (red.rank < n || (n > 0 && red.pivots[n - 1] != n - 1))
    throw Error(ErrorCode::NotInvertible, "matrix is singular");
  return red.reduced.block(0, n, n, n);
}

Matrix kronecker(const Matrix& a, const Matrix& b) {
  if (a.field() != b.field()) throw Error(ErrorCode::MixedFields, "kronecker");
  Matrix out(a.field(), a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (a(i, j).is_zero()) continue;
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l)
          if (!b(k, l).is_zero()) out(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
    }
  return out;
}

Matrix direct_sum(const Matrix& a, const Matrix& b) {
  Matrix out(a.field(), a.rows() + b.rows(), a.cols() + b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) out(r, c) = a(r, c);
  for (std::size_t r = 0; r < b.rows(); ++r)
    for (std::size_t c = 0; c < b.cols(); ++c) out(a.rows() + r, a.cols() + c) = b(r, c);
  return out;
}

// ---------------------------------------------------------------------------

EchelonBasis::EchelonBasis(FieldDescriptor field, std::size_t ambient)
    : field_(field), ambient_(ambient), pivot_row_(ambient, -1) {}

Vector EchelonBasis::reduce(Vector v) const {
  if (v.size() != ambient_) throw Error(ErrorCode::ShapeMismatch, "echelon reduce");
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    const std::size_t p = pivots_[i];
    if (v[p].is_zero()) continue;
    const FieldElement f = v[p];
    const Vector& row = rows_[i];
    for (std::size_t k = 0; k < ambient_; ++k)
      if (!row[k].is_zero()) v[k].sub_mul(f, row[k]);
  }
  return v;
}

bool EchelonBasis::contains(const Vector& v) const { return tatecoh::is_zero(reduce(v)); }

bool EchelonBasis::add(const Vector& v) {
  Vector r = reduce(v);
  std::size_t p = 0;
  while (p < ambient_ && r[p].is_zero()) ++p;
  if (p == ambient_) return false;
  const FieldElement inv = r[p].inverse();
  for (auto& x : r)
    if (!x.is_zero()) x *= inv;
  for (auto& row : rows_) {
    if (row[p].is_zero()) continue;
    const FieldElement f = row[p];
    for (std::size_t k = 0; k < ambient_; ++k)
      if (!r[k].is_zero()) row[k].sub_mul(f, r[k]);
  }
  pivot_row_[p] = static_cast<long>(rows_.size());
  rows_.push_back(std::move(r));
  pivots_.push_back(p);
  return true;
}

Vector EchelonBasis::coordinates(const Vector& v) const {
  Vector c;
  c.reserve(rows_.size());
  for (auto p : pivots_) c.push_back(v[p]);
  return c;
}

std::vector<std::size_t> EchelonBasis::free_columns() const {
  std::vector<std::size_t> out;
  for (std::size_t c = 0; c < ambient_; ++c)
    if (pivot_row_[c] < 0) out.push_back(c);
  return out;
}

std::vector<Vector> EchelonBasis::null_space() const {
  std::vector<Vector> out;
  for (auto f : free_columns()) {
    Vector x = unit_vector(field_, ambient_, f);
    for (std::size_t i = 0; i < rows_.size(); ++i) x[pivots_[i]] = -rows_[i][f];
    out.push_back(std::move(x));
  }
  return out;
}

}  // namespace tatecoh
