#pragma once

// Exact scalars over Q, F_p and the cyclotomic fields Q(zeta_N).
//
// A FieldDescriptor is a handle to an interned, immutable field context, so two
// descriptors compare equal iff they describe the same field. FieldElement is a
// small value type whose payload is always kept in canonical form:
//   * Q and Q(zeta_N): coefficient vector of a polynomial in w of degree
//     < phi(N), reduced mod Phi_N, trailing zeros trimmed (zero is empty);
//     Q itself is treated as Q(zeta_1).
//   * F_p: residue in [0, p).

#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <random>
#include <string>
#include <string_view>
#include <vector>

namespace tatecoh {

enum class FieldKind { Rationals, PrimeField, Cyclotomic };

namespace detail {
struct FieldContext;
}

class FieldDescriptor {
 public:
  FieldDescriptor();  // the rationals

  static FieldDescriptor rationals();
  static FieldDescriptor prime(std::int64_t p);
  static FieldDescriptor cyclotomic(std::int64_t n);

  FieldKind kind() const;
  std::int64_t characteristic() const;
  // p for prime fields, N for cyclotomic fields, 1 for Q.
  std::int64_t parameter() const;
  // phi(N) for cyclotomic fields, 1 otherwise.
  std::size_t degree() const;
  // Phi_N for cyclotomic fields (x - 1 for Q), constant term first.
  const std::vector<std::int64_t>& modulus() const;

  std::string name() const;

  bool operator==(const FieldDescriptor& other) const { return ctx_ == other.ctx_; }
  bool operator!=(const FieldDescriptor& other) const { return ctx_ != other.ctx_; }

  const detail::FieldContext* context() const { return ctx_; }

 private:
  explicit FieldDescriptor(const detail::FieldContext* ctx) : ctx_(ctx) {}
  const detail::FieldContext* ctx_;
};

// Phi_N with integer coefficients, constant term first; computed by dividing
// x^N - 1 by Phi_d for every proper divisor d of N.
std::vector<std::int64_t> cyclotomic_polynomial(std::int64_t n);
std::int64_t euler_phi(std::int64_t n);
bool is_prime(std::int64_t n);

class FieldElement {
 public:
  FieldElement() = default;  // zero of Q
  explicit FieldElement(const FieldDescriptor& field);

  static FieldElement zero(const FieldDescriptor& field) { return FieldElement(field); }
  static FieldElement one(const FieldDescriptor& field) { return from_int(field, 1); }
  static FieldElement from_int(const FieldDescriptor& field, std::int64_t value);
  static FieldElement from_rational(const FieldDescriptor& field, const mpq_class& value);
  // The generator w of Q(zeta_N); for other fields this is an error.
  static FieldElement generator(const FieldDescriptor& field);
  // Coefficients of a polynomial in w (constant first); reduced on entry.
  static FieldElement from_coefficients(const FieldDescriptor& field, std::vector<mpq_class> coeffs);
  // Parses the scalar syntax of the field: "a/b" or "a" for Q; decimal
  // residues for F_p; polynomial strings in w such as "1 - 2/3*w + w^2".
  static FieldElement parse(const FieldDescriptor& field, std::string_view text);
  // Small random element; used by seeded searches.
  static FieldElement random(const FieldDescriptor& field, std::mt19937_64& rng, int bound = 3);

  FieldDescriptor field() const;

  bool is_zero() const { return residue_ == 0 && coeffs_.empty(); }
  bool is_one() const;

  FieldElement operator-() const;
  FieldElement& operator+=(const FieldElement& rhs);
  FieldElement& operator-=(const FieldElement& rhs);
  FieldElement& operator*=(const FieldElement& rhs);
  FieldElement& operator/=(const FieldElement& rhs);
  // *this -= a * b, the inner step of every elimination loop.
  void sub_mul(const FieldElement& a, const FieldElement& b);

  FieldElement inverse() const;
  FieldElement pow(std::int64_t exponent) const;

  friend FieldElement operator+(FieldElement a, const FieldElement& b) { return a += b; }
  friend FieldElement operator-(FieldElement a, const FieldElement& b) { return a -= b; }
  friend FieldElement operator*(FieldElement a, const FieldElement& b) { return a *= b; }
  friend FieldElement operator/(FieldElement a, const FieldElement& b) { return a /= b; }

  bool operator==(const FieldElement& other) const;
  bool operator!=(const FieldElement& other) const { return !(*this == other); }

  // Canonical string in the field's scalar syntax (parse(to_string()) == *this).
  std::string to_string() const;

  // Payload access, mostly for tests and hashing.
  std::int64_t residue() const { return residue_; }
  const std::vector<mpq_class>& coefficients() const { return coeffs_; }

 private:
  void check_same(const FieldElement& other) const;
  void reduce();

  const detail::FieldContext* ctx_ = nullptr;  // nullptr means Q
  std::int64_t residue_ = 0;
  std::vector<mpq_class> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const FieldElement& x);

// A primitive n-th root of unity in the field; NoPrimitiveRoot if none exists.
FieldElement primitive_root_of_unity(const FieldDescriptor& field, std::int64_t n);

}  // namespace tatecoh
