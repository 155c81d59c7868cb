#include "tatecoh/field.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <memory>
#include <mutex>
#include <ostream>
#include <sstream>

#include "tatecoh/error.hpp"

namespace tatecoh {

namespace detail {

struct FieldContext {
  FieldKind kind;
  std::int64_t param;  // p, N, or 1
  std::size_t degree;  // phi(N) or 1
  std::vector<std::int64_t> modulus;
};

namespace {

std::mutex& registry_mutex() {
  static std::mutex m;
  return m;
}

// Contexts are interned for the lifetime of the process; descriptors are plain
// pointers into this registry.
std::map<std::pair<int, std::int64_t>, std::unique_ptr<FieldContext>>& registry() {
  static std::map<std::pair<int, std::int64_t>, std::unique_ptr<FieldContext>> r;
  return r;
}

const FieldContext* intern(FieldKind kind, std::int64_t param) {
  std::lock_guard lock(registry_mutex());
  auto key = std::make_pair(static_cast<int>(kind), param);
  auto& slot = registry()[key];
  if (!slot) {
    auto ctx = std::make_unique<FieldContext>();
    ctx->kind = kind;
    ctx->param = param;
    if (kind == FieldKind::Cyclotomic) {
      ctx->modulus = cyclotomic_polynomial(param);
      ctx->degree = ctx->modulus.size() - 1;
    } else if (kind == FieldKind::Rationals) {
      ctx->modulus = {-1, 1};
      ctx->degree = 1;
    } else {
      ctx->degree = 1;
    }
    slot = std::move(ctx);
  }
  return slot.get();
}

const FieldContext* rationals_ctx() {
  static const FieldContext* ctx = intern(FieldKind::Rationals, 1);
  return ctx;
}

const FieldContext* norm(const FieldContext* ctx) { return ctx ? ctx : rationals_ctx(); }

bool is_modular(const FieldContext* ctx) { return ctx && ctx->kind == FieldKind::PrimeField; }

std::int64_t mod_mul(std::int64_t a, std::int64_t b, std::int64_t p) {
  return static_cast<std::int64_t>((static_cast<__int128>(a) * b) % p);
}

std::int64_t mod_pow(std::int64_t a, std::int64_t e, std::int64_t p) {
  std::int64_t r = 1 % p;
  a %= p;
  while (e > 0) {
    if (e & 1) r = mod_mul(r, a, p);
    a = mod_mul(a, a, p);
    e >>= 1;
  }
  return r;
}

void trim(std::vector<mpq_class>& c) {
  while (!c.empty() && c.back() == 0) c.pop_back();
}

// Polynomial helpers over Q, constant term first.
using Poly = std::vector<mpq_class>;

void poly_divmod(const Poly& a, const Poly& b, Poly& q, Poly& r) {
  r = a;
  trim(r);
  q.assign(r.size() >= b.size() ? r.size() - b.size() + 1 : 0, mpq_class(0));
  const mpq_class lead = b.back();
  while (!r.empty() && r.size() >= b.size()) {
    const std::size_t shift = r.size() - b.size();
    mpq_class c = r.back() / lead;
    q[shift] = c;
    for (std::size_t i = 0; i < b.size(); ++i) r[shift + i] -= c * b[i];
    trim(r);
  }
  trim(q);
}

Poly poly_mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly out(a.size() + b.size() - 1, mpq_class(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  trim(out);
  return out;
}

Poly poly_sub(const Poly& a, const Poly& b) {
  Poly out(std::max(a.size(), b.size()), mpq_class(0));
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] -= b[i];
  trim(out);
  return out;
}

}  // namespace
}  // namespace detail

using detail::FieldContext;

const char* error_code_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::MixedFields: return "MixedFields";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::NoPrimitiveRoot: return "NoPrimitiveRoot";
    case ErrorCode::InvalidField: return "InvalidField";
    case ErrorCode::ShapeMismatch: return "ShapeMismatch";
    case ErrorCode::NotInvertible: return "NotInvertible";
    case ErrorCode::NoSolution: return "NoSolution";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::ValidationFailed: return "ValidationFailed";
    case ErrorCode::BadCharacteristic: return "BadCharacteristic";
    case ErrorCode::DimensionNotOne: return "DimensionNotOne";
    case ErrorCode::NotEigenvector: return "NotEigenvector";
    case ErrorCode::NotAutomorphism: return "NotAutomorphism";
    case ErrorCode::DegenerateForm: return "DegenerateForm";
    case ErrorCode::RadicalVerificationFailed: return "RadicalVerificationFailed";
    case ErrorCode::NotSplitCommutative: return "NotSplitCommutative";
    case ErrorCode::ExactnessFailure: return "ExactnessFailure";
    case ErrorCode::DegreeOutsideWindow: return "DegreeOutsideWindow";
    case ErrorCode::IsoUndecided: return "IsoUndecided";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

// ---------------------------------------------------------------------------
// Number theory helpers

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::int64_t euler_phi(std::int64_t n) {
  std::int64_t result = n;
  for (std::int64_t p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      result -= result / p;
    }
  }
  if (n > 1) result -= result / n;
  return result;
}

std::vector<std::int64_t> cyclotomic_polynomial(std::int64_t n) {
  if (n < 1) throw Error(ErrorCode::InvalidField, "cyclotomic index must be >= 1");
  // x^n - 1 divided by every Phi_d, d | n, d < n. All divisors are monic with
  // integer coefficients, so the division is exact over Z.
  std::vector<std::int64_t> num(static_cast<std::size_t>(n) + 1, 0);
  num[0] = -1;
  num[static_cast<std::size_t>(n)] = 1;
  for (std::int64_t d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    const auto den = cyclotomic_polynomial(d);
    std::vector<std::int64_t> quot(num.size() - den.size() + 1, 0);
    std::vector<std::int64_t> rem = num;
    for (std::size_t s = quot.size(); s-- > 0;) {
      const std::int64_t c = rem[s + den.size() - 1];
      quot[s] = c;
      for (std::size_t i = 0; i < den.size(); ++i) rem[s + i] -= c * den[i];
    }
    num = std::move(quot);
  }
  return num;
}

// ---------------------------------------------------------------------------
// FieldDescriptor

FieldDescriptor::FieldDescriptor() : ctx_(detail::rationals_ctx()) {}

FieldDescriptor FieldDescriptor::rationals() { return FieldDescriptor(detail::rationals_ctx()); }

FieldDescriptor FieldDescriptor::prime(std::int64_t p) {
  if (!is_prime(p)) throw Error(ErrorCode::InvalidField, std::to_string(p) + " is not prime");
  if (p > (std::int64_t{1} << 31)) throw Error(ErrorCode::InvalidField, "prime too large");
  return FieldDescriptor(detail::intern(FieldKind::PrimeField, p));
}

FieldDescriptor FieldDescriptor::cyclotomic(std::int64_t n) {
  if (n < 1) throw Error(ErrorCode::InvalidField, "cyclotomic index must be >= 1");
  return FieldDescriptor(detail::intern(FieldKind::Cyclotomic, n));
}

FieldKind FieldDescriptor::kind() const { return ctx_->kind; }
std::int64_t FieldDescriptor::characteristic() const {
  return ctx_->kind == FieldKind::PrimeField ? ctx_->param : 0;
}
std::int64_t FieldDescriptor::parameter() const { return ctx_->param; }
std::size_t FieldDescriptor::degree() const { return ctx_->degree; }
const std::vector<std::int64_t>& FieldDescriptor::modulus() const { return ctx_->modulus; }

std::string FieldDescriptor::name() const {
  switch (ctx_->kind) {
    case FieldKind::Rationals: return "Q";
    case FieldKind::PrimeField: return "F_" + std::to_string(ctx_->param);
    case FieldKind::Cyclotomic: return "Q(zeta_" + std::to_string(ctx_->param) + ")";
  }
  return "?";
}

// ---------------------------------------------------------------------------
// FieldElement

FieldElement::FieldElement(const FieldDescriptor& field) : ctx_(field.context()) {}

FieldDescriptor FieldElement::field() const {
  const FieldContext* c = detail::norm(ctx_);
  switch (c->kind) {
    case FieldKind::Rationals: return FieldDescriptor::rationals();
    case FieldKind::PrimeField: return FieldDescriptor::prime(c->param);
    case FieldKind::Cyclotomic: return FieldDescriptor::cyclotomic(c->param);
  }
  return FieldDescriptor::rationals();
}

FieldElement FieldElement::from_int(const FieldDescriptor& field, std::int64_t value) {
  FieldElement x(field);
  if (field.kind() == FieldKind::PrimeField) {
    const std::int64_t p = field.parameter();
    x.residue_ = ((value % p) + p) % p;
  } else if (value != 0) {
    x.coeffs_.emplace_back(static_cast<long>(value));
    x.reduce();
  }
  return x;
}

FieldElement FieldElement::from_rational(const FieldDescriptor& field, const mpq_class& value) {
  FieldElement x(field);
  if (field.kind() == FieldKind::PrimeField) {
    const std::int64_t p = field.parameter();
    mpz_class num = value.get_num() % p;
    mpz_class den = value.get_den() % p;
    if (den == 0) throw Error(ErrorCode::DivisionByZero, "denominator divisible by p");
    const std::int64_t n = ((num.get_si() % p) + p) % p;
    const std::int64_t d = ((den.get_si() % p) + p) % p;
    x.residue_ = detail::mod_mul(n, detail::mod_pow(d, p - 2, p), p);
  } else if (value != 0) {
    x.coeffs_.push_back(value);
    x.reduce();
  }
  return x;
}

FieldElement FieldElement::generator(const FieldDescriptor& field) {
  if (field.kind() != FieldKind::Cyclotomic)
    throw Error(ErrorCode::InvalidArgument, "generator w exists only in cyclotomic fields");
  return from_coefficients(field, {mpq_class(0), mpq_class(1)});
}

FieldElement FieldElement::from_coefficients(const FieldDescriptor& field, std::vector<mpq_class> coeffs) {
  if (field.kind() == FieldKind::PrimeField) {
    if (coeffs.size() > 1)
      for (std::size_t i = 1; i < coeffs.size(); ++i)
        if (coeffs[i] != 0) throw Error(ErrorCode::InvalidArgument, "prime field elements have no w-part");
    return coeffs.empty() ? FieldElement(field) : from_rational(field, coeffs[0]);
  }
  FieldElement x(field);
  x.coeffs_ = std::move(coeffs);
  for (auto& c : x.coeffs_) c.canonicalize();
  x.reduce();
  return x;
}

void FieldElement::reduce() {
  const FieldContext* c = detail::norm(ctx_);
  if (c->kind == FieldKind::PrimeField) return;
  detail::trim(coeffs_);
  const std::size_t deg = c->degree;
  if (coeffs_.size() <= deg) return;
  const auto& m = c->modulus;  // monic, size deg + 1
  for (std::size_t top = coeffs_.size(); top-- > deg;) {
    if (coeffs_[top] == 0) continue;
    const mpq_class lead = coeffs_[top];
    const std::size_t shift = top - deg;
    for (std::size_t i = 0; i < deg; ++i)
      if (m[i] != 0) coeffs_[shift + i] -= lead * static_cast<long>(m[i]);
    coeffs_[top] = 0;
  }
  coeffs_.resize(deg);
  detail::trim(coeffs_);
}

void FieldElement::check_same(const FieldElement& other) const {
  if (detail::norm(ctx_) != detail::norm(other.ctx_))
    throw Error(ErrorCode::MixedFields, field().name() + " vs " + other.field().name());
}

bool FieldElement::is_one() const {
  if (detail::is_modular(ctx_)) return residue_ == 1;
  return coeffs_.size() == 1 && coeffs_[0] == 1;
}

FieldElement FieldElement::operator-() const {
  FieldElement r = *this;
  if (detail::is_modular(ctx_)) {
    if (r.residue_ != 0) r.residue_ = ctx_->param - r.residue_;
  } else {
    for (auto& c : r.coeffs_) c = -c;
  }
  return r;
}

FieldElement& FieldElement::operator+=(const FieldElement& rhs) {
  check_same(rhs);
  if (detail::is_modular(ctx_)) {
    residue_ += rhs.residue_;
    if (residue_ >= ctx_->param) residue_ -= ctx_->param;
    return *this;
  }
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  detail::trim(coeffs_);
  return *this;
}

FieldElement& FieldElement::operator-=(const FieldElement& rhs) {
  check_same(rhs);
  if (detail::is_modular(ctx_)) {
    residue_ -= rhs.residue_;
    if (residue_ < 0) residue_ += ctx_->param;
    return *this;
  }
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  detail::trim(coeffs_);
  return *this;
}

FieldElement& FieldElement::operator*=(const FieldElement& rhs) {
  check_same(rhs);
  if (detail::is_modular(ctx_)) {
    residue_ = detail::mod_mul(residue_, rhs.residue_, ctx_->param);
    return *this;
  }
  if (coeffs_.empty()) return *this;
  if (rhs.coeffs_.empty()) {
    coeffs_.clear();
    return *this;
  }
  if (coeffs_.size() == 1 && rhs.coeffs_.size() == 1) {
    coeffs_[0] *= rhs.coeffs_[0];
    return *this;
  }
  coeffs_ = detail::poly_mul(coeffs_, rhs.coeffs_);
  reduce();
  return *this;
}

void FieldElement::sub_mul(const FieldElement& a, const FieldElement& b) {
  if (a.is_zero() || b.is_zero()) return;
  check_same(a);
  check_same(b);
  if (detail::is_modular(ctx_)) {
    residue_ -= detail::mod_mul(a.residue_, b.residue_, ctx_->param);
    if (residue_ < 0) residue_ += ctx_->param;
    return;
  }
  thread_local mpq_class t;
  if (a.coeffs_.size() == 1 && b.coeffs_.size() == 1) {
    if (coeffs_.empty()) coeffs_.emplace_back(0);
    mpq_mul(t.get_mpq_t(), a.coeffs_[0].get_mpq_t(), b.coeffs_[0].get_mpq_t());
    coeffs_[0] -= t;
    detail::trim(coeffs_);
    return;
  }
  // product into a scratch buffer, reduced mod Phi_N, then subtracted
  thread_local std::vector<mpq_class> scratch;
  const FieldContext* c = detail::norm(ctx_);
  const std::size_t deg = c->degree;
  const std::size_t len = a.coeffs_.size() + b.coeffs_.size() - 1;
  if (scratch.size() < len) scratch.resize(len);
  for (std::size_t i = 0; i < len; ++i) scratch[i] = 0;
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (sgn(a.coeffs_[i]) == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      if (sgn(b.coeffs_[j]) == 0) continue;
      mpq_mul(t.get_mpq_t(), a.coeffs_[i].get_mpq_t(), b.coeffs_[j].get_mpq_t());
      mpq_add(scratch[i + j].get_mpq_t(), scratch[i + j].get_mpq_t(), t.get_mpq_t());
    }
  }
  const auto& m = c->modulus;
  for (std::size_t top = len; top-- > deg;) {
    if (sgn(scratch[top]) == 0) continue;
    const std::size_t shift = top - deg;
    for (std::size_t i = 0; i < deg; ++i) {
      if (m[i] == 0) continue;
      if (m[i] == 1)
        mpq_sub(scratch[shift + i].get_mpq_t(), scratch[shift + i].get_mpq_t(), scratch[top].get_mpq_t());
      else if (m[i] == -1)
        mpq_add(scratch[shift + i].get_mpq_t(), scratch[shift + i].get_mpq_t(), scratch[top].get_mpq_t());
      else
        scratch[shift + i] -= scratch[top] * static_cast<long>(m[i]);
    }
  }
  const std::size_t keep = std::min(len, deg);
  if (coeffs_.size() < keep) coeffs_.resize(keep);
  for (std::size_t i = 0; i < keep; ++i)
    if (sgn(scratch[i]) != 0) mpq_sub(coeffs_[i].get_mpq_t(), coeffs_[i].get_mpq_t(), scratch[i].get_mpq_t());
  detail::trim(coeffs_);
}

FieldElement FieldElement::inverse() const {
  if (is_zero()) throw Error(ErrorCode::DivisionByZero, "inverse of zero");
  if (detail::is_modular(ctx_)) {
    FieldElement r = *this;
    r.residue_ = detail::mod_pow(residue_, ctx_->param - 2, ctx_->param);
    return r;
  }
  if (coeffs_.size() == 1) {
    FieldElement r = *this;
    r.coeffs_[0] = 1 / coeffs_[0];
    return r;
  }
  // Extended Euclid on (payload, Phi_N); Phi_N is irreducible so the gcd is a
  // nonzero constant.
  const FieldContext* c = detail::norm(ctx_);
  detail::Poly m;
  for (auto v : c->modulus) m.emplace_back(static_cast<long>(v));
  detail::Poly r0 = m, r1 = coeffs_;
  detail::Poly s0, s1{mpq_class(1)};
  while (r1.size() > 1) {
    detail::Poly q, r;
    detail::poly_divmod(r0, r1, q, r);
    detail::Poly s = detail::poly_sub(s0, detail::poly_mul(q, s1));
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s);
  }
  if (r1.empty()) throw Error(ErrorCode::DivisionByZero, "non-invertible cyclotomic element");
  const mpq_class inv = 1 / r1[0];
  for (auto& v : s1) v *= inv;
  FieldElement out(field());
  out.coeffs_ = std::move(s1);
  out.reduce();
  return out;
}

FieldElement& FieldElement::operator/=(const FieldElement& rhs) {
  check_same(rhs);
  if (rhs.is_zero()) throw Error(ErrorCode::DivisionByZero, "division by zero");
  return *this *= rhs.inverse();
}

FieldElement FieldElement::pow(std::int64_t exponent) const {
  FieldElement base = exponent < 0 ? inverse() : *this;
  std::int64_t e = exponent < 0 ? -exponent : exponent;
  FieldElement result = one(field());
  while (e > 0) {
    if (e & 1) result *= base;
    base *= base;
    e >>= 1;
  }
  return result;
}

bool FieldElement::operator==(const FieldElement& other) const {
  if (detail::norm(ctx_) != detail::norm(other.ctx_)) return false;
  return residue_ == other.residue_ && coeffs_ == other.coeffs_;
}

std::string FieldElement::to_string() const {
  const FieldContext* c = detail::norm(ctx_);
  if (c->kind == FieldKind::PrimeField) return std::to_string(residue_);
  if (coeffs_.empty()) return "0";
  if (c->kind == FieldKind::Rationals) return coeffs_[0].get_str();
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const mpq_class& q = coeffs_[i];
    if (q == 0) continue;
    const bool negative = q < 0;
    const mpq_class mag = negative ? mpq_class(-q) : q;
    if (first) {
      if (negative) os << "-";
    } else {
      os << (negative ? " - " : " + ");
    }
    if (i == 0) {
      os << mag.get_str();
    } else {
      if (mag != 1) os << mag.get_str() << "*";
      os << "w";
      if (i > 1) os << "^" << i;
    }
    first = false;
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const FieldElement& x) { return os << x.to_string(); }

namespace {

struct ScalarParser {
  std::string_view s;
  std::size_t pos = 0;

  void skip() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  bool at_end() {
    skip();
    return pos >= s.size();
  }
  bool peek(char c) {
    skip();
    return pos < s.size() && s[pos] == c;
  }
  [[noreturn]] void fail(const std::string& msg) const {
    throw Error(ErrorCode::ParseError, "scalar '" + std::string(s) + "': " + msg);
  }
  std::string digits() {
    skip();
    std::size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (start == pos) fail("expected digits");
    return std::string(s.substr(start, pos - start));
  }
  mpq_class rational() {
    mpz_class num(digits());
    mpz_class den(1);
    if (peek('/')) {
      ++pos;
      den = mpz_class(digits());
      if (den == 0) fail("zero denominator");
    }
    mpq_class q(num, den);
    q.canonicalize();
    return q;
  }
};

}  // namespace

FieldElement FieldElement::parse(const FieldDescriptor& field, std::string_view text) {
  ScalarParser p{text};
  if (p.at_end()) p.fail("empty scalar");
  std::vector<mpq_class> coeffs;
  bool first = true;
  while (!p.at_end()) {
    int sign = 1;
    if (p.peek('+') || p.peek('-')) {
      sign = p.s[p.pos] == '-' ? -1 : 1;
      ++p.pos;
    } else if (!first) {
      p.fail("expected '+' or '-'");
    }
    first = false;
    mpq_class coef(1);
    bool have_coef = false;
    p.skip();
    if (p.pos < p.s.size() && std::isdigit(static_cast<unsigned char>(p.s[p.pos]))) {
      coef = p.rational();
      have_coef = true;
    }
    std::size_t power = 0;
    if (have_coef && p.peek('*')) {
      ++p.pos;
      if (!p.peek('w')) p.fail("expected 'w' after '*'");
    }
    if (p.peek('w')) {
      ++p.pos;
      power = 1;
      if (p.peek('^')) {
        ++p.pos;
        power = std::stoul(p.digits());
      }
    } else if (!have_coef) {
      p.fail("expected a coefficient or 'w'");
    }
    if (power > 0 && field.kind() != FieldKind::Cyclotomic) p.fail("'w' only exists in cyclotomic fields");
    if (coeffs.size() <= power) coeffs.resize(power + 1);
    coeffs[power] += sign * coef;
  }
  if (field.kind() == FieldKind::PrimeField) {
    if (!coeffs.empty() && coeffs[0].get_den() != 1) p.fail("prime field residues are integers");
  }
  return from_coefficients(field, std::move(coeffs));
}

FieldElement FieldElement::random(const FieldDescriptor& field, std::mt19937_64& rng, int bound) {
  std::uniform_int_distribution<int> dist(-bound, bound);
  if (field.kind() == FieldKind::PrimeField) return from_int(field, dist(rng));
  std::vector<mpq_class> coeffs(field.degree());
  for (auto& c : coeffs) c = dist(rng);
  return from_coefficients(field, std::move(coeffs));
}

// ---------------------------------------------------------------------------

FieldElement primitive_root_of_unity(const FieldDescriptor& field, std::int64_t n) {
  if (n < 1) throw Error(ErrorCode::NoPrimitiveRoot, "order must be >= 1");
  const auto one = FieldElement::one(field);
  auto has_exact_order = [&](const FieldElement& z) {
    if (!z.pow(n).is_one()) return false;
    FieldElement acc = one;
    for (std::int64_t d = 1; d < n; ++d) {
      acc *= z;
      if (acc.is_one()) return false;
    }
    return true;
  };
  switch (field.kind()) {
    case FieldKind::Rationals:
      if (n == 1) return one;
      if (n == 2) return -one;
      throw Error(ErrorCode::NoPrimitiveRoot, "Q has no primitive " + std::to_string(n) + "-th root of unity");
    case FieldKind::PrimeField: {
      const std::int64_t p = field.parameter();
      if ((p - 1) % n != 0)
        throw Error(ErrorCode::NoPrimitiveRoot,
                    "F_" + std::to_string(p) + " has a primitive " + std::to_string(n) +
                        "-th root only if n divides p-1");
      for (std::int64_t g = 1; g < p; ++g) {
        auto z = FieldElement::from_int(field, g);
        if (has_exact_order(z)) return z;
      }
      break;
    }
    case FieldKind::Cyclotomic: {
      // The roots of unity of Q(zeta_M) are +-w^k, of order lcm(2, M).
      const std::int64_t m = field.parameter();
      const auto w = FieldElement::generator(field);
      if (m % n == 0) return w.pow(m / n);
      const std::int64_t full = (m % 2 == 0) ? m : 2 * m;
      if (full % n == 0) {
        auto z = (-w).pow(full / n);
        if (has_exact_order(z)) return z;
      }
      throw Error(ErrorCode::NoPrimitiveRoot,
                  field.name() + " has no primitive " + std::to_string(n) + "-th root of unity");
    }
  }
  throw Error(ErrorCode::NoPrimitiveRoot, "no primitive root found");
}

}  // namespace tatecoh
