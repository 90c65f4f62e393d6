#include "leonard/field.hpp"

#include <cctype>
#include <ostream>

namespace leonard {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::FieldMismatch: return "FieldMismatch";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::EmptyPolynomial: return "EmptyPolynomial";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::SizeMismatch: return "SizeMismatch";
    case ErrorCode::DegenerateDenominator: return "DegenerateDenominator";
    case ErrorCode::NoQInField: return "NoQInField";
    case ErrorCode::InconsistentSequence: return "InconsistentSequence";
    case ErrorCode::ConstraintViolated: return "ConstraintViolated";
    case ErrorCode::InvalidParameters: return "InvalidParameters";
    case ErrorCode::RepeatedEigenvalue: return "RepeatedEigenvalue";
    case ErrorCode::NotAnEigenvalue: return "NotAnEigenvalue";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::NotALeonardSystem: return "NotALeonardSystem";
    case ErrorCode::NotMultiplicityFree: return "NotMultiplicityFree";
    case ErrorCode::NotTridiagonalizable: return "NotTridiagonalizable";
    case ErrorCode::SingularMatrix: return "SingularMatrix";
    case ErrorCode::InconsistentData: return "InconsistentData";
    case ErrorCode::ZeroDenominator: return "ZeroDenominator";
    case ErrorCode::InvalidField: return "InvalidField";
  }
  return "Unknown";
}

namespace {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

std::uint64_t mod_reduce(const mpz_class& value, std::uint64_t p) {
  mpz_class r = value % static_cast<unsigned long>(p);
  if (r < 0) r += static_cast<unsigned long>(p);
  return r.get_ui();
}

std::uint64_t mod_pow(std::uint64_t base, std::uint64_t exp, std::uint64_t p) {
  std::uint64_t result = 1 % p;
  base %= p;
  while (exp > 0) {
    if (exp & 1U) result = result * base % p;
    base = base * base % p;
    exp >>= 1U;
  }
  return result;
}

mpz_class parse_integer(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw Error(ErrorCode::ParseError, "empty integer literal");
  std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (start == s.size()) throw Error(ErrorCode::ParseError, "bad integer literal '" + s + "'");
  for (std::size_t i = start; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) {
      throw Error(ErrorCode::ParseError, "bad integer literal '" + s + "'");
    }
  }
  if (s[0] == '+') s.erase(0, 1);
  return mpz_class(s, 10);
}

std::string trim(std::string_view text) {
  std::size_t b = 0;
  std::size_t e = text.size();
  while (b < e && std::isspace(static_cast<unsigned char>(text[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(text[e - 1]))) --e;
  return std::string(text.substr(b, e - b));
}

}  // namespace

FieldSpec FieldSpec::prime(std::uint64_t p) {
  if (p >= (1ULL << 31) || !is_prime(p)) {
    throw Error(ErrorCode::InvalidField, "modulus " + std::to_string(p) + " is not a prime below 2^31");
  }
  FieldSpec f;
  f.kind_ = Kind::Prime;
  f.modulus_ = p;
  return f;
}

std::string FieldSpec::to_string() const {
  return is_rational() ? std::string("rational") : "p:" + std::to_string(modulus_);
}

FieldSpec FieldSpec::parse(std::string_view text) {
  std::string s = trim(text);
  for (auto& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  if (s == "rational" || s == "q") return rational();
  std::string digits;
  if (s.rfind("p:", 0) == 0) {
    digits = s.substr(2);
  } else if (s.rfind("gf(", 0) == 0 && s.back() == ')') {
    digits = s.substr(3, s.size() - 4);
  } else {
    digits = s;
  }
  if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos || digits.size() > 12) {
    throw Error(ErrorCode::ParseError, "unrecognised field '" + std::string(text) + "'");
  }
  return prime(std::stoull(digits));
}

Scalar::Scalar(FieldSpec field, long value) : field_(field) {
  if (field_.is_rational()) {
    q_ = value;
  } else {
    r_ = mod_reduce(mpz_class(value), field_.modulus());
  }
}

Scalar::Scalar(FieldSpec field, const mpq_class& value) : field_(field) {
  if (field_.is_rational()) {
    q_ = value;
    q_.canonicalize();
  } else {
    std::uint64_t p = field_.modulus();
    std::uint64_t den = mod_reduce(value.get_den(), p);
    if (den == 0) throw Error(ErrorCode::DivisionByZero, "denominator vanishes mod " + std::to_string(p));
    r_ = mod_reduce(value.get_num(), p) * mod_pow(den, p - 2, p) % p;
  }
}

Scalar Scalar::parse(FieldSpec field, std::string_view text) {
  std::string s = trim(text);
  auto slash = s.find('/');
  if (slash == std::string::npos) {
    return Scalar(field, mpq_class(parse_integer(s)));
  }
  mpz_class num = parse_integer(s.substr(0, slash));
  mpz_class den = parse_integer(s.substr(slash + 1));
  if (den == 0) throw Error(ErrorCode::DivisionByZero, "literal '" + s + "' has zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  mpq_class value(num, den);
  value.canonicalize();
  return Scalar(field, value);
}

bool Scalar::is_zero() const noexcept {
  return field_.is_rational() ? sgn(q_) == 0 : r_ == 0;
}

bool Scalar::is_one() const noexcept {
  return field_.is_rational() ? q_ == 1 : r_ == 1;
}

const mpq_class& Scalar::rational() const {
  if (!field_.is_rational()) throw Error(ErrorCode::FieldMismatch, "rational() on a prime-field value");
  return q_;
}

std::uint64_t Scalar::residue() const {
  if (field_.is_rational()) throw Error(ErrorCode::FieldMismatch, "residue() on a rational value");
  return r_;
}

void Scalar::require_same_field(const Scalar& rhs) const {
  if (!(field_ == rhs.field_)) {
    throw Error(ErrorCode::FieldMismatch, field_.to_string() + " vs " + rhs.field_.to_string());
  }
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw Error(ErrorCode::DivisionByZero, "inverse of zero");
  Scalar out(field_);
  if (field_.is_rational()) {
    out.q_ = 1 / q_;
  } else {
    out.r_ = mod_pow(r_, field_.modulus() - 2, field_.modulus());
  }
  return out;
}

Scalar Scalar::pow(long exponent) const {
  Scalar base = exponent < 0 ? inverse() : *this;
  unsigned long e = exponent < 0 ? static_cast<unsigned long>(-exponent) : static_cast<unsigned long>(exponent);
  Scalar result = one(field_);
  while (e > 0) {
    if (e & 1UL) result *= base;
    base *= base;
    e >>= 1UL;
  }
  return result;
}

Scalar& Scalar::operator+=(const Scalar& rhs) {
  require_same_field(rhs);
  if (field_.is_rational()) {
    q_ += rhs.q_;
  } else {
    r_ = (r_ + rhs.r_) % field_.modulus();
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& rhs) {
  require_same_field(rhs);
  if (field_.is_rational()) {
    q_ -= rhs.q_;
  } else {
    r_ = (r_ + field_.modulus() - rhs.r_) % field_.modulus();
  }
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& rhs) {
  require_same_field(rhs);
  if (field_.is_rational()) {
    q_ *= rhs.q_;
  } else {
    r_ = r_ * rhs.r_ % field_.modulus();
  }
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& rhs) {
  require_same_field(rhs);
  if (rhs.is_zero()) throw Error(ErrorCode::DivisionByZero, "division by zero");
  return *this *= rhs.inverse();
}

Scalar Scalar::operator-() const {
  Scalar out(field_);
  if (field_.is_rational()) {
    out.q_ = -q_;
  } else {
    out.r_ = (field_.modulus() - r_) % field_.modulus();
  }
  return out;
}

bool operator==(const Scalar& lhs, const Scalar& rhs) {
  if (!(lhs.field_ == rhs.field_)) return false;
  return lhs.field_.is_rational() ? lhs.q_ == rhs.q_ : lhs.r_ == rhs.r_;
}

bool canonical_less(const Scalar& lhs, const Scalar& rhs) {
  lhs.require_same_field(rhs);
  return lhs.field_.is_rational() ? lhs.q_ < rhs.q_ : lhs.r_ < rhs.r_;
}

std::string Scalar::to_string() const {
  return field_.is_rational() ? q_.get_str(10) : std::to_string(r_);
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

}  // namespace leonard
