#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

#include "leonard/error.hpp"

namespace leonard {

/// The ground field: the rationals, or GF(p) for a prime p below 2^31.
class FieldSpec {
 public:
  enum class Kind { Rational, Prime };

  FieldSpec() = default;

  static FieldSpec rational() { return FieldSpec{}; }
  /// Throws InvalidField unless `p` is a prime below 2^31.
  static FieldSpec prime(std::uint64_t p);

  Kind kind() const noexcept { return kind_; }
  bool is_rational() const noexcept { return kind_ == Kind::Rational; }
  std::uint64_t modulus() const noexcept { return modulus_; }
  /// 0 for the rationals.
  std::uint64_t characteristic() const noexcept { return modulus_; }

  /// "rational" or "p:<modulus>".
  std::string to_string() const;
  /// Accepts "rational", "q", "p:<prime>", "gf(<prime>)", or a bare prime.
  static FieldSpec parse(std::string_view text);

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;

 private:
  Kind kind_ = Kind::Rational;
  std::uint64_t modulus_ = 0;
};

/// An element of a FieldSpec. Rationals are kept in lowest terms with a
/// positive denominator; residues are kept in [0, p). Equality is exact.
class Scalar {
 public:
  Scalar() = default;
  explicit Scalar(FieldSpec field) : field_(field) {}
  Scalar(FieldSpec field, long value);
  Scalar(FieldSpec field, const mpq_class& value);

  static Scalar zero(FieldSpec field) { return Scalar(field); }
  static Scalar one(FieldSpec field) { return Scalar(field, 1L); }
  /// Parses "a", "-a", or "a/b" (decimal). Over GF(p) the value is reduced.
  static Scalar parse(FieldSpec field, std::string_view text);

  const FieldSpec& field() const noexcept { return field_; }
  bool is_zero() const noexcept;
  bool is_one() const noexcept;

  /// Rational value; throws FieldMismatch over GF(p).
  const mpq_class& rational() const;
  /// Residue; throws FieldMismatch over the rationals.
  std::uint64_t residue() const;

  Scalar inverse() const;
  Scalar pow(long exponent) const;

  Scalar& operator+=(const Scalar& rhs);
  Scalar& operator-=(const Scalar& rhs);
  Scalar& operator*=(const Scalar& rhs);
  Scalar& operator/=(const Scalar& rhs);

  friend Scalar operator+(Scalar lhs, const Scalar& rhs) { return lhs += rhs; }
  friend Scalar operator-(Scalar lhs, const Scalar& rhs) { return lhs -= rhs; }
  friend Scalar operator*(Scalar lhs, const Scalar& rhs) { return lhs *= rhs; }
  friend Scalar operator/(Scalar lhs, const Scalar& rhs) { return lhs /= rhs; }
  Scalar operator-() const;

  friend bool operator==(const Scalar& lhs, const Scalar& rhs);
  friend bool operator!=(const Scalar& lhs, const Scalar& rhs) { return !(lhs == rhs); }

  /// Deterministic total order used only for canonical output ordering.
  friend bool canonical_less(const Scalar& lhs, const Scalar& rhs);

  /// "a" or "a/b" over Q, residue string over GF(p).
  std::string to_string() const;

 private:
  void require_same_field(const Scalar& rhs) const;

  FieldSpec field_;
  mpq_class q_{0};
  std::uint64_t r_ = 0;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

}  // namespace leonard
