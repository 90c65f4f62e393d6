#pragma once

#include <string>
#include <utility>
#include <vector>

#include "leonard/matrix.hpp"

namespace leonard {

/// Univariate polynomial over a FieldSpec; coefficients lowest degree first,
/// no trailing zeros (the zero polynomial has no coefficients).
class Poly {
 public:
  Poly() = default;
  explicit Poly(FieldSpec field) : field_(field) {}
  Poly(FieldSpec field, std::vector<Scalar> coeffs);

  static Poly constant(const Scalar& c);
  /// The indeterminate λ.
  static Poly lambda(FieldSpec field);
  /// λ - c.
  static Poly linear(const Scalar& c);
  /// Π (λ - r) over the given roots.
  static Poly from_roots(FieldSpec field, const std::vector<Scalar>& roots);

  const FieldSpec& field() const noexcept { return field_; }
  const std::vector<Scalar>& coeffs() const noexcept { return c_; }
  /// -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const noexcept { return c_.empty(); }
  /// Coefficient of λ^k (zero beyond the degree).
  Scalar coeff(std::size_t k) const;
  Scalar leading() const;
  bool is_monic() const { return !c_.empty() && c_.back().is_one(); }
  Poly monic() const;

  Scalar operator()(const Scalar& x) const;
  /// Matrix polynomial evaluation (Horner).
  Matrix operator()(const Matrix& m) const;

  Poly& operator+=(const Poly& rhs);
  Poly& operator-=(const Poly& rhs);
  Poly& operator*=(const Scalar& c);
  friend Poly operator+(Poly lhs, const Poly& rhs) { return lhs += rhs; }
  friend Poly operator-(Poly lhs, const Poly& rhs) { return lhs -= rhs; }
  friend Poly operator*(Poly lhs, const Scalar& c) { return lhs *= c; }
  friend Poly operator*(const Scalar& c, Poly rhs) { return rhs *= c; }
  friend Poly operator*(const Poly& lhs, const Poly& rhs);
  Poly& operator*=(const Poly& rhs) { return *this = *this * rhs; }

  friend bool operator==(const Poly& lhs, const Poly& rhs) { return lhs.field_ == rhs.field_ && lhs.c_ == rhs.c_; }
  friend bool operator!=(const Poly& lhs, const Poly& rhs) { return !(lhs == rhs); }

  /// Quotient and remainder; throws DivisionByZero for a zero divisor.
  std::pair<Poly, Poly> divmod(const Poly& divisor) const;
  Poly derivative() const;

  std::vector<std::string> coeff_strings() const;
  std::string to_string() const;

 private:
  void trim();

  FieldSpec field_;
  std::vector<Scalar> c_;
};

/// Monic gcd (zero if both are zero).
Poly gcd(Poly a, Poly b);

/// Monic det(λI - m) via reduction to Hessenberg form.
Poly char_poly(const Matrix& m);

/// All roots of p in its field, each repeated by multiplicity, in canonical
/// order. Over Q: p-adic lifting of simple roots plus rational reconstruction;
/// over GF(p): exhaustive evaluation for small p, equal-degree splitting
/// otherwise. Throws EmptyPolynomial for the zero polynomial.
std::vector<Scalar> field_roots(const Poly& p);

/// Exhaustive search over GF(p); throws InvalidField over Q. Exposed as the
/// reference for the faster prime-field path.
std::vector<Scalar> field_roots_exhaustive(const Poly& p);

}  // namespace leonard
