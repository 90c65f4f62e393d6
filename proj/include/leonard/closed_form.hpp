#pragma once

#include <optional>
#include <string>
#include <vector>

#include "leonard/field.hpp"

namespace leonard {

/// Element re + im·ω of F[ω]/(ω² - βω + 1). When that quadratic is
/// irreducible over F this is the field F[q] with q = ω; the conjugate
/// root is β - ω.
class ExtValue {
 public:
  ExtValue(Scalar re, Scalar im, Scalar beta) : re_(std::move(re)), im_(std::move(im)), beta_(std::move(beta)) {}
  static ExtValue embed(const Scalar& x, const Scalar& beta) { return {x, Scalar::zero(x.field()), beta}; }

  const Scalar& re() const { return re_; }
  const Scalar& im() const { return im_; }
  const Scalar& beta() const { return beta_; }
  bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
  bool in_base_field() const { return im_.is_zero(); }

  /// Norm re² + re·im·β + im²; DivisionByZero when it vanishes.
  ExtValue inverse() const;
  ExtValue pow(long e) const;

  friend ExtValue operator+(const ExtValue& a, const ExtValue& b);
  friend ExtValue operator-(const ExtValue& a, const ExtValue& b);
  friend ExtValue operator*(const ExtValue& a, const ExtValue& b);
  friend ExtValue operator/(const ExtValue& a, const ExtValue& b) { return a * b.inverse(); }
  friend bool operator==(const ExtValue& a, const ExtValue& b) { return a.re_ == b.re_ && a.im_ == b.im_; }

  /// "a" or "a + b*q".
  std::string to_string() const;

 private:
  Scalar re_, im_, beta_;
};

enum class ClosedFormBasis {
  Geometric,           // 1, q^i, q^-i with q in F
  GeometricExtension,  // 1, q^i, q^-i with q in a quadratic extension
  Quadratic,           // 1, i, i^2 (β = 2, char ≠ 2)
  Alternating,         // 1, (-1)^i, i(-1)^i (β = -2, char ≠ 2)
  Binomial,            // 1, i, binom(i,2) (β = 0, char 2)
};

std::string to_string(ClosedFormBasis basis);

/// θ_i = α_1 f_1(i) + α_2 f_2(i) + α_3 f_3(i) for the basis of the β-case.
/// For Geometric* bases, q is reported (q = ω in the extension case) and the
/// α may lie in the extension; otherwise every value has zero im part.
struct ClosedFormFit {
  ClosedFormBasis basis = ClosedFormBasis::Quadratic;
  std::vector<ExtValue> alpha;
  std::optional<ExtValue> q;
  /// f_k(i) for the chosen basis.
  ExtValue basis_value(int k, int i) const;
  ExtValue evaluate(int i) const;
};

/// Fits a β-recurrent sequence. Sequences shorter than three terms use the
/// first len basis functions (the rest get α = 0). Throws NoQInField when q
/// would need an extension and `allow_extension` is false, and
/// InconsistentSequence when the fit leaves a nonzero residual.
ClosedFormFit fit_closed_form(const std::vector<Scalar>& seq, const Scalar& beta, bool allow_extension = true);

/// Closed-form ϑ_i for a β-recurrent sequence of diameter d >= 3 (the four
/// cases for normalized sums); computed in F[q] when needed. Throws
/// InvalidParameters when no case applies (char 2 with d != 3 or β ≠ 0 ...).
Scalar vartheta_closed_form(int d, int i, const Scalar& beta);

}  // namespace leonard
