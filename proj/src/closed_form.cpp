#include "leonard/closed_form.hpp"

#include <algorithm>

#include "leonard/linsolve.hpp"
#include "leonard/poly.hpp"

namespace leonard {

ExtValue operator+(const ExtValue& a, const ExtValue& b) { return {a.re_ + b.re_, a.im_ + b.im_, a.beta_}; }

ExtValue operator-(const ExtValue& a, const ExtValue& b) { return {a.re_ - b.re_, a.im_ - b.im_, a.beta_}; }

ExtValue operator*(const ExtValue& a, const ExtValue& b) {
  // ω² = βω - 1.
  const Scalar bd = a.im_ * b.im_;
  return {a.re_ * b.re_ - bd, a.re_ * b.im_ + a.im_ * b.re_ + bd * a.beta_, a.beta_};
}

ExtValue ExtValue::inverse() const {
  const Scalar norm = re_ * re_ + re_ * im_ * beta_ + im_ * im_;
  if (norm.is_zero()) throw Error(ErrorCode::DivisionByZero, "inverse of a zero divisor in F[q]");
  const Scalar inv = norm.inverse();
  return {(re_ + im_ * beta_) * inv, -im_ * inv, beta_};
}

ExtValue ExtValue::pow(long e) const {
  ExtValue base = e < 0 ? inverse() : *this;
  unsigned long n = e < 0 ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
  ExtValue out = embed(Scalar::one(re_.field()), beta_);
  while (n > 0) {
    if (n & 1UL) out = out * base;
    base = base * base;
    n >>= 1UL;
  }
  return out;
}

std::string ExtValue::to_string() const {
  if (im_.is_zero()) return re_.to_string();
  return re_.to_string() + " + " + im_.to_string() + "*q";
}

std::string to_string(ClosedFormBasis basis) {
  switch (basis) {
    case ClosedFormBasis::Geometric: return "geometric";
    case ClosedFormBasis::GeometricExtension: return "geometric-extension";
    case ClosedFormBasis::Quadratic: return "quadratic";
    case ClosedFormBasis::Alternating: return "alternating";
    case ClosedFormBasis::Binomial: return "binomial";
  }
  return "?";
}

ExtValue ClosedFormFit::basis_value(int k, int i) const {
  const Scalar& beta = alpha.front().beta();
  const FieldSpec f = beta.field();
  auto embed = [&](long v) { return ExtValue::embed(Scalar(f, v), beta); };
  if (k == 0) return embed(1);
  switch (basis) {
    case ClosedFormBasis::Geometric:
    case ClosedFormBasis::GeometricExtension: return q->pow(k == 1 ? i : -i);
    case ClosedFormBasis::Quadratic: return k == 1 ? embed(i) : embed(static_cast<long>(i) * i);
    case ClosedFormBasis::Alternating: {
      const long sign = i % 2 == 0 ? 1 : -1;
      return k == 1 ? embed(sign) : embed(sign * i);
    }
    case ClosedFormBasis::Binomial: return k == 1 ? embed(i) : embed(i % 4 >= 2 ? 1 : 0);
  }
  return embed(0);
}

ExtValue ClosedFormFit::evaluate(int i) const {
  ExtValue acc = ExtValue::embed(Scalar::zero(alpha.front().beta().field()), alpha.front().beta());
  for (int k = 0; k < 3; ++k) acc = acc + alpha[static_cast<std::size_t>(k)] * basis_value(k, i);
  return acc;
}

namespace {

// Chooses the basis for β and, in the geometric cases, q.
ClosedFormFit choose_basis(const Scalar& beta, bool allow_extension) {
  const FieldSpec f = beta.field();
  const Scalar two(f, 2L);
  ClosedFormFit fit;
  const ExtValue zero = ExtValue::embed(Scalar::zero(f), beta);
  fit.alpha = {zero, zero, zero};
  if (f.characteristic() == 2) {
    if (beta.is_zero()) {
      fit.basis = ClosedFormBasis::Binomial;
      return fit;
    }
  } else if (beta == two) {
    fit.basis = ClosedFormBasis::Quadratic;
    return fit;
  } else if (beta == -two) {
    fit.basis = ClosedFormBasis::Alternating;
    return fit;
  }
  const Poly quad(f, {Scalar::one(f), -beta, Scalar::one(f)});
  const auto roots = field_roots(quad);
  if (!roots.empty()) {
    fit.basis = ClosedFormBasis::Geometric;
    fit.q = ExtValue::embed(roots.front(), beta);
  } else {
    if (!allow_extension) throw Error(ErrorCode::NoQInField, "x^2 - beta x + 1 has no root in " + f.to_string());
    fit.basis = ClosedFormBasis::GeometricExtension;
    fit.q = ExtValue(Scalar::zero(f), Scalar::one(f), beta);
  }
  return fit;
}

}  // namespace

ClosedFormFit fit_closed_form(const std::vector<Scalar>& seq, const Scalar& beta, bool allow_extension) {
  if (seq.empty()) throw Error(ErrorCode::SizeMismatch, "empty sequence");
  ClosedFormFit fit = choose_basis(beta, allow_extension);
  const int n = static_cast<int>(seq.size());
  const int m = std::min(n, 3);
  std::vector<std::vector<ExtValue>> rows;
  std::vector<ExtValue> rhs;
  for (int i = 0; i < m; ++i) {
    std::vector<ExtValue> row;
    for (int k = 0; k < m; ++k) row.push_back(fit.basis_value(k, i));
    rows.push_back(std::move(row));
    rhs.push_back(ExtValue::embed(seq[static_cast<std::size_t>(i)], beta));
  }
  auto sol = solve_linear(rows, rhs, fit.alpha.front());
  if (!sol) throw Error(ErrorCode::InconsistentSequence, "closed-form system has no solution");
  for (int k = 0; k < m; ++k) fit.alpha[static_cast<std::size_t>(k)] = (*sol)[static_cast<std::size_t>(k)];
  for (int i = 0; i < n; ++i) {
    if (!(fit.evaluate(i) == ExtValue::embed(seq[static_cast<std::size_t>(i)], beta))) {
      throw Error(ErrorCode::InconsistentSequence, "closed form disagrees at index " + std::to_string(i));
    }
  }
  return fit;
}

Scalar vartheta_closed_form(int d, int i, const Scalar& beta) {
  const FieldSpec f = beta.field();
  if (d < 3 || i < 0 || i > d + 1) throw Error(ErrorCode::IndexOutOfRange, "closed form needs d >= 3, 0 <= i <= d+1");
  const Scalar two(f, 2L);
  const Scalar one = Scalar::one(f);
  if (f.characteristic() == 2) {
    if (beta.is_zero()) {
      if (d != 3) throw Error(ErrorCode::InvalidParameters, "char 2 with beta = 0 forces d = 3");
      return i % 2 == 0 ? Scalar::zero(f) : one;
    }
  } else if (beta == two) {
    return Scalar(f, static_cast<long>(i) * (d - i + 1)) / Scalar(f, static_cast<long>(d));
  } else if (beta == -two) {
    if (d % 2 == 1) return i % 2 == 0 ? Scalar::zero(f) : one;
    return i % 2 == 0 ? Scalar(f, static_cast<long>(i)) / Scalar(f, static_cast<long>(d))
                      : Scalar(f, static_cast<long>(d - i + 1)) / Scalar(f, static_cast<long>(d));
  }
  const ClosedFormFit basis = choose_basis(beta, true);
  const ExtValue& q = *basis.q;
  const ExtValue e1 = ExtValue::embed(one, beta);
  const ExtValue val = (q.pow(i) - e1) * (q.pow(d - i + 1) - e1) / ((q - e1) * (q.pow(d) - e1));
  if (!val.in_base_field()) throw Error(ErrorCode::InconsistentData, "vartheta closed form left the base field");
  return val.re();
}

}  // namespace leonard
