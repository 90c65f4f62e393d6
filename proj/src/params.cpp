#include "leonard/params.hpp"

#include "leonard/linsolve.hpp"

namespace leonard {

Scalar ParameterData::varphi_at(int i) const {
  if (i <= 0 || i > d) return Scalar::zero(field);
  return varphi[static_cast<std::size_t>(i - 1)];
}

Scalar ParameterData::phi_at(int i) const {
  if (i <= 0 || i > d) return Scalar::zero(field);
  return phi[static_cast<std::size_t>(i - 1)];
}

void ParameterData::check_sizes() const {
  if (d < 0) throw Error(ErrorCode::SizeMismatch, "diameter must be nonnegative");
  const auto n = static_cast<std::size_t>(d);
  if (theta.size() != n + 1 || theta_star.size() != n + 1 || varphi.size() != n || phi.size() != n) {
    throw Error(ErrorCode::SizeMismatch, "expected sequence lengths d+1, d+1, d, d for d = " + std::to_string(d));
  }
  for (const auto* seq : {&theta, &theta_star, &varphi, &phi}) {
    for (const auto& x : *seq) {
      if (!(x.field() == field)) throw Error(ErrorCode::FieldMismatch, "parameter outside declared field " + field.to_string());
    }
  }
}

bool ValidationReport::ok() const {
  for (const auto& c : conditions) {
    if (!c.passed()) return false;
  }
  return true;
}

namespace {

const Scalar& at(const std::vector<Scalar>& v, int i) { return v[static_cast<std::size_t>(i)]; }

void mark(ConditionResult& c, int index) {
  c.status = ConditionStatus::Fail;
  c.offending.push_back(index);
}

}  // namespace

Scalar vartheta_sum(const std::vector<Scalar>& theta, int i) {
  if (theta.empty()) throw Error(ErrorCode::SizeMismatch, "empty eigenvalue sequence");
  const int d = static_cast<int>(theta.size()) - 1;
  const FieldSpec f = theta.front().field();
  if (i < 0 || i > d + 1) throw Error(ErrorCode::IndexOutOfRange, "vartheta index " + std::to_string(i));
  if (i == 0) return Scalar::zero(f);
  if (d == 0) return i == 1 ? Scalar::one(f) : Scalar::zero(f);
  const Scalar denom = at(theta, 0) - at(theta, d);
  if (denom.is_zero()) throw Error(ErrorCode::DegenerateDenominator, "theta_0 = theta_d");
  Scalar sum = Scalar::zero(f);
  for (int h = 0; h < i; ++h) sum += at(theta, h) - at(theta, d - h);
  return sum / denom;
}

std::vector<Scalar> vartheta_sequence(const std::vector<Scalar>& theta) {
  std::vector<Scalar> out;
  for (int i = 0; i <= static_cast<int>(theta.size()); ++i) out.push_back(vartheta_sum(theta, i));
  return out;
}

std::vector<Scalar> phi_from_varphi(const ParameterData& p) {
  std::vector<Scalar> out;
  Scalar partial = Scalar::zero(p.field);
  for (int i = 1; i <= p.d; ++i) {
    partial += at(p.theta, i - 1) - at(p.theta, p.d - i + 1);
    out.push_back(p.varphi_at(i) - (at(p.theta_star, i) - at(p.theta_star, i - 1)) * partial);
  }
  return out;
}

ValidationReport validate_parameter_array(const ParameterData& p) {
  p.check_sizes();
  ValidationReport report;
  const int d = p.d;

  auto& c1 = report.conditions[0];
  for (int i = 1; i <= d; ++i) {
    if (p.varphi_at(i).is_zero() || p.phi_at(i).is_zero()) mark(c1, i);
  }

  auto& c2 = report.conditions[1];
  for (int j = 1; j <= d; ++j) {
    for (int i = 0; i < j; ++i) {
      if (at(p.theta, i) == at(p.theta, j) || at(p.theta_star, i) == at(p.theta_star, j)) {
        mark(c2, j);
        break;
      }
    }
  }

  auto& c3 = report.conditions[2];
  auto& c4 = report.conditions[3];
  if (d >= 1 && at(p.theta, 0) == at(p.theta, d)) {
    for (int i = 1; i <= d; ++i) {
      mark(c3, i);
      mark(c4, i);
    }
  } else {
    const Scalar phi1 = p.phi_at(1);
    const Scalar varphi1 = p.varphi_at(1);
    for (int i = 1; i <= d; ++i) {
      const Scalar vt = vartheta_sum(p.theta, i);
      const Scalar dstar = at(p.theta_star, i) - at(p.theta_star, 0);
      if (p.varphi_at(i) != phi1 * vt + dstar * (at(p.theta, i - 1) - at(p.theta, d))) mark(c3, i);
      if (p.phi_at(i) != varphi1 * vt + dstar * (at(p.theta, d - i + 1) - at(p.theta, 0))) mark(c4, i);
    }
  }

  auto& c5 = report.conditions[4];
  if (d <= 2) {
    c5.status = ConditionStatus::VacuousPass;
  } else {
    std::optional<Scalar> common;
    for (int i = 2; i <= d - 1; ++i) {
      bool bad = false;
      for (const auto* seq : {&p.theta, &p.theta_star}) {
        const Scalar den = at(*seq, i - 1) - at(*seq, i);
        if (den.is_zero()) {
          bad = true;
          continue;
        }
        const Scalar r = (at(*seq, i - 2) - at(*seq, i + 1)) / den;
        if (!common) {
          common = r;
        } else if (*common != r) {
          bad = true;
        }
      }
      if (bad) mark(c5, i);
    }
    if (c5.passed()) report.common_value = common;
  }
  return report;
}

// --- recurrences ---------------------------------------------------------

std::string to_string(RecurrenceKind kind) {
  switch (kind) {
    case RecurrenceKind::Recurrent: return "recurrent";
    case RecurrenceKind::BetaRecurrent: return "beta-recurrent";
    case RecurrenceKind::BetaGammaRecurrent: return "beta-gamma-recurrent";
    case RecurrenceKind::BetaGammaRhoRecurrent: return "beta-gamma-rho-recurrent";
    case RecurrenceKind::None: return "none";
  }
  return "none";
}

Scalar recurrence_ratio(const std::vector<Scalar>& seq, int i) {
  const int d = static_cast<int>(seq.size()) - 1;
  if (i < 2 || i > d - 1) throw Error(ErrorCode::IndexOutOfRange, "ratio index " + std::to_string(i));
  return (at(seq, i - 2) - at(seq, i + 1)) / (at(seq, i - 1) - at(seq, i));
}

bool is_recurrent(const std::vector<Scalar>& seq) {
  const int d = static_cast<int>(seq.size()) - 1;
  for (int i = 2; i <= d - 1; ++i) {
    if (at(seq, i - 1) == at(seq, i)) return false;
  }
  for (int i = 3; i <= d - 1; ++i) {
    if (recurrence_ratio(seq, i) != recurrence_ratio(seq, 2)) return false;
  }
  return true;
}

bool is_beta_recurrent(const std::vector<Scalar>& seq, const Scalar& beta) {
  const int d = static_cast<int>(seq.size()) - 1;
  const Scalar b1 = beta + Scalar::one(beta.field());
  for (int i = 2; i <= d - 1; ++i) {
    if (!(at(seq, i - 2) - b1 * at(seq, i - 1) + b1 * at(seq, i) - at(seq, i + 1)).is_zero()) return false;
  }
  return true;
}

bool is_beta_gamma_recurrent(const std::vector<Scalar>& seq, const Scalar& beta, const Scalar& gamma) {
  const int d = static_cast<int>(seq.size()) - 1;
  for (int i = 1; i <= d - 1; ++i) {
    if (at(seq, i - 1) - beta * at(seq, i) + at(seq, i + 1) != gamma) return false;
  }
  return true;
}

bool is_beta_gamma_rho_recurrent(const std::vector<Scalar>& seq, const Scalar& beta, const Scalar& gamma,
                                 const Scalar& rho) {
  const int d = static_cast<int>(seq.size()) - 1;
  for (int i = 1; i <= d; ++i) {
    const Scalar& x = at(seq, i - 1);
    const Scalar& y = at(seq, i);
    if (x * x - beta * x * y + y * y - gamma * (x + y) != rho) return false;
  }
  return true;
}

namespace {

// Fills γ (from i = 1) and ϱ (from i = 1) for a β-recurrent sequence; both
// are then constant along the sequence, since β-recurrence implies (β,γ)- and
// (β,γ,ϱ)-recurrence.
void fill_gamma_rho(const std::vector<Scalar>& seq, RecurrenceClass& rc) {
  const int d = static_cast<int>(seq.size()) - 1;
  const Scalar& beta = *rc.beta;
  if (d >= 2) {
    rc.gamma = at(seq, 0) - beta * at(seq, 1) + at(seq, 2);
  } else if (d == 1) {
    // (β,γ)-recurrence is vacuous; any γ works, ϱ then follows from γ = 0.
    rc.gamma = Scalar::zero(beta.field());
  }
  if (d >= 1 && rc.gamma) {
    const Scalar& x = at(seq, 0);
    const Scalar& y = at(seq, 1);
    rc.rho = x * x - beta * x * y + y * y - *rc.gamma * (x + y);
  }
}

}  // namespace

RecurrenceClass classify_recurrence(const std::vector<Scalar>& seq) {
  if (seq.empty()) throw Error(ErrorCode::SizeMismatch, "empty sequence");
  const FieldSpec f = seq.front().field();
  const int d = static_cast<int>(seq.size()) - 1;
  RecurrenceClass rc;

  if (is_recurrent(seq)) {
    rc.kind = RecurrenceKind::Recurrent;
    if (d >= 3) {
      rc.beta = recurrence_ratio(seq, 2) - Scalar::one(f);
      fill_gamma_rho(seq, rc);
    }
    return rc;
  }

  // β-recurrence is linear in β: (β+1)(θ_{i-1}-θ_i) = θ_{i-2}-θ_{i+1}.
  std::optional<Scalar> beta;
  bool consistent = true;
  for (int i = 2; i <= d - 1 && consistent; ++i) {
    const Scalar c = at(seq, i - 1) - at(seq, i);
    const Scalar r = at(seq, i - 2) - at(seq, i + 1);
    if (c.is_zero()) {
      consistent = r.is_zero();
    } else if (!beta) {
      beta = r / c - Scalar::one(f);
    }
  }
  if (consistent && beta && is_beta_recurrent(seq, *beta)) {
    rc.kind = RecurrenceKind::BetaRecurrent;
    rc.beta = beta;
    fill_gamma_rho(seq, rc);
    return rc;
  }
  if (consistent && !beta) {
    // Every β works; report the witness β = 2.
    rc.kind = RecurrenceKind::BetaGammaRecurrent;
    rc.beta = Scalar(f, 2L);
    fill_gamma_rho(seq, rc);
    return rc;
  }

  // Otherwise (β,γ,ϱ)-recurrence is a linear system in (β,γ,ϱ).
  std::vector<std::vector<Scalar>> rows;
  std::vector<Scalar> rhs;
  for (int i = 1; i <= d; ++i) {
    const Scalar& x = at(seq, i - 1);
    const Scalar& y = at(seq, i);
    rows.push_back({x * y, x + y, Scalar::one(f)});
    rhs.push_back(x * x + y * y);
  }
  if (auto sol = solve_linear(rows, rhs, Scalar::zero(f))) {
    rc.kind = RecurrenceKind::BetaGammaRhoRecurrent;
    rc.beta = (*sol)[0];
    rc.gamma = (*sol)[1];
    rc.rho = (*sol)[2];
  }
  return rc;
}

// --- q-Racah family --------------------------------------------------------

ParameterData qracah_params(const QRacahInput& in) {
  const FieldSpec f = in.q.field();
  if (in.q.is_zero()) throw Error(ErrorCode::DivisionByZero, "q = 0");
  if (in.s_star.is_zero()) throw Error(ErrorCode::DivisionByZero, "s* = 0");
  if (in.d < 0) throw Error(ErrorCode::SizeMismatch, "negative diameter");
  const int d = in.d;
  if (in.r1 * in.r2 != in.s * in.s_star * in.q.pow(d + 1)) {
    throw Error(ErrorCode::ConstraintViolated, "r1 r2 != s s* q^(d+1)");
  }
  const Scalar one = Scalar::one(f);
  ParameterData p;
  p.field = f;
  p.d = d;
  for (int i = 0; i <= d; ++i) {
    const Scalar qi = in.q.pow(i);
    const Scalar qi1 = in.q.pow(i + 1);
    p.theta.push_back(in.theta0 + in.h * (one - qi) * (one - in.s * qi1) / qi);
    p.theta_star.push_back(in.theta_star0 + in.h_star * (one - qi) * (one - in.s_star * qi1) / qi);
  }
  for (int i = 1; i <= d; ++i) {
    const Scalar qi = in.q.pow(i);
    const Scalar common = in.h * in.h_star * in.q.pow(1 - 2 * i) * (one - qi) * (one - in.q.pow(i - d - 1));
    p.varphi.push_back(common * (one - in.r1 * qi) * (one - in.r2 * qi));
    p.phi.push_back(common * (in.r1 - in.s_star * qi) * (in.r2 - in.s_star * qi) / in.s_star);
  }
  return p;
}

}  // namespace leonard
