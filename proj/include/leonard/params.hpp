#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "leonard/field.hpp"

namespace leonard {

/// Classification data of a Leonard system: diameter d, eigenvalue sequence
/// θ_0..θ_d, dual eigenvalue sequence θ*_0..θ*_d, and the two split
/// sequences varphi_1..varphi_d and phi_1..phi_d (stored 0-based, so
/// varphi[i-1] holds varphi_i).
struct ParameterData {
  FieldSpec field;
  int d = 0;
  std::vector<Scalar> theta;
  std::vector<Scalar> theta_star;
  std::vector<Scalar> varphi;
  std::vector<Scalar> phi;

  /// 1-based accessors with the conventions varphi_0 = varphi_{d+1} = 0.
  Scalar varphi_at(int i) const;
  Scalar phi_at(int i) const;

  /// Throws SizeMismatch unless the arrays have lengths d+1, d+1, d, d and
  /// every entry lies in `field`.
  void check_sizes() const;

  friend bool operator==(const ParameterData&, const ParameterData&) = default;
};

enum class ConditionStatus { Pass, Fail, VacuousPass };

struct ConditionResult {
  ConditionStatus status = ConditionStatus::Pass;
  /// Indices at which the condition fails (1-based for the split sequences,
  /// 0-based for the eigenvalue sequences, i for ratio families).
  std::vector<int> offending;
  bool passed() const { return status != ConditionStatus::Fail; }
};

/// Per-condition outcome of the classification test (i)-(v).
struct ValidationReport {
  std::array<ConditionResult, 5> conditions;
  /// Common value of the ratio families in (v) when d >= 3 and (v) holds.
  std::optional<Scalar> common_value;
  bool ok() const;
};

ValidationReport validate_parameter_array(const ParameterData& p);

/// ϑ_i = Σ_{h<i} (θ_h - θ_{d-h}) / (θ_0 - θ_d) for 0 <= i <= d+1.
/// ϑ_1 = 1 when d = 0 by convention. Throws DegenerateDenominator when
/// θ_0 = θ_d, d >= 1 and i >= 1; IndexOutOfRange outside 0..d+1.
Scalar vartheta_sum(const std::vector<Scalar>& theta, int i);
/// ϑ_0..ϑ_{d+1}.
std::vector<Scalar> vartheta_sequence(const std::vector<Scalar>& theta);

/// phi_i = varphi_i - (θ*_i - θ*_{i-1}) Σ_{h<i} (θ_h - θ_{d-h}); ignores p.phi.
std::vector<Scalar> phi_from_varphi(const ParameterData& p);

// --- recurrences ---------------------------------------------------------

enum class RecurrenceKind { Recurrent, BetaRecurrent, BetaGammaRecurrent, BetaGammaRhoRecurrent, None };

std::string to_string(RecurrenceKind kind);

/// Strongest recurrence notion detected for a sequence, with the scalars it
/// pins down. Scalars that the sequence leaves unconstrained are absent.
struct RecurrenceClass {
  RecurrenceKind kind = RecurrenceKind::None;
  std::optional<Scalar> beta;
  std::optional<Scalar> gamma;
  std::optional<Scalar> rho;
};

RecurrenceClass classify_recurrence(const std::vector<Scalar>& seq);

/// Individual recurrence predicates, evaluated literally over the index
/// ranges of the definitions (vacuous ranges give true).
bool is_recurrent(const std::vector<Scalar>& seq);
bool is_beta_recurrent(const std::vector<Scalar>& seq, const Scalar& beta);
bool is_beta_gamma_recurrent(const std::vector<Scalar>& seq, const Scalar& beta, const Scalar& gamma);
bool is_beta_gamma_rho_recurrent(const std::vector<Scalar>& seq, const Scalar& beta, const Scalar& gamma,
                                 const Scalar& rho);
/// (θ_{i-2} - θ_{i+1}) / (θ_{i-1} - θ_i); throws DivisionByZero.
Scalar recurrence_ratio(const std::vector<Scalar>& seq, int i);

// --- q-Racah family --------------------------------------------------------

struct QRacahInput {
  int d = 0;
  Scalar q, h, h_star, r1, r2, s, s_star, theta0, theta_star0;
};

/// The q-Racah parameter arrays. Throws ConstraintViolated unless
/// r1 r2 = s s* q^{d+1}; DivisionByZero when q = 0 or s* = 0.
ParameterData qracah_params(const QRacahInput& in);

}  // namespace leonard
