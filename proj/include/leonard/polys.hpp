#pragma once

#include <vector>

#include "leonard/params.hpp"
#include "leonard/poly.hpp"
#include "leonard/system.hpp"

namespace leonard {

/// Monic polynomial sequence p_0..p_{d+1}, its dual p*_0..p*_{d+1}, and the
/// normalised u_i = p_i / p_i(θ_0), u*_i = p*_i / p*_i(θ*_0) for 0 <= i <= d.
struct PolySeqBundle {
  int d = 0;
  std::vector<Poly> p, p_star, u, u_star;
};

/// Builds all four sequences from the τ-bases. p_{d+1} = τ_{d+1} and
/// p*_{d+1} = τ*_{d+1}. Throws InvalidParameters unless p validates.
PolySeqBundle build_poly_bundle(const ParameterData& p);

/// Three-term recurrence data. Vectors are indexed as in the formulas with
/// the unused slots kept: x[0] = 0, c[0] = 0, b[d] = 0, so every vector has
/// length d+1.
struct RecurrenceData {
  std::vector<Scalar> a, a_star;
  std::vector<Scalar> x, x_star;
  std::vector<Scalar> b, c;
  std::vector<Scalar> m, m_star;
  std::vector<Scalar> k;
  Scalar n;
};

/// a_i and x_i from traces (tr E*_i A, tr E*_i A E*_{i-1} A) and from the
/// closed forms, which must agree; b_i, c_i, n from the closed forms;
/// m_i = tr E_i E*_0; k_i = m*_i n. Throws InconsistentData when any
/// internal identity (x_i = b_{i-1}c_i, θ_0 = c_i + a_i + b_i, n m_0 = 1,
/// k_i = b_0..b_{i-1}/(c_1..c_i), n = Σ k_i) fails.
RecurrenceData recurrence_data(const LeonardSystemRep& rep, const ParameterData& p);

/// Residual grids ((d+1) × (d+1), row-major) of the four orthogonality
/// relations, left side minus right side.
struct OrthogonalityReport {
  std::vector<std::vector<Scalar>> p_rows, p_columns, u_rows, u_columns;
  bool ok() const;
};
OrthogonalityReport orthogonality_check(const PolySeqBundle& bundle, const RecurrenceData& rec,
                                        const ParameterData& p);

/// Polynomial identities tying the bundle to the recurrence data and the
/// matrices: the p and p* three-term recurrences coefficientwise, the
/// u-recurrence (with the last row checked at every θ_r), p_i(A)E*_0 =
/// E*_i A^i E*_0, p_{d+1}(A) = 0, and the duality u_i(θ_j) = u*_j(θ*_i).
struct PolyIdentityReport {
  bool p_recurrence = true, p_star_recurrence = true, u_recurrence = true;
  bool defining_property = true, annihilates = true, duality = true;
  bool ok() const {
    return p_recurrence && p_star_recurrence && u_recurrence && defining_property && annihilates && duality;
  }
};
PolyIdentityReport check_poly_identities(const PolySeqBundle& bundle, const RecurrenceData& rec,
                                         const LeonardSystemRep& rep, const ParameterData& p);

/// Grid (i, j) -> u_i(θ_j).
std::vector<std::vector<Scalar>> u_table(const PolySeqBundle& bundle, const ParameterData& p);

/// (a; q)_n = (1 - a)(1 - aq)...(1 - aq^{n-1}).
Scalar q_pochhammer(const Scalar& a, const Scalar& q, int n);

struct QRacahEvalInput {
  int i = 0, j = 0;
  QRacahInput params;
};

/// The terminating ₄φ₃ sum
///   Σ_n (q^{-i};q)_n (s*q^{i+1};q)_n (q^{-j};q)_n (sq^{j+1};q)_n q^n
///       / ((r1 q;q)_n (r2 q;q)_n (q^{-d};q)_n (q;q)_n),
/// summed for n = 0..d. Throws ZeroDenominator when a denominator vanishes,
/// IndexOutOfRange unless 0 <= i, j <= d, ConstraintViolated unless
/// r1 r2 = s s* q^{d+1}.
Scalar qracah_u_value(const QRacahEvalInput& inp);

}  // namespace leonard
