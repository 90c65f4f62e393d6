#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "leonard/matrix.hpp"
#include "leonard/params.hpp"
#include "leonard/system.hpp"

namespace leonard {

/// Scalars of the two tridiagonal (Askey-Wilson type) relations
///   0 = [A,  A²A* - βAA*A + A*A² - γ(AA* + A*A) - ϱA*]
///   0 = [A*, A*²A - βA*AA* + AA*² - γ*(A*A + AA*) - ϱ*A].
/// `unique` is true iff d >= 3, where the tuple is forced.
struct RelationScalars {
  Scalar beta, gamma, gamma_star, rho, rho_star;
  bool unique = false;
  friend bool operator==(const RelationScalars&, const RelationScalars&) = default;
};

/// β from the common ratio minus one (d >= 3), γ = θ_0 - βθ_1 + θ_2 and
/// ϱ = θ_0² - βθ_0θ_1 + θ_1² - γ(θ_0 + θ_1), and likewise on θ*; every other
/// index is checked to agree. For d <= 2 the convention β = -1 is used.
/// Throws InvalidParameters unless p validates.
RelationScalars compute_relation_scalars(const ParameterData& p);

/// X²Y - βXYX + YX² - γ(XY + YX) - ϱY.
Matrix tridiagonal_bracket_inner(const Matrix& X, const Matrix& Y, const Scalar& beta, const Scalar& gamma,
                                 const Scalar& rho);
/// [X, X²Y - βXYX + YX² - γ(XY + YX) - ϱY].
Matrix tridiagonal_residual(const Matrix& X, const Matrix& Y, const Scalar& beta, const Scalar& gamma,
                            const Scalar& rho);

struct CommutatorReport {
  Matrix residual, residual_star;
  std::vector<std::pair<std::size_t, std::size_t>> nonzero, nonzero_star;
  bool ok() const { return nonzero.empty() && nonzero_star.empty(); }
};

/// Evaluates both relations exactly. Throws FieldMismatch when the scalars
/// live in a different field from rep.
CommutatorReport verify_tridiagonal_relations(const LeonardSystemRep& rep, const RelationScalars& s);
CommutatorReport verify_tridiagonal_relations(const Matrix& A, const Matrix& A_star, const RelationScalars& s);

/// ϑ_i = varphi_i - (θ*_i - θ*_0)(θ_{i-1} - θ_d) for 1 <= i <= d, padded with
/// ϑ_0 = ϑ_{d+1} = 0 (entry k is ϑ_k, length d+2).
std::vector<Scalar> split_vartheta(const ParameterData& p);

/// The commutator of the first relation on the split matrices, entry by
/// entry, as predicted by the five entry families, next to the directly
/// multiplied matrix.
struct CommutatorEntryTable {
  Matrix predicted, direct;
  /// Values of family (i) at i = 2..d-1 (entry (i+1, i-2)), family (ii) at
  /// i = 2..d, (iii) at i = 1..d, (iv) at i = 0..d, (v) at i = 1..d.
  std::vector<Scalar> family_i, family_ii, family_iii, family_iv, family_v;
  bool agree() const { return predicted == direct; }
};
/// Needs only the sizes of p to be consistent; values are not validated.
CommutatorEntryTable commutator_entry_formulas(const ParameterData& p, const Scalar& beta, const Scalar& gamma,
                                               const Scalar& rho);

/// Both sides of the vanishing-product criterion for d >= 2:
///   products_vanish: E_d A* E_i = 0 for 0 <= i <= d-2,
///   recursion_holds: ϑ_{i+1} = ϑ_i (θ_i - θ_{d-1})/(θ_{i-1} - θ_d) + ϑ_1 for 1 <= i <= d-1.
/// For d < 2 both are vacuously true.
struct VanishingProductsReport {
  bool products_vanish = true;
  bool recursion_holds = true;
  /// Residual of the recursion at i = 1..d-1 (entry i-1).
  std::vector<Scalar> recursion_residuals;
  /// Indices i with E_d A* E_i ≠ 0.
  std::vector<int> nonvanishing;
  bool agree() const { return products_vanish == recursion_holds; }
};
VanishingProductsReport vanishing_products_check(const LeonardSystemRep& rep, const ParameterData& p);
/// Builds the split matrices of p (no validation; θ must be distinct so the
/// idempotents E_i exist) and runs the check.
VanishingProductsReport vanishing_products_check(const ParameterData& p);

/// Solves A²A*A - AA*A² = Σ_{i=1}^{d} α_i (A^i A* - A* A^i) for the α
/// (entry i-1 holds α_i); free unknowns are set to zero. nullopt when no
/// solution exists.
std::optional<std::vector<Scalar>> commutator_ansatz(const Matrix& A, const Matrix& A_star);

/// Scalars for the quantum-group specialisation (β = q² + q⁻², all others
/// zero) and for the Dolan-Grady specialisation (β = 2, γ = γ* = 0,
/// ϱ = ϱ* = 16).
RelationScalars q_serre_preset(const Scalar& q);
RelationScalars dolan_grady_preset(FieldSpec field);

}  // namespace leonard
