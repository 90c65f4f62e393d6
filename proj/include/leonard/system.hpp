#pragma once

#include <array>
#include <optional>
#include <vector>

#include "leonard/d4.hpp"
#include "leonard/matrix.hpp"
#include "leonard/params.hpp"
#include "leonard/poly.hpp"

namespace leonard {

/// A Leonard system (A; E_0..E_d; A*; E*_0..E*_d) with the eigenvalue
/// orderings aligned to the idempotent lists.
struct LeonardSystemRep {
  FieldSpec field;
  int d = 0;
  Matrix A, A_star;
  std::vector<Matrix> E, E_star;
  std::vector<Scalar> theta, theta_star;
};

/// Split-form matrices: A lower bidiagonal (diagonal θ, subdiagonal 1),
/// A* upper bidiagonal (diagonal θ*, superdiagonal varphi). No validation.
std::pair<Matrix, Matrix> split_matrices(const ParameterData& p);

/// Split canonical form with idempotents from the Lagrange products,
/// cross-checked against the closed-form entries. Throws InvalidParameters
/// unless `p` passes validate_parameter_array.
LeonardSystemRep build_split_form(const ParameterData& p);

/// E_i = Π_{j≠i} (A - θ_j I)/(θ_i - θ_j). Throws RepeatedEigenvalue, and
/// NotAnEigenvalue when A E_i ≠ θ_i E_i or ΣE_i ≠ I.
std::vector<Matrix> idempotents_lagrange(const Matrix& A, const std::vector<Scalar>& eigs);

/// Closed-form entries of E_r (dual = false) or E*_r (dual = true) for the
/// split form of p. Throws IndexOutOfRange unless 0 <= r <= d.
Matrix idempotent_entries_closed(const ParameterData& p, int r, bool dual);

/// τ_i = Π_{k<i}(λ - θ_k), η_i = Π_{k<i}(λ - θ_{d-k}) for 0 <= i <= d+1.
struct TauEtaBasis {
  std::vector<Poly> tau, tau_star, eta, eta_star;
};
TauEtaBasis tau_eta_basis(const ParameterData& p);
/// Direct evaluation τ_i(x) and η_i(x) for a sequence.
Scalar tau_at(const std::vector<Scalar>& seq, int i, const Scalar& x);
Scalar eta_at(const std::vector<Scalar>& seq, int i, const Scalar& x);

/// a_i = tr(A E*_i), a*_i = tr(A* E_i).
struct TraceCoeffs {
  std::vector<Scalar> a, a_star;
  friend bool operator==(const TraceCoeffs&, const TraceCoeffs&) = default;
};
TraceCoeffs trace_coefficients(const LeonardSystemRep& rep);
/// The same scalars from the parameter formulas (no matrices).
TraceCoeffs trace_coefficients_formula(const ParameterData& p);

/// For 1 <= i <= d, the four trace-sum expressions for varphi_i
/// (phi_mode = false) or phi_i (phi_mode = true). Entry i-1 holds index i.
std::vector<std::array<Scalar, 4>> varphi_four_ways(const ParameterData& p, const TraceCoeffs& tc, bool phi_mode = false);

/// Reads (θ, θ*, varphi, phi) back from a Leonard system via the split
/// basis v_0 ∈ E*_0 V, v_{i+1} = (A - θ_i) v_i. Throws NotALeonardSystem.
ParameterData extract_parameters(const LeonardSystemRep& rep);

/// The relative Φ^g (words read left to right, Φ^{gh} = (Φ^g)^h).
LeonardSystemRep relative(const LeonardSystemRep& rep, const D4Element& g);

/// One ordering pair found by the recognizer.
struct RecognizedSystem {
  std::vector<Scalar> theta, theta_star;
  ParameterData params;
  LeonardSystemRep rep;
};

struct RecognitionResult {
  std::vector<RecognizedSystem> systems;
};

/// Decides whether (A, A*) is a Leonard pair over its field and returns every
/// compatible (ordering, dual ordering). Throws NotMultiplicityFree,
/// NotTridiagonalizable, DimensionMismatch, FieldMismatch.
RecognitionResult recognize_leonard_pair(const Matrix& A, const Matrix& A_star);

/// Nine values determining a Leonard system of diameter d >= 3.
struct NineParameters {
  enum class Eighth { Theta3, ThetaStar3 };
  enum class Ninth { Varphi1, Phi1, VarphiD, PhiD };
  int d = 3;
  std::array<Scalar, 3> theta;       // θ_0, θ_1, θ_2
  std::array<Scalar, 3> theta_star;  // θ*_0, θ*_1, θ*_2
  Eighth eighth_kind = Eighth::Theta3;
  Scalar eighth;
  Ninth ninth_kind = Ninth::Varphi1;
  Scalar ninth;
};
NineParameters nine_from(const ParameterData& p, NineParameters::Eighth e, NineParameters::Ninth n);
/// Rebuilds all of θ, θ*, varphi, phi. Throws IndexOutOfRange when d < 3 and
/// DivisionByZero when a ratio denominator vanishes.
ParameterData reconstruct_from_nine(const NineParameters& s);

/// G = diag(varphi_1...varphi_i) and the reversal Z (Z_ij = [i + j = d]).
Matrix lemma_g_matrix(const ParameterData& p);
Matrix reversal_matrix(FieldSpec field, std::size_t n);

/// W = Σ_{i∈S} E_i V is an (A, A*)-module iff E_j A* E_i = 0 for i ∈ S, j ∉ S.
bool is_submodule(const LeonardSystemRep& rep, const std::vector<int>& subset);
/// All index sets S (as sorted lists, including ∅ and everything) giving
/// submodules; d must be at most 16.
std::vector<std::vector<int>> submodule_subsets(const LeonardSystemRep& rep);
bool is_irreducible(const LeonardSystemRep& rep);

}  // namespace leonard
