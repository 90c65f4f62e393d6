#include "leonard/system.hpp"

#include <algorithm>

namespace leonard {

namespace {

const Scalar& at(const std::vector<Scalar>& v, int i) { return v[static_cast<std::size_t>(i)]; }

std::size_t idx(int i) { return static_cast<std::size_t>(i); }

}  // namespace

std::pair<Matrix, Matrix> split_matrices(const ParameterData& p) {
  p.check_sizes();
  const std::size_t n = idx(p.d) + 1;
  Matrix A(p.field, n);
  Matrix As(p.field, n);
  for (std::size_t i = 0; i < n; ++i) {
    A(i, i) = p.theta[i];
    As(i, i) = p.theta_star[i];
    if (i + 1 < n) {
      A(i + 1, i) = Scalar::one(p.field);
      As(i, i + 1) = p.varphi[i];
    }
  }
  return {A, As};
}

std::vector<Matrix> idempotents_lagrange(const Matrix& A, const std::vector<Scalar>& eigs) {
  const std::size_t n = A.size();
  if (eigs.size() != n) throw Error(ErrorCode::DimensionMismatch, "need one eigenvalue per dimension");
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (eigs[i] == eigs[j]) throw Error(ErrorCode::RepeatedEigenvalue, "eigenvalue " + eigs[i].to_string() + " repeated");
    }
  }
  std::vector<Matrix> shifted;
  for (const auto& t : eigs) shifted.push_back(A.shifted(t));
  std::vector<Matrix> E;
  Matrix total(A.field(), n);
  for (std::size_t i = 0; i < n; ++i) {
    Matrix Ei = Matrix::identity(A.field(), n);
    Scalar denom = Scalar::one(A.field());
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i) continue;
      Ei = mat_mul(Ei, shifted[j]);
      denom *= eigs[i] - eigs[j];
    }
    Ei *= denom.inverse();
    if (mat_mul(A, Ei) != Ei * eigs[i]) {
      throw Error(ErrorCode::NotAnEigenvalue, eigs[i].to_string() + " is not an eigenvalue with this projector");
    }
    total += Ei;
    E.push_back(std::move(Ei));
  }
  if (total != Matrix::identity(A.field(), n)) throw Error(ErrorCode::NotAnEigenvalue, "projectors do not sum to I");
  return E;
}

Scalar tau_at(const std::vector<Scalar>& seq, int i, const Scalar& x) {
  Scalar acc = Scalar::one(x.field());
  for (int k = 0; k < i; ++k) acc *= x - at(seq, k);
  return acc;
}

Scalar eta_at(const std::vector<Scalar>& seq, int i, const Scalar& x) {
  const int d = static_cast<int>(seq.size()) - 1;
  Scalar acc = Scalar::one(x.field());
  for (int k = 0; k < i; ++k) acc *= x - at(seq, d - k);
  return acc;
}

Matrix idempotent_entries_closed(const ParameterData& p, int r, bool dual) {
  p.check_sizes();
  const int d = p.d;
  if (r < 0 || r > d) throw Error(ErrorCode::IndexOutOfRange, "idempotent index " + std::to_string(r));
  const auto& seq = dual ? p.theta_star : p.theta;
  const Scalar& x = at(seq, r);
  const Scalar denom_inv = (tau_at(seq, r, x) * eta_at(seq, d - r, x)).inverse();
  // prefix[i] = varphi_1 ... varphi_i.
  std::vector<Scalar> prefix{Scalar::one(p.field)};
  for (int i = 1; i <= d; ++i) prefix.push_back(prefix.back() * p.varphi_at(i));
  Matrix E(p.field, idx(d) + 1);
  for (int i = 0; i <= d; ++i) {
    for (int j = 0; j <= d; ++j) {
      if (dual) {
        E(idx(i), idx(j)) = prefix[idx(j)] / prefix[idx(i)] * tau_at(seq, i, x) * eta_at(seq, d - j, x) * denom_inv;
      } else {
        E(idx(i), idx(j)) = tau_at(seq, j, x) * eta_at(seq, d - i, x) * denom_inv;
      }
    }
  }
  return E;
}

LeonardSystemRep build_split_form(const ParameterData& p) {
  if (!validate_parameter_array(p).ok()) throw Error(ErrorCode::InvalidParameters, "parameter array fails the classification test");
  auto [A, As] = split_matrices(p);
  LeonardSystemRep rep;
  rep.field = p.field;
  rep.d = p.d;
  rep.E = idempotents_lagrange(A, p.theta);
  rep.E_star = idempotents_lagrange(As, p.theta_star);
  for (int r = 0; r <= p.d; ++r) {
    if (rep.E[idx(r)] != idempotent_entries_closed(p, r, false) || rep.E_star[idx(r)] != idempotent_entries_closed(p, r, true)) {
      throw Error(ErrorCode::InconsistentData, "closed-form idempotent disagrees with Lagrange product at r = " + std::to_string(r));
    }
  }
  rep.A = std::move(A);
  rep.A_star = std::move(As);
  rep.theta = p.theta;
  rep.theta_star = p.theta_star;
  return rep;
}

TauEtaBasis tau_eta_basis(const ParameterData& p) {
  p.check_sizes();
  TauEtaBasis b;
  const Poly one = Poly::constant(Scalar::one(p.field));
  b.tau = b.tau_star = b.eta = b.eta_star = {one};
  for (int i = 0; i <= p.d; ++i) {
    b.tau.push_back(b.tau.back() * Poly::linear(at(p.theta, i)));
    b.tau_star.push_back(b.tau_star.back() * Poly::linear(at(p.theta_star, i)));
    b.eta.push_back(b.eta.back() * Poly::linear(at(p.theta, p.d - i)));
    b.eta_star.push_back(b.eta_star.back() * Poly::linear(at(p.theta_star, p.d - i)));
  }
  return b;
}

TraceCoeffs trace_coefficients(const LeonardSystemRep& rep) {
  TraceCoeffs tc;
  for (int i = 0; i <= rep.d; ++i) {
    tc.a.push_back(mat_mul(rep.A, rep.E_star[idx(i)]).trace());
    tc.a_star.push_back(mat_mul(rep.A_star, rep.E[idx(i)]).trace());
  }
  return tc;
}

TraceCoeffs trace_coefficients_formula(const ParameterData& p) {
  p.check_sizes();
  TraceCoeffs tc;
  const int d = p.d;
  for (int i = 0; i <= d; ++i) {
    Scalar a = at(p.theta, i);
    Scalar as = at(p.theta_star, i);
    if (i >= 1) {
      a += p.varphi_at(i) / (at(p.theta_star, i) - at(p.theta_star, i - 1));
      as += p.varphi_at(i) / (at(p.theta, i) - at(p.theta, i - 1));
    }
    if (i + 1 <= d) {
      a += p.varphi_at(i + 1) / (at(p.theta_star, i) - at(p.theta_star, i + 1));
      as += p.varphi_at(i + 1) / (at(p.theta, i) - at(p.theta, i + 1));
    }
    tc.a.push_back(a);
    tc.a_star.push_back(as);
  }
  return tc;
}

std::vector<std::array<Scalar, 4>> varphi_four_ways(const ParameterData& p, const TraceCoeffs& tc, bool phi_mode) {
  p.check_sizes();
  const int d = p.d;
  const FieldSpec f = p.field;
  const auto& th = p.theta;
  const auto& ts = p.theta_star;
  std::vector<std::array<Scalar, 4>> out;
  for (int i = 1; i <= d; ++i) {
    Scalar lo_a = Scalar::zero(f), hi_a = Scalar::zero(f), lo_s = Scalar::zero(f), hi_s = Scalar::zero(f);
    for (int h = 0; h <= d; ++h) {
      const Scalar ta = phi_mode ? at(th, d - h) - at(tc.a, h) : at(th, h) - at(tc.a, h);
      const Scalar tsa = phi_mode ? at(ts, h) - at(tc.a_star, d - h) : at(ts, h) - at(tc.a_star, h);
      (h < i ? lo_a : hi_a) += ta;
      (h < i ? lo_s : hi_s) += tsa;
    }
    const Scalar ds = at(ts, i) - at(ts, i - 1);
    const Scalar dt = phi_mode ? at(th, d - i) - at(th, d - i + 1) : at(th, i) - at(th, i - 1);
    out.push_back({ds * lo_a, -ds * hi_a, dt * lo_s, -dt * hi_s});
  }
  return out;
}

namespace {

// varphi-sequence of (A; E; A*; E*) given E*_0 and the eigenvalue orderings.
std::vector<Scalar> split_sequence(const Matrix& A, const Matrix& As, const Matrix& Es0, const std::vector<Scalar>& theta,
                                   const std::vector<Scalar>& theta_star) {
  const std::size_t n = A.size();
  const int d = static_cast<int>(n) - 1;
  std::optional<std::vector<Scalar>> v0;
  for (std::size_t j = 0; j < n && !v0; ++j) {
    auto col = Es0.column(j);
    for (const auto& x : col) {
      if (!x.is_zero()) {
        v0 = col;
        break;
      }
    }
  }
  if (!v0) throw Error(ErrorCode::NotALeonardSystem, "E*_0 is zero");
  std::vector<std::vector<Scalar>> basis{*v0};
  for (int i = 0; i < d; ++i) basis.push_back(A.shifted(at(theta, i)).apply(basis.back()));
  Matrix B(A.field(), n);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < n; ++i) B(i, j) = basis[j][i];
  }
  Matrix Binv;
  try {
    Binv = B.inverse();
  } catch (const Error&) {
    throw Error(ErrorCode::NotALeonardSystem, "split basis degenerates");
  }
  const Matrix Ab = mat_mul(mat_mul(Binv, A), B);
  const Matrix Asb = mat_mul(mat_mul(Binv, As), B);
  std::vector<Scalar> varphi;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const Scalar& a = Ab(i, j);
      const Scalar& s = Asb(i, j);
      const bool a_ok = i == j ? a == theta[i] : (i == j + 1 ? a.is_one() : a.is_zero());
      const bool s_ok = i == j ? s == theta_star[i] : (j == i + 1 ? !s.is_zero() : s.is_zero());
      if (!a_ok || !s_ok) throw Error(ErrorCode::NotALeonardSystem, "not in split form at the split basis");
    }
    if (i + 1 < n) varphi.push_back(Asb(i, i + 1));
  }
  return varphi;
}

}  // namespace

ParameterData extract_parameters(const LeonardSystemRep& rep) {
  ParameterData p;
  p.field = rep.field;
  p.d = rep.d;
  p.theta = rep.theta;
  p.theta_star = rep.theta_star;
  p.varphi = split_sequence(rep.A, rep.A_star, rep.E_star.front(), rep.theta, rep.theta_star);
  const std::vector<Scalar> theta_rev(rep.theta.rbegin(), rep.theta.rend());
  p.phi = split_sequence(rep.A, rep.A_star, rep.E_star.front(), theta_rev, rep.theta_star);
  return p;
}

LeonardSystemRep relative(const LeonardSystemRep& rep, const D4Element& g) {
  LeonardSystemRep out;
  out.field = rep.field;
  out.d = rep.d;
  auto rev = [](auto v) {
    std::reverse(v.begin(), v.end());
    return v;
  };
  const bool sw = g.swap();
  out.A = sw ? rep.A_star : rep.A;
  out.A_star = sw ? rep.A : rep.A_star;
  out.E = sw ? rep.E_star : rep.E;
  out.E_star = sw ? rep.E : rep.E_star;
  out.theta = sw ? rep.theta_star : rep.theta;
  out.theta_star = sw ? rep.theta : rep.theta_star;
  if (g.rev1()) {
    out.E = rev(out.E);
    out.theta = rev(out.theta);
  }
  if (g.rev2()) {
    out.E_star = rev(out.E_star);
    out.theta_star = rev(out.theta_star);
  }
  return out;
}

NineParameters nine_from(const ParameterData& p, NineParameters::Eighth e, NineParameters::Ninth n) {
  if (p.d < 3) throw Error(ErrorCode::IndexOutOfRange, "nine-parameter data needs d >= 3");
  NineParameters s;
  s.d = p.d;
  s.theta = {p.theta[0], p.theta[1], p.theta[2]};
  s.theta_star = {p.theta_star[0], p.theta_star[1], p.theta_star[2]};
  s.eighth_kind = e;
  s.eighth = e == NineParameters::Eighth::Theta3 ? p.theta[3] : p.theta_star[3];
  s.ninth_kind = n;
  switch (n) {
    case NineParameters::Ninth::Varphi1: s.ninth = p.varphi_at(1); break;
    case NineParameters::Ninth::Phi1: s.ninth = p.phi_at(1); break;
    case NineParameters::Ninth::VarphiD: s.ninth = p.varphi_at(p.d); break;
    case NineParameters::Ninth::PhiD: s.ninth = p.phi_at(p.d); break;
  }
  return s;
}

ParameterData reconstruct_from_nine(const NineParameters& s) {
  if (s.d < 3) throw Error(ErrorCode::IndexOutOfRange, "nine-parameter data needs d >= 3");
  const int d = s.d;
  const FieldSpec f = s.theta[0].field();
  std::vector<Scalar> th(s.theta.begin(), s.theta.end());
  std::vector<Scalar> ts(s.theta_star.begin(), s.theta_star.end());
  // The ratio at i = 2 fixes the common value (the only equation when d = 3).
  Scalar common;
  if (s.eighth_kind == NineParameters::Eighth::Theta3) {
    th.push_back(s.eighth);
    common = (th[0] - th[3]) / (th[1] - th[2]);
    ts.push_back(ts[0] - common * (ts[1] - ts[2]));
  } else {
    ts.push_back(s.eighth);
    common = (ts[0] - ts[3]) / (ts[1] - ts[2]);
    th.push_back(th[0] - common * (th[1] - th[2]));
  }
  for (int i = 3; i <= d - 1; ++i) {
    th.push_back(at(th, i - 2) - common * (at(th, i - 1) - at(th, i)));
    ts.push_back(at(ts, i - 2) - common * (at(ts, i - 1) - at(ts, i)));
  }
  // phi_1 from (iii)/(iv) at i = 1 or i = d (ϑ_1 = ϑ_d = 1).
  Scalar phi1;
  const Scalar fromvarphi1 = (ts[1] - ts[0]) * (at(th, d) - th[0]);
  switch (s.ninth_kind) {
    case NineParameters::Ninth::Varphi1: phi1 = s.ninth + fromvarphi1; break;
    case NineParameters::Ninth::Phi1: phi1 = s.ninth; break;
    case NineParameters::Ninth::VarphiD: phi1 = s.ninth - (at(ts, d) - ts[0]) * (at(th, d - 1) - at(th, d)); break;
    case NineParameters::Ninth::PhiD: {
      const Scalar varphi1 = s.ninth - (at(ts, d) - ts[0]) * (th[1] - th[0]);
      phi1 = varphi1 + fromvarphi1;
      break;
    }
  }
  ParameterData p;
  p.field = f;
  p.d = d;
  p.theta = th;
  p.theta_star = ts;
  for (int i = 1; i <= d; ++i) {
    const Scalar vt = vartheta_sum(th, i);
    p.varphi.push_back(phi1 * vt + (at(ts, i) - ts[0]) * (at(th, i - 1) - at(th, d)));
  }
  for (int i = 1; i <= d; ++i) {
    const Scalar vt = vartheta_sum(th, i);
    p.phi.push_back(p.varphi_at(1) * vt + (at(ts, i) - ts[0]) * (at(th, d - i + 1) - th[0]));
  }
  return p;
}

Matrix lemma_g_matrix(const ParameterData& p) {
  std::vector<Scalar> diag{Scalar::one(p.field)};
  for (int i = 1; i <= p.d; ++i) diag.push_back(diag.back() * p.varphi_at(i));
  return Matrix::diagonal(diag);
}

Matrix reversal_matrix(FieldSpec field, std::size_t n) {
  Matrix Z(field, n);
  for (std::size_t i = 0; i < n; ++i) Z(i, n - 1 - i) = Scalar::one(field);
  return Z;
}

namespace {

// reach[j][i] = E_j A* E_i ≠ 0 (A* can move E_i V into E_j V).
std::vector<std::vector<bool>> transfer_pattern(const LeonardSystemRep& rep) {
  const std::size_t n = idx(rep.d) + 1;
  std::vector<std::vector<bool>> reach(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i) {
    const Matrix right = mat_mul(rep.A_star, rep.E[i]);
    for (std::size_t j = 0; j < n; ++j) reach[j][i] = !mat_mul(rep.E[j], right).is_zero();
  }
  return reach;
}

bool closed_under(const std::vector<std::vector<bool>>& reach, unsigned mask) {
  const std::size_t n = reach.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (!(mask >> i & 1U)) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (!(mask >> j & 1U) && reach[j][i]) return false;
    }
  }
  return true;
}

}  // namespace

bool is_submodule(const LeonardSystemRep& rep, const std::vector<int>& subset) {
  unsigned mask = 0;
  for (int i : subset) {
    if (i < 0 || i > rep.d) throw Error(ErrorCode::IndexOutOfRange, "subset index " + std::to_string(i));
    mask |= 1U << i;
  }
  return closed_under(transfer_pattern(rep), mask);
}

std::vector<std::vector<int>> submodule_subsets(const LeonardSystemRep& rep) {
  if (rep.d > 16) throw Error(ErrorCode::IndexOutOfRange, "subset enumeration limited to d <= 16");
  const auto reach = transfer_pattern(rep);
  const unsigned n = static_cast<unsigned>(rep.d) + 1;
  std::vector<std::vector<int>> out;
  for (unsigned mask = 0; mask < (1U << n); ++mask) {
    if (!closed_under(reach, mask)) continue;
    std::vector<int> s;
    for (unsigned i = 0; i < n; ++i) {
      if (mask >> i & 1U) s.push_back(static_cast<int>(i));
    }
    out.push_back(std::move(s));
  }
  return out;
}

bool is_irreducible(const LeonardSystemRep& rep) {
  // Irreducible iff the only closed sets are ∅ and everything, i.e. the
  // transfer graph is strongly connected.
  const auto reach = transfer_pattern(rep);
  const std::size_t n = reach.size();
  for (bool forward : {true, false}) {
    std::vector<bool> seen(n, false);
    std::vector<std::size_t> stack{0};
    seen[0] = true;
    while (!stack.empty()) {
      const std::size_t i = stack.back();
      stack.pop_back();
      for (std::size_t j = 0; j < n; ++j) {
        const bool edge = forward ? reach[j][i] : reach[i][j];
        if (edge && !seen[j]) {
          seen[j] = true;
          stack.push_back(j);
        }
      }
    }
    for (bool s : seen) {
      if (!s) return false;
    }
  }
  return true;
}

}  // namespace leonard
