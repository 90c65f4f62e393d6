#include "leonard/relations.hpp"

#include "leonard/linsolve.hpp"

namespace leonard {

namespace {

std::size_t idx(int i) { return static_cast<std::size_t>(i); }

// Entry k of v, or zero outside the stored range. Used for the sentinel
// terms of the entry formulas, which always carry a vanishing factor.
Scalar padded(const std::vector<Scalar>& v, int k, FieldSpec f) {
  if (k < 0 || k >= static_cast<int>(v.size())) return Scalar::zero(f);
  return v[idx(k)];
}

Scalar quad_form(const Scalar& x, const Scalar& y, const Scalar& beta, const Scalar& gamma, const Scalar& rho) {
  return x * x - beta * x * y + y * y - gamma * (x + y) - rho;
}

struct SideScalars {
  Scalar beta, gamma, rho;
};

// β, γ, ϱ for one eigenvalue sequence with β+1 = common (d >= 3) or β = -1.
SideScalars side_scalars(const std::vector<Scalar>& th, const std::optional<Scalar>& common) {
  const FieldSpec f = th.front().field();
  const int d = static_cast<int>(th.size()) - 1;
  SideScalars s{common ? *common - Scalar::one(f) : -Scalar::one(f), Scalar::zero(f), Scalar::zero(f)};
  if (d >= 2) s.gamma = th[0] - s.beta * th[1] + th[2];
  if (d >= 1) s.rho = quad_form(th[0], th[1], s.beta, s.gamma, Scalar::zero(f));
  for (int i = 1; i <= d - 1; ++i) {
    if (!(th[idx(i - 1)] - s.beta * th[idx(i)] + th[idx(i + 1)] == s.gamma)) {
      throw Error(ErrorCode::InvalidParameters, "gamma differs at index " + std::to_string(i));
    }
  }
  for (int i = 1; i <= d; ++i) {
    if (!quad_form(th[idx(i - 1)], th[idx(i)], s.beta, s.gamma, s.rho).is_zero()) {
      throw Error(ErrorCode::InvalidParameters, "rho differs at index " + std::to_string(i));
    }
  }
  return s;
}

std::vector<std::pair<std::size_t, std::size_t>> nonzeros(const Matrix& m) { return m.nonzero_positions(); }

}  // namespace

RelationScalars compute_relation_scalars(const ParameterData& p) {
  p.check_sizes();
  const ValidationReport report = validate_parameter_array(p);
  if (!report.ok()) throw Error(ErrorCode::InvalidParameters, "parameter array fails the classification conditions");
  const SideScalars s = side_scalars(p.theta, report.common_value);
  const SideScalars t = side_scalars(p.theta_star, report.common_value);
  return {s.beta, s.gamma, t.gamma, s.rho, t.rho, p.d >= 3};
}

Matrix tridiagonal_bracket_inner(const Matrix& X, const Matrix& Y, const Scalar& beta, const Scalar& gamma,
                                 const Scalar& rho) {
  const Matrix XY = X * Y;
  const Matrix YX = Y * X;
  return X * XY - beta * (XY * X) + YX * X - gamma * (XY + YX) - rho * Y;
}

Matrix tridiagonal_residual(const Matrix& X, const Matrix& Y, const Scalar& beta, const Scalar& gamma,
                            const Scalar& rho) {
  return commutator(X, tridiagonal_bracket_inner(X, Y, beta, gamma, rho));
}

CommutatorReport verify_tridiagonal_relations(const Matrix& A, const Matrix& A_star, const RelationScalars& s) {
  for (const Scalar* x : {&s.beta, &s.gamma, &s.gamma_star, &s.rho, &s.rho_star}) {
    if (!(x->field() == A.field())) throw Error(ErrorCode::FieldMismatch, "relation scalars and matrices differ in field");
  }
  CommutatorReport r;
  r.residual = tridiagonal_residual(A, A_star, s.beta, s.gamma, s.rho);
  r.residual_star = tridiagonal_residual(A_star, A, s.beta, s.gamma_star, s.rho_star);
  r.nonzero = nonzeros(r.residual);
  r.nonzero_star = nonzeros(r.residual_star);
  return r;
}

CommutatorReport verify_tridiagonal_relations(const LeonardSystemRep& rep, const RelationScalars& s) {
  return verify_tridiagonal_relations(rep.A, rep.A_star, s);
}

std::vector<Scalar> split_vartheta(const ParameterData& p) {
  p.check_sizes();
  const FieldSpec f = p.field;
  std::vector<Scalar> out(idx(p.d + 2), Scalar::zero(f));
  for (int i = 1; i <= p.d; ++i) {
    out[idx(i)] = p.varphi_at(i) - (p.theta_star[idx(i)] - p.theta_star[0]) * (p.theta[idx(i - 1)] - p.theta[idx(p.d)]);
  }
  return out;
}

CommutatorEntryTable commutator_entry_formulas(const ParameterData& p, const Scalar& beta, const Scalar& gamma,
                                               const Scalar& rho) {
  p.check_sizes();
  const FieldSpec f = p.field;
  const int d = p.d;
  const auto vt = split_vartheta(p);
  auto th = [&](int k) { return padded(p.theta, k, f); };
  auto ts = [&](int k) { return padded(p.theta_star, k, f); };
  auto vp = [&](int k) { return p.varphi_at(k); };
  auto ve = [&](int k) { return padded(vt, k, f); };
  auto P = [&](int a, int b) { return quad_form(th(a), th(b), beta, gamma, rho); };
  const Scalar b1 = beta + Scalar::one(f);
  // x_{k-2} - (β+1)x_{k-1} + (β+1)x_k - x_{k+1}
  auto third = [&](auto&& x, int k) { return x(k - 2) - b1 * x(k - 1) + b1 * x(k) - x(k + 1); };
  // x_{k-1} - βx_k + x_{k+1} - γ
  auto second = [&](auto&& x, int k) { return x(k - 1) - beta * x(k) + x(k + 1) - gamma; };

  CommutatorEntryTable t;
  t.predicted = Matrix(f, idx(d + 1));
  const auto [A, As] = split_matrices(p);
  t.direct = tridiagonal_residual(A, As, beta, gamma, rho);

  for (int i = 2; i <= d - 1; ++i) {
    t.family_i.push_back(third(ts, i));
    t.predicted(idx(i + 1), idx(i - 2)) = t.family_i.back();
  }
  for (int i = 2; i <= d; ++i) {
    t.family_ii.push_back(third(ve, i) + (ts(i - 2) - ts(0)) * third(th, i - 1) + (th(i) - th(d)) * third(ts, i) +
                          (ts(i - 2) - ts(i)) * second(th, i - 1));
    t.predicted(idx(i), idx(i - 2)) = t.family_ii.back();
  }
  for (int i = 1; i <= d; ++i) {
    t.family_iii.push_back(vp(i - 1) * second(th, i - 1) - vp(i + 1) * second(th, i) + (ts(i - 1) - ts(i)) * P(i - 1, i));
    t.predicted(idx(i), idx(i - 1)) = t.family_iii.back();
  }
  for (int i = 0; i <= d; ++i) {
    t.family_iv.push_back(vp(i) * P(i - 1, i) - vp(i + 1) * P(i, i + 1));
    t.predicted(idx(i), idx(i)) = t.family_iv.back();
  }
  for (int i = 1; i <= d; ++i) {
    t.family_v.push_back(vp(i) * (th(i - 1) - th(i)) * P(i - 1, i));
    t.predicted(idx(i - 1), idx(i)) = t.family_v.back();
  }
  return t;
}

VanishingProductsReport vanishing_products_check(const LeonardSystemRep& rep, const ParameterData& p) {
  p.check_sizes();
  VanishingProductsReport r;
  const int d = p.d;
  if (d < 2) return r;
  const Matrix left = rep.E[idx(d)] * rep.A_star;
  for (int i = 0; i <= d - 2; ++i) {
    if (!(left * rep.E[idx(i)]).is_zero()) r.nonvanishing.push_back(i);
  }
  r.products_vanish = r.nonvanishing.empty();

  const auto vt = split_vartheta(p);
  const auto& th = p.theta;
  for (int i = 1; i <= d - 1; ++i) {
    const Scalar ratio = (th[idx(i)] - th[idx(d - 1)]) / (th[idx(i - 1)] - th[idx(d)]);
    r.recursion_residuals.push_back(vt[idx(i + 1)] - vt[idx(i)] * ratio - vt[1]);
    if (!r.recursion_residuals.back().is_zero()) r.recursion_holds = false;
  }
  return r;
}

VanishingProductsReport vanishing_products_check(const ParameterData& p) {
  p.check_sizes();
  if (p.d < 2) return {};
  LeonardSystemRep rep;
  rep.field = p.field;
  rep.d = p.d;
  std::tie(rep.A, rep.A_star) = split_matrices(p);
  rep.E = idempotents_lagrange(rep.A, p.theta);
  rep.theta = p.theta;
  rep.theta_star = p.theta_star;
  return vanishing_products_check(rep, p);
}

std::optional<std::vector<Scalar>> commutator_ansatz(const Matrix& A, const Matrix& A_star) {
  const FieldSpec f = A.field();
  const std::size_t n = A.size();
  const int d = static_cast<int>(n) - 1;
  const Scalar zero = Scalar::zero(f);
  const Matrix lhs = A * A * A_star * A - A * A_star * A * A;
  std::vector<Matrix> terms;
  Matrix power = A;
  for (int i = 1; i <= d; ++i) {
    terms.push_back(power * A_star - A_star * power);
    power = power * A;
  }
  std::vector<std::vector<Scalar>> rows;
  std::vector<Scalar> rhs;
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      std::vector<Scalar> row;
      for (const auto& t : terms) row.push_back(t(r, c));
      rows.push_back(std::move(row));
      rhs.push_back(lhs(r, c));
    }
  }
  if (d == 0) {
    if (!lhs.is_zero()) return std::nullopt;
    return std::vector<Scalar>{};
  }
  return solve_linear(std::move(rows), std::move(rhs), zero);
}

RelationScalars q_serre_preset(const Scalar& q) {
  const FieldSpec f = q.field();
  const Scalar z = Scalar::zero(f);
  const Scalar q2 = q * q;
  return {q2 + q2.inverse(), z, z, z, z, false};
}

RelationScalars dolan_grady_preset(FieldSpec field) {
  const Scalar z = Scalar::zero(field);
  const Scalar s16(field, 16L);
  return {Scalar(field, 2L), z, z, s16, s16, false};
}

}  // namespace leonard
