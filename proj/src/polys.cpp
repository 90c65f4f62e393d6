#include "leonard/polys.hpp"

namespace leonard {

namespace {

std::size_t idx(int i) { return static_cast<std::size_t>(i); }

// φ_{lo+1} φ_{lo+2} ... φ_{hi} (empty product 1).
Scalar varphi_range(const ParameterData& p, int lo, int hi) {
  Scalar out = Scalar::one(p.field);
  for (int k = lo + 1; k <= hi; ++k) out *= p.varphi_at(k);
  return out;
}

void require_valid(const ParameterData& p) {
  p.check_sizes();
  if (!validate_parameter_array(p).ok()) throw Error(ErrorCode::InvalidParameters, "parameter array fails the classification conditions");
}

void inconsistent(const std::string& what, int i) {
  throw Error(ErrorCode::InconsistentData, what + " at index " + std::to_string(i));
}

// MPS p_i = Σ_h (φ_{h+1}..φ_i) τ*_h(θ*_i)/τ*_i(θ*_i) τ_h; pass swapped
// sequences/bases for the dual.
std::vector<Poly> monic_sequence(const ParameterData& p, const std::vector<Scalar>& other, const std::vector<Poly>& tau) {
  std::vector<Poly> out;
  for (int i = 0; i <= p.d; ++i) {
    const Scalar& x = other[idx(i)];
    const Scalar denom = tau_at(other, i, x);
    Poly acc(p.field);
    for (int h = 0; h <= i; ++h) acc += (varphi_range(p, h, i) * tau_at(other, h, x) / denom) * tau[idx(h)];
    out.push_back(std::move(acc));
  }
  out.push_back(tau[idx(p.d + 1)]);
  return out;
}

// u_i = Σ_h τ*_h(θ*_i)/(φ_1..φ_h) τ_h.
std::vector<Poly> normalized_sequence(const ParameterData& p, const std::vector<Scalar>& other,
                                      const std::vector<Poly>& tau) {
  std::vector<Poly> out;
  for (int i = 0; i <= p.d; ++i) {
    Poly acc(p.field);
    for (int h = 0; h <= i; ++h) acc += (tau_at(other, h, other[idx(i)]) / varphi_range(p, 0, h)) * tau[idx(h)];
    out.push_back(std::move(acc));
  }
  return out;
}

}  // namespace

PolySeqBundle build_poly_bundle(const ParameterData& p) {
  require_valid(p);
  const TauEtaBasis basis = tau_eta_basis(p);
  PolySeqBundle b;
  b.d = p.d;
  b.p = monic_sequence(p, p.theta_star, basis.tau);
  b.p_star = monic_sequence(p, p.theta, basis.tau_star);
  b.u = normalized_sequence(p, p.theta_star, basis.tau);
  b.u_star = normalized_sequence(p, p.theta, basis.tau_star);
  return b;
}

RecurrenceData recurrence_data(const LeonardSystemRep& rep, const ParameterData& p) {
  require_valid(p);
  const FieldSpec f = p.field;
  const int d = p.d;
  const Scalar zero = Scalar::zero(f);
  const Scalar one = Scalar::one(f);
  RecurrenceData r;

  const TraceCoeffs traced = trace_coefficients(rep);
  const TraceCoeffs formula = trace_coefficients_formula(p);
  for (int i = 0; i <= d; ++i) {
    if (!(traced.a[idx(i)] == formula.a[idx(i)])) inconsistent("a_i trace and closed form differ", i);
    if (!(traced.a_star[idx(i)] == formula.a_star[idx(i)])) inconsistent("a*_i trace and closed form differ", i);
  }
  r.a = traced.a;
  r.a_star = traced.a_star;

  r.b.assign(idx(d + 1), zero);
  r.c.assign(idx(d + 1), zero);
  for (int i = 0; i <= d - 1; ++i) {
    r.b[idx(i)] = p.varphi_at(i + 1) * tau_at(p.theta_star, i, p.theta_star[idx(i)]) /
                  tau_at(p.theta_star, i + 1, p.theta_star[idx(i + 1)]);
  }
  for (int i = 1; i <= d; ++i) {
    r.c[idx(i)] = p.phi_at(i) * eta_at(p.theta_star, d - i, p.theta_star[idx(i)]) /
                  eta_at(p.theta_star, d - i + 1, p.theta_star[idx(i - 1)]);
  }

  r.x.assign(idx(d + 1), zero);
  r.x_star.assign(idx(d + 1), zero);
  for (int i = 1; i <= d; ++i) {
    r.x[idx(i)] = (rep.E_star[idx(i)] * rep.A * rep.E_star[idx(i - 1)] * rep.A).trace();
    r.x_star[idx(i)] = (rep.E[idx(i)] * rep.A_star * rep.E[idx(i - 1)] * rep.A_star).trace();
    if (!(r.x[idx(i)] == r.b[idx(i - 1)] * r.c[idx(i)])) inconsistent("x_i differs from b_{i-1} c_i", i);
    if (r.x[idx(i)].is_zero()) inconsistent("x_i vanishes", i);
    if (r.x_star[idx(i)].is_zero()) inconsistent("x*_i vanishes", i);
  }
  for (int i = 0; i <= d; ++i) {
    if (!(r.c[idx(i)] + r.a[idx(i)] + r.b[idx(i)] == p.theta[0])) inconsistent("c_i + a_i + b_i differs from theta_0", i);
  }

  for (int i = 0; i <= d; ++i) {
    r.m.push_back((rep.E[idx(i)] * rep.E_star[0]).trace());
    r.m_star.push_back((rep.E_star[idx(i)] * rep.E[0]).trace());
    if (r.m.back().is_zero()) inconsistent("m_i vanishes", i);
  }
  if (!(r.m[0] == r.m_star[0])) inconsistent("m_0 differs from m*_0", 0);
  Scalar phis = one;
  for (int i = 1; i <= d; ++i) phis *= p.phi_at(i);
  r.n = eta_at(p.theta, d, p.theta[0]) * eta_at(p.theta_star, d, p.theta_star[0]) / phis;
  if (!(r.n * r.m[0] == one)) inconsistent("n m_0 differs from 1", 0);

  Scalar sum = zero;
  Scalar bprod = one, cprod = one;
  for (int i = 0; i <= d; ++i) {
    if (i > 0) {
      bprod *= r.b[idx(i - 1)];
      cprod *= r.c[idx(i)];
    }
    r.k.push_back(r.m_star[idx(i)] * r.n);
    if (!(r.k.back() == bprod / cprod)) inconsistent("k_i differs from b_0..b_{i-1}/(c_1..c_i)", i);
    sum += r.k.back();
  }
  if (!(sum == r.n)) inconsistent("sum of k_i differs from n", d);
  return r;
}

bool OrthogonalityReport::ok() const {
  for (const auto* grid : {&p_rows, &p_columns, &u_rows, &u_columns}) {
    for (const auto& row : *grid) {
      for (const auto& v : row) {
        if (!v.is_zero()) return false;
      }
    }
  }
  return true;
}

OrthogonalityReport orthogonality_check(const PolySeqBundle& bundle, const RecurrenceData& rec,
                                        const ParameterData& p) {
  const FieldSpec f = p.field;
  const int d = p.d;
  const Scalar zero = Scalar::zero(f);
  const Scalar one = Scalar::one(f);
  // pv[i][r] = p_i(θ_r), uv[i][r] = u_i(θ_r); xp[i] = x_1..x_i.
  std::vector<std::vector<Scalar>> pv(idx(d + 1)), uv(idx(d + 1));
  std::vector<Scalar> xp;
  Scalar acc = one;
  for (int i = 0; i <= d; ++i) {
    if (i > 0) acc *= rec.x[idx(i)];
    xp.push_back(acc);
    for (int r = 0; r <= d; ++r) {
      pv[idx(i)].push_back(bundle.p[idx(i)](p.theta[idx(r)]));
      uv[idx(i)].push_back(bundle.u[idx(i)](p.theta[idx(r)]));
    }
  }
  OrthogonalityReport rep;
  const std::vector<std::vector<Scalar>> blank(idx(d + 1), std::vector<Scalar>(idx(d + 1), zero));
  rep.p_rows = rep.p_columns = rep.u_rows = rep.u_columns = blank;
  for (int i = 0; i <= d; ++i) {
    for (int j = 0; j <= d; ++j) {
      Scalar sp = zero, su = zero, tp = zero, tu = zero;
      for (int r = 0; r <= d; ++r) {
        sp += pv[idx(i)][idx(r)] * pv[idx(j)][idx(r)] * rec.m[idx(r)];
        su += uv[idx(i)][idx(r)] * uv[idx(j)][idx(r)] * rec.m[idx(r)];
      }
      // Column relations, with (i, j) playing the role of (r, s).
      for (int h = 0; h <= d; ++h) {
        tp += pv[idx(h)][idx(i)] * pv[idx(h)][idx(j)] / xp[idx(h)];
        tu += uv[idx(h)][idx(i)] * uv[idx(h)][idx(j)] * rec.k[idx(h)];
      }
      const bool diag = i == j;
      rep.p_rows[idx(i)][idx(j)] = sp - (diag ? xp[idx(i)] : zero);
      rep.u_rows[idx(i)][idx(j)] = su - (diag ? rec.k[idx(i)].inverse() : zero);
      rep.p_columns[idx(i)][idx(j)] = tp - (diag ? rec.m[idx(i)].inverse() : zero);
      rep.u_columns[idx(i)][idx(j)] = tu - (diag ? rec.m[idx(i)].inverse() : zero);
    }
  }
  return rep;
}

PolyIdentityReport check_poly_identities(const PolySeqBundle& bundle, const RecurrenceData& rec,
                                         const LeonardSystemRep& rep, const ParameterData& p) {
  const FieldSpec f = p.field;
  const int d = p.d;
  const Poly lambda = Poly::lambda(f);
  const Poly zero_poly(f);
  PolyIdentityReport out;
  auto prev = [&](const std::vector<Poly>& seq, int i) { return i == 0 ? zero_poly : seq[idx(i - 1)]; };
  for (int i = 0; i <= d; ++i) {
    const Poly lhs = lambda * bundle.p[idx(i)];
    const Poly rhs = bundle.p[idx(i + 1)] + rec.a[idx(i)] * bundle.p[idx(i)] + rec.x[idx(i)] * prev(bundle.p, i);
    if (lhs != rhs) out.p_recurrence = false;
    const Poly lhs_s = lambda * bundle.p_star[idx(i)];
    const Poly rhs_s = bundle.p_star[idx(i + 1)] + rec.a_star[idx(i)] * bundle.p_star[idx(i)] +
                       rec.x_star[idx(i)] * prev(bundle.p_star, i);
    if (lhs_s != rhs_s) out.p_star_recurrence = false;
  }
  for (int i = 0; i <= d - 1; ++i) {
    const Poly lhs = lambda * bundle.u[idx(i)];
    const Poly rhs =
        rec.c[idx(i)] * prev(bundle.u, i) + rec.a[idx(i)] * bundle.u[idx(i)] + rec.b[idx(i)] * bundle.u[idx(i + 1)];
    if (lhs != rhs) out.u_recurrence = false;
  }
  const Poly last = lambda * bundle.u[idx(d)] - rec.c[idx(d)] * prev(bundle.u, d) - rec.a[idx(d)] * bundle.u[idx(d)];
  for (const auto& t : p.theta) {
    if (!last(t).is_zero()) out.u_recurrence = false;
  }

  Matrix Ai = Matrix::identity(f, rep.A.size());
  Matrix Asi = Ai;
  for (int i = 0; i <= d; ++i) {
    if (bundle.p[idx(i)](rep.A) * rep.E_star[0] != rep.E_star[idx(i)] * Ai * rep.E_star[0]) out.defining_property = false;
    if (bundle.p_star[idx(i)](rep.A_star) * rep.E[0] != rep.E[idx(i)] * Asi * rep.E[0]) out.defining_property = false;
    Ai = Ai * rep.A;
    Asi = Asi * rep.A_star;
  }
  if (!bundle.p[idx(d + 1)](rep.A).is_zero() || !bundle.p_star[idx(d + 1)](rep.A_star).is_zero()) out.annihilates = false;

  for (int i = 0; i <= d; ++i) {
    for (int j = 0; j <= d; ++j) {
      if (!(bundle.u[idx(i)](p.theta[idx(j)]) == bundle.u_star[idx(j)](p.theta_star[idx(i)]))) out.duality = false;
    }
  }
  return out;
}

std::vector<std::vector<Scalar>> u_table(const PolySeqBundle& bundle, const ParameterData& p) {
  std::vector<std::vector<Scalar>> out;
  for (int i = 0; i <= p.d; ++i) {
    std::vector<Scalar> row;
    for (int j = 0; j <= p.d; ++j) row.push_back(bundle.u[idx(i)](p.theta[idx(j)]));
    out.push_back(std::move(row));
  }
  return out;
}

Scalar q_pochhammer(const Scalar& a, const Scalar& q, int n) {
  const Scalar one = Scalar::one(a.field());
  Scalar out = one;
  Scalar term = a;
  for (int k = 0; k < n; ++k) {
    out *= one - term;
    term *= q;
  }
  return out;
}

Scalar qracah_u_value(const QRacahEvalInput& inp) {
  const QRacahInput& in = inp.params;
  const int d = in.d;
  if (inp.i < 0 || inp.i > d || inp.j < 0 || inp.j > d) throw Error(ErrorCode::IndexOutOfRange, "need 0 <= i, j <= d");
  const Scalar& q = in.q;
  if (q.is_zero()) throw Error(ErrorCode::ZeroDenominator, "q = 0");
  if (!(in.r1 * in.r2 == in.s * in.s_star * q.pow(d + 1))) throw Error(ErrorCode::ConstraintViolated, "r1 r2 != s s* q^(d+1)");
  const Scalar qi = q.pow(-inp.i);
  const Scalar qj = q.pow(-inp.j);
  Scalar sum = Scalar::zero(q.field());
  Scalar qn = Scalar::one(q.field());
  for (int n = 0; n <= d; ++n) {
    const Scalar den = q_pochhammer(in.r1 * q, q, n) * q_pochhammer(in.r2 * q, q, n) * q_pochhammer(q.pow(-d), q, n) *
                       q_pochhammer(q, q, n);
    if (den.is_zero()) throw Error(ErrorCode::ZeroDenominator, "vanishing Pochhammer denominator at n = " + std::to_string(n));
    const Scalar num = q_pochhammer(qi, q, n) * q_pochhammer(in.s_star * q.pow(inp.i + 1), q, n) *
                       q_pochhammer(qj, q, n) * q_pochhammer(in.s * q.pow(inp.j + 1), q, n) * qn;
    sum += num / den;
    qn *= q;
  }
  return sum;
}

}  // namespace leonard
