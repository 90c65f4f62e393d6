// Acceptance checks: one PASS/FAIL line per criterion, all exact.
//
// Every criterion runs against the same seeded collection of q-Racah arrays
// (d cycling through 1..8) and reports its wall time next to its budget;
// exceeding the budget fails the criterion.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <exception>
#include <functional>
#include <string>
#include <vector>

#include "generators.hpp"
#include "leonard/closed_form.hpp"
#include "leonard/d4.hpp"
#include "leonard/polys.hpp"
#include "leonard/relations.hpp"
#include "leonard/system.hpp"

using namespace leonard;
using fixtures::Q;

namespace {

const FieldSpec kQ = FieldSpec::rational();
constexpr int kGeneratedCount = 56;

const std::vector<ParameterData>& generated() {
  static const std::vector<ParameterData> sets = fixtures::generated_systems(kGeneratedCount);
  return sets;
}

std::size_t idx(int i) { return static_cast<std::size_t>(i); }

// Sequence obeying θ_{i+1} = (β+1)(θ_i - θ_{i-1}) + θ_{i-2} from three seeds.
std::vector<Scalar> beta_sequence(const Scalar& beta, std::vector<Scalar> s, int len) {
  const Scalar b1 = beta + Scalar::one(beta.field());
  while (static_cast<int>(s.size()) < len) {
    const std::size_t n = s.size();
    s.push_back(s[n - 3] - b1 * (s[n - 2] - s[n - 1]));
  }
  return s;
}

Scalar vartheta_direct(const std::vector<Scalar>& th, int i) {
  const int d = static_cast<int>(th.size()) - 1;
  Scalar acc = Scalar::zero(th[0].field());
  for (int h = 0; h < i; ++h) acc += th[idx(h)] - th[idx(d - h)];
  return acc / (th[0] - th[idx(d)]);
}

bool has_zero_off_diagonal(const Matrix& m) {
  for (std::size_t i = 0; i + 1 < m.size(); ++i) {
    if (m(i, i + 1).is_zero() || m(i + 1, i).is_zero()) return true;
  }
  return false;
}

// 1. The worked 4x4 example.
bool worked_example() {
  auto A = [](FieldSpec f) {
    return Matrix::from_rows(f, {{0, 3, 0, 0}, {1, 0, 2, 0}, {0, 2, 0, 1}, {0, 0, 3, 0}});
  };
  auto As = [](FieldSpec f) {
    return Matrix::from_rows(f, {{3, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, -1, 0}, {0, 0, 0, -3}});
  };
  const Matrix P = Matrix::from_rows(kQ, {{1, 3, 3, 1}, {1, 1, -1, -1}, {1, -1, -1, 1}, {1, -3, 3, -1}});
  bool ok = P * P == Matrix::identity(kQ, 4) * Q(8) && A(kQ) * P == P * As(kQ);
  const RecognitionResult r = recognize_leonard_pair(A(kQ), As(kQ));
  ok = ok && r.systems.size() == 4;
  for (const auto& s : r.systems) ok = ok && validate_parameter_array(s.params).ok();
  for (std::uint64_t p : {2u, 3u}) {
    const FieldSpec f = FieldSpec::prime(p);
    ok = ok && has_zero_off_diagonal(A(f));
    try {
      recognize_leonard_pair(A(f), As(f));
      ok = false;
    } catch (const Error& e) {
      ok = ok && e.code() == ErrorCode::NotMultiplicityFree;
    }
  }
  return ok;
}

// 2. validate, build, extract.
bool round_trip() {
  bool ok = generated().size() >= 50;
  for (const auto& p : generated()) {
    ok = ok && validate_parameter_array(p).ok();
    ok = ok && extract_parameters(build_split_form(p)) == p;
  }
  return ok;
}

// 3. Closed-form idempotent entries against Lagrange products, and the d = 2
// matrices at θ = θ* = (0, 1, 2).
bool idempotents() {
  bool ok = true;
  for (const auto& p : generated()) {
    const auto [A, As] = split_matrices(p);
    const auto E = idempotents_lagrange(A, p.theta);
    const auto Es = idempotents_lagrange(As, p.theta_star);
    for (int r = 0; r <= p.d; ++r) {
      ok = ok && idempotent_entries_closed(p, r, false) == E[idx(r)];
      ok = ok && idempotent_entries_closed(p, r, true) == Es[idx(r)];
    }
  }
  const ParameterData p = fixtures::make_params(kQ, {"0", "1", "2"}, {"0", "1", "2"}, {"-1", "-1"}, {"1", "1"});
  ok = ok && validate_parameter_array(p).ok();
  const auto& t = p.theta;
  const auto& s = p.theta_star;
  const Scalar f1 = p.varphi[0], f2 = p.varphi[1], z = Q(0), o = Q(1);
  const std::vector<Matrix> E{
      Matrix::from_rows(kQ, {{o, z, z}, {o / (t[0] - t[1]), z, z}, {o / ((t[0] - t[1]) * (t[0] - t[2])), z, z}}),
      Matrix::from_rows(kQ, {{z, z, z}, {o / (t[1] - t[0]), o, z}, {o / ((t[1] - t[0]) * (t[1] - t[2])), o / (t[1] - t[2]), z}}),
      Matrix::from_rows(kQ, {{z, z, z}, {z, z, z}, {o / ((t[2] - t[1]) * (t[2] - t[0])), o / (t[2] - t[1]), o}})};
  const std::vector<Matrix> Es{
      Matrix::from_rows(kQ, {{o, f1 / (s[0] - s[1]), f1 * f2 / ((s[0] - s[1]) * (s[0] - s[2]))}, {z, z, z}, {z, z, z}}),
      Matrix::from_rows(kQ, {{z, f1 / (s[1] - s[0]), f1 * f2 / ((s[1] - s[0]) * (s[1] - s[2]))}, {z, o, f2 / (s[1] - s[2])}, {z, z, z}}),
      Matrix::from_rows(kQ, {{z, z, f1 * f2 / ((s[2] - s[1]) * (s[2] - s[0]))}, {z, z, f2 / (s[2] - s[1])}, {z, z, o}})};
  const auto [A, As] = split_matrices(p);
  ok = ok && idempotents_lagrange(A, p.theta) == E && idempotents_lagrange(As, p.theta_star) == Es;
  for (int r = 0; r <= 2; ++r) {
    ok = ok && idempotent_entries_closed(p, r, false) == E[idx(r)] && idempotent_entries_closed(p, r, true) == Es[idx(r)];
  }
  return ok;
}

// 4. The eight relatives against the table, and the composition law.
bool d4_orbit() {
  bool ok = true;
  const auto group = D4Element::all();
  for (const auto& p : generated()) {
    const LeonardSystemRep rep = build_split_form(p);
    for (const auto& g : group) {
      ok = ok && extract_parameters(relative(rep, g.inverse())) == d4_transform(p, g);
      const ParameterData pg = d4_transform(p, g);
      for (const auto& h : group) ok = ok && d4_transform(pg, h) == d4_transform(p, h.then(g));
    }
  }
  // Composition of the matrix actions on one system per diameter.
  for (std::size_t k = 0; k < 8; ++k) {
    const LeonardSystemRep rep = build_split_form(generated()[k]);
    for (const auto& g : group) {
      const LeonardSystemRep rg = relative(rep, g);
      for (const auto& h : group) {
        ok = ok && extract_parameters(relative(rg, h)) == extract_parameters(relative(rep, g.then(h)));
      }
    }
  }
  return ok;
}

// 5. Both tridiagonal relations, and uniqueness of the scalars for d >= 3.
bool relations() {
  bool ok = true;
  for (const auto& p : generated()) {
    const RelationScalars s = compute_relation_scalars(p);
    const LeonardSystemRep rep = build_split_form(p);
    const CommutatorReport c = verify_tridiagonal_relations(rep, s);
    ok = ok && c.ok() && c.residual.is_zero() && c.residual_star.is_zero();
    if (p.d < 3) continue;
    for (int k = 0; k < 5; ++k) {
      RelationScalars t = s;
      Scalar* fields[] = {&t.beta, &t.gamma, &t.gamma_star, &t.rho, &t.rho_star};
      *fields[k] += Q(1);
      ok = ok && !verify_tridiagonal_relations(rep, t).ok();
    }
  }
  return ok;
}

// 6. Closed forms of the normalised sums in all four cases, and their
// recursions on generated eigenvalue sequences.
bool vartheta_suite() {
  bool ok = true;
  struct Case {
    Scalar beta;
    std::vector<Scalar> seeds;
    int d;
  };
  const std::vector<Case> cases{{Q(2), {Q(0), Q(1), Q(2)}, 5},   {Q(-2), {Q(0), Q(3), Q(1)}, 5},
                                {Q(-2), {Q(0), Q(3), Q(1)}, 6},  {Q(5, 2), {Q(0), Q(3, 2), Q(21, 4)}, 7},
                                {Q(3), {Q(0), Q(1), Q(3)}, 6}};
  for (const auto& c : cases) {
    const auto th = beta_sequence(c.beta, c.seeds, c.d + 1);
    ok = ok && is_beta_recurrent(th, c.beta);
    for (int i = 0; i <= c.d + 1; ++i) ok = ok && vartheta_closed_form(c.d, i, c.beta) == vartheta_direct(th, i);
  }
  const FieldSpec g2 = FieldSpec::prime(2);
  const Scalar zero2(g2, 0L);
  const std::vector<Scalar> th2{zero2, zero2, Scalar(g2, 1L), Scalar(g2, 1L)};
  ok = ok && is_beta_recurrent(th2, zero2);
  for (int i = 0; i <= 4; ++i) ok = ok && vartheta_closed_form(3, i, zero2) == vartheta_direct(th2, i);

  for (const auto& p : generated()) {
    const int d = p.d;
    const auto vt = vartheta_sequence(p.theta);
    auto T = [&](int k) { return p.theta[idx(k)]; };
    auto V = [&](int k) { return vt[idx(k)]; };
    for (int i = 0; i <= d + 1; ++i) ok = ok && V(i) == vartheta_direct(p.theta, i);
    if (d < 3) continue;
    const Scalar beta = *validate_parameter_array(p).common_value - Q(1);
    ok = ok && is_beta_recurrent(vt, beta);
    for (int i = 1; i <= d; ++i) ok = ok && V(i + 1) == V(i) * (T(i) - T(d - 1)) / (T(i - 1) - T(d)) + Q(1);
    for (int i = 0; i <= d - 1; ++i) ok = ok && V(i) == V(i + 1) * (T(i) - T(1)) / (T(i + 1) - T(0)) + Q(1);
  }
  return ok;
}

// 7. Vanishing products against the ϑ recursion, on valid and perturbed data.
bool vanishing_products() {
  bool ok = true;
  int perturbed = 0;
  for (const auto& p : generated()) {
    const VanishingProductsReport v = vanishing_products_check(build_split_form(p), p);
    ok = ok && v.agree() && v.products_vanish;
    if (p.d < 2) continue;
    ParameterData q = p;
    q.varphi[1] += Q(1);
    const VanishingProductsReport w = vanishing_products_check(q);
    ok = ok && w.agree() && !w.recursion_holds;
    ++perturbed;
  }
  return ok && perturbed >= 20;
}

// 8. Polynomial sequences, recurrence data and orthogonality.
bool polynomial_suite() {
  bool ok = true;
  for (const auto& p : generated()) {
    const LeonardSystemRep rep = build_split_form(p);
    const PolySeqBundle b = build_poly_bundle(p);
    const RecurrenceData rec = recurrence_data(rep, p);
    ok = ok && check_poly_identities(b, rec, rep, p).ok() && orthogonality_check(b, rec, p).ok();
    for (int i = 0; i <= p.d; ++i) {
      ok = ok && rec.a[idx(i)] == (rep.E_star[idx(i)] * rep.A).trace();
      if (i > 0) ok = ok && rec.x[idx(i)] == (rep.E_star[idx(i)] * rep.A * rep.E_star[idx(i - 1)] * rep.A).trace();
    }
  }
  return ok;
}

// 9. u_i(θ_j) against the terminating hypergeometric sum.
bool hypergeometric() {
  bool ok = true;
  std::vector<QRacahInput> inputs{fixtures::reference_qracah_input()};
  fixtures::QRacahGenerator gen(424242);
  for (int t = 0; t < 12; ++t) inputs.push_back(gen.admissible_input(1 + t % 8));
  for (const auto& in : inputs) {
    const ParameterData p = qracah_params(in);
    const PolySeqBundle b = build_poly_bundle(p);
    for (int i = 0; i <= in.d; ++i) {
      for (int j = 0; j <= in.d; ++j) ok = ok && qracah_u_value({i, j, in}) == b.u[idx(i)](p.theta[idx(j)]);
    }
  }
  return ok;
}

// 10. Reconstruction from nine parameters.
bool nine_parameters() {
  using E = NineParameters::Eighth;
  using N = NineParameters::Ninth;
  bool ok = true;
  int checked = 0;
  for (const auto& p : generated()) {
    if (p.d < 3) continue;
    for (E e : {E::Theta3, E::ThetaStar3}) {
      for (N n : {N::Varphi1, N::Phi1, N::VarphiD, N::PhiD}) {
        ok = ok && reconstruct_from_nine(nine_from(p, e, n)) == p;
        ++checked;
      }
    }
  }
  return ok && checked > 0;
}

struct Criterion {
  int number;
  const char* name;
  double budget_seconds;
  std::function<bool()> check;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "worked 4x4 example over Q, GF(2), GF(3)", 1.0, worked_example},
      {2, "validate/build/extract round trip", 10.0, round_trip},
      {3, "closed-form vs Lagrange idempotents", 5.0, idempotents},
      {4, "D4 orbit and composition law", 10.0, d4_orbit},
      {5, "tridiagonal relations and uniqueness", 10.0, relations},
      {6, "normalised sums: closed forms and recursions", 5.0, vartheta_suite},
      {7, "vanishing products vs recursion", 5.0, vanishing_products},
      {8, "polynomial suite", 10.0, polynomial_suite},
      {9, "u_i(theta_j) vs 4phi3", 5.0, hypergeometric},
      {10, "nine-parameter reconstruction", 5.0, nine_parameters},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    bool ok = false;
    std::string note;
    try {
      ok = c.check();
    } catch (const std::exception& e) {
      note = std::string(" exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs > c.budget_seconds) note += " over time budget";
    ok = ok && secs <= c.budget_seconds;
    failures += ok ? 0 : 1;
    std::printf("criterion %2d: %s  %-46s %7.3f s (budget %.0f s)%s\n", c.number, ok ? "PASS" : "FAIL", c.name, secs,
                c.budget_seconds, note.c_str());
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
