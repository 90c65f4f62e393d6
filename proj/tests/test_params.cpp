#include "doctest.h"
#include "generators.hpp"
#include "leonard/closed_form.hpp"
#include "leonard/d4.hpp"
#include "leonard/params.hpp"

using namespace leonard;
using fixtures::Q;

namespace {

const FieldSpec kQ = FieldSpec::rational();

// Direct definition of the normalised sums, written out independently.
Scalar vartheta_oracle(const std::vector<Scalar>& th, int i) {
  const int d = static_cast<int>(th.size()) - 1;
  Scalar acc = Scalar::zero(th[0].field());
  for (int h = 0; h < i; ++h) acc += th[static_cast<std::size_t>(h)] - th[static_cast<std::size_t>(d - h)];
  return acc / (th[0] - th[static_cast<std::size_t>(d)]);
}

// Sequence obeying θ_{i+1} = (β+1)(θ_i - θ_{i-1}) + θ_{i-2} from three seeds.
std::vector<Scalar> beta_sequence(const Scalar& beta, Scalar a, Scalar b, Scalar c, int len) {
  std::vector<Scalar> s{std::move(a), std::move(b), std::move(c)};
  const Scalar b1 = beta + Scalar::one(beta.field());
  while (static_cast<int>(s.size()) < len) {
    const std::size_t n = s.size();
    s.push_back(s[n - 3] - b1 * (s[n - 2] - s[n - 1]));
  }
  s.resize(static_cast<std::size_t>(len));
  return s;
}

}  // namespace

TEST_CASE("validation of the d = 1 example and its failures") {
  const ParameterData p = fixtures::d1_example();
  const ValidationReport r = validate_parameter_array(p);
  CHECK(r.ok());
  CHECK(r.conditions[4].status == ConditionStatus::VacuousPass);

  ParameterData bad = p;
  bad.phi = {Q(0)};
  const ValidationReport rb = validate_parameter_array(bad);
  CHECK_FALSE(rb.ok());
  CHECK(rb.conditions[0].status == ConditionStatus::Fail);

  bad = p;
  bad.theta = {Q(1), Q(1)};
  CHECK(validate_parameter_array(bad).conditions[1].status == ConditionStatus::Fail);

  bad = p;
  bad.varphi = {Q(5)};
  const ValidationReport rc = validate_parameter_array(bad);
  CHECK(rc.conditions[2].status == ConditionStatus::Fail);
  CHECK(rc.conditions[2].offending == std::vector<int>{1});

  bad = p;
  bad.phi = {Q(3), Q(4)};
  CHECK_THROWS_AS(validate_parameter_array(bad), Error);
}

TEST_CASE("q-Racah reference array") {
  const ParameterData p = fixtures::reference_qracah();
  CHECK(p.theta == std::vector<Scalar>{Q(0), Q(3, 2), Q(21, 4), Q(105, 8)});
  const ValidationReport r = validate_parameter_array(p);
  REQUIRE(r.ok());
  REQUIRE(r.common_value.has_value());
  CHECK(*r.common_value == Q(7, 2));
  CHECK(phi_from_varphi(p) == p.phi);

  QRacahInput in = fixtures::reference_qracah_input();
  in.r2 = Q(-15);
  CHECK_THROWS_AS(qracah_params(in), Error);
  in = fixtures::reference_qracah_input();
  in.q = Q(0);
  CHECK_THROWS_AS(qracah_params(in), Error);
}

TEST_CASE("condition (v) detects a broken ratio") {
  ParameterData p = fixtures::reference_qracah();
  p.theta[3] += Q(1);
  const ValidationReport r = validate_parameter_array(p);
  CHECK(r.conditions[4].status == ConditionStatus::Fail);
}

TEST_CASE("phi from varphi") {
  CHECK(phi_from_varphi(fixtures::d1_example()) == std::vector<Scalar>{Q(3)});
  // Palindromic θ leaves the sequence unchanged.
  ParameterData p = fixtures::make_params(kQ, {"1", "5", "1"}, {"0", "1", "2"}, {"3", "4"}, {"0", "0"});
  CHECK(phi_from_varphi(p) == p.varphi);
  for (const auto& g : fixtures::generated_systems(24)) CHECK(phi_from_varphi(g) == g.phi);
}

TEST_CASE("normalised sums: boundary values, palindromy, examples") {
  const std::vector<Scalar> th{Q(3), Q(1), Q(-1), Q(-3), Q(-5)};
  CHECK(vartheta_sum(th, 2) == Q(3, 2));
  for (const auto& p : fixtures::generated_systems(32)) {
    const int d = p.d;
    CHECK(vartheta_sum(p.theta, 0).is_zero());
    CHECK(vartheta_sum(p.theta, 1).is_one());
    CHECK(vartheta_sum(p.theta, d).is_one());
    CHECK(vartheta_sum(p.theta, d + 1).is_zero());
    for (int i = 0; i <= d + 1; ++i) {
      CHECK(vartheta_sum(p.theta, i) == vartheta_oracle(p.theta, i));
      CHECK(vartheta_sum(p.theta, i) == vartheta_sum(p.theta, d - i + 1));
    }
  }
  CHECK(vartheta_sum({Q(4)}, 1).is_one());
  CHECK_THROWS_AS(vartheta_sum({Q(1), Q(2), Q(1)}, 1), Error);
  CHECK_THROWS_AS(vartheta_sum({Q(1), Q(2)}, 3), Error);
}

TEST_CASE("closed forms of the normalised sums in all four cases") {
  // β = 2 (arithmetic), β = -2 (d odd and even), generic β, and char 2.
  struct Case {
    Scalar beta;
    std::vector<Scalar> seeds;
    int d;
  };
  const std::vector<Case> cases{
      {Q(2), {Q(0), Q(1), Q(2)}, 5},
      {Q(2), {Q(1), Q(4), Q(9)}, 6},
      {Q(-2), {Q(0), Q(3), Q(1)}, 5},
      {Q(-2), {Q(0), Q(3), Q(1)}, 6},
      {Q(5, 2), {Q(0), Q(3, 2), Q(21, 4)}, 7},
      {Q(3), {Q(0), Q(1), Q(3)}, 6},  // q lies in a quadratic extension
  };
  for (const auto& c : cases) {
    const auto th = beta_sequence(c.beta, c.seeds[0], c.seeds[1], c.seeds[2], c.d + 1);
    CAPTURE(c.beta.to_string());
    CAPTURE(c.d);
    REQUIRE(is_beta_recurrent(th, c.beta));
    for (int i = 0; i <= c.d + 1; ++i) CHECK(vartheta_closed_form(c.d, i, c.beta) == vartheta_sum(th, i));
  }
  // Characteristic 2 with β = 0 and d = 3. GF(2) has no four distinct
  // elements, so this is a β-recurrent sequence with θ_0 ≠ θ_3 rather than
  // an eigenvalue sequence.
  const FieldSpec g2 = FieldSpec::prime(2);
  const std::vector<Scalar> th2{Scalar(g2, 0L), Scalar(g2, 0L), Scalar(g2, 1L), Scalar(g2, 1L)};
  REQUIRE(is_beta_recurrent(th2, Scalar(g2, 0L)));
  for (int i = 0; i <= 4; ++i) CHECK(vartheta_closed_form(3, i, Scalar(g2, 0L)) == vartheta_sum(th2, i));
  CHECK_THROWS_AS(vartheta_closed_form(5, 1, Scalar(g2, 0L)), Error);
  CHECK_THROWS_AS(vartheta_closed_form(2, 1, Q(3)), Error);
}

TEST_CASE("recursions and identities of the normalised sums on generated data") {
  for (const auto& p : fixtures::generated_systems(40)) {
    const auto& th = p.theta;
    const int d = p.d;
    const auto vt = vartheta_sequence(th);
    auto T = [&](int k) { return th[static_cast<std::size_t>(k)]; };
    auto V = [&](int k) { return vt[static_cast<std::size_t>(k)]; };
    if (d >= 3) {
      const Scalar beta = *validate_parameter_array(p).common_value - Q(1);
      CHECK(is_beta_recurrent(vt, beta));
      for (int i = 1; i <= d; ++i) CHECK(V(i + 1) == V(i) * (T(i) - T(d - 1)) / (T(i - 1) - T(d)) + Q(1));
      for (int i = 0; i <= d - 1; ++i) CHECK(V(i) == V(i + 1) * (T(i) - T(1)) / (T(i + 1) - T(0)) + Q(1));
    }
    for (int i = 1; i <= d; ++i) {
      const Scalar den = T(0) - T(i);
      if (den.is_zero()) continue;
      const Scalar lhs = (T(0) - T(1) + T(i - 1) - T(i)) / den * V(i);
      const Scalar rhs = (T(0) + T(i - 1) - T(d - i + 1) - T(d)) / (T(0) - T(d));
      CHECK(lhs == rhs);
    }
  }
}

TEST_CASE("inversion and directed converse for the normalised sums") {
  fixtures::QRacahGenerator gen(99);
  for (int t = 0; t < 16; ++t) {
    const ParameterData p = gen.admissible(3 + t % 6);
    const int d = p.d;
    const auto& th = p.theta;
    auto T = [&](int k) { return th[static_cast<std::size_t>(k)]; };
    // A sequence obeying the recursion with an arbitrary first term equals
    // that term times the normalised sums.
    const Scalar first = gen.small_nonzero();
    std::vector<Scalar> s{Q(0), first};
    for (int i = 1; i <= d - 1; ++i) s.push_back(s.back() * (T(i) - T(d - 1)) / (T(i - 1) - T(d)) + first);
    for (int i = 0; i <= d; ++i) CHECK(s[static_cast<std::size_t>(i)] == first * vartheta_sum(th, i));

    // Directed converse: a β-recurrent sequence vanishing at 0 and d+1 with
    // equal values at 1 and d is a multiple of the sums.
    const Scalar beta = *validate_parameter_array(p).common_value - Q(1);
    const auto vt = vartheta_sequence(th);
    std::vector<Scalar> scaled;
    for (const auto& v : vt) scaled.push_back(v * first);
    REQUIRE(is_beta_recurrent(scaled, beta));
    CHECK(scaled.front().is_zero());
    CHECK(scaled.back().is_zero());
    CHECK(scaled[1] == scaled[static_cast<std::size_t>(d)]);
    for (int i = 0; i <= d + 1; ++i) CHECK(scaled[static_cast<std::size_t>(i)] == scaled[1] * vt[static_cast<std::size_t>(i)]);
  }
}

TEST_CASE("recurrence classification") {
  std::vector<Scalar> arith;
  for (int i = 0; i <= 5; ++i) arith.push_back(Q(i));
  const RecurrenceClass a = classify_recurrence(arith);
  CHECK(a.kind == RecurrenceKind::Recurrent);
  CHECK(*a.beta == Q(2));
  CHECK(*a.gamma == Q(0));
  CHECK(*a.rho == Q(1));

  std::vector<Scalar> geo;
  for (int i = 0; i <= 5; ++i) geo.push_back(Q(2).pow(i));
  CHECK(recurrence_ratio(geo, 2) == Q(7, 2));
  CHECK(*classify_recurrence(geo).beta == Q(5, 2));

  const RecurrenceClass c = classify_recurrence({Q(4), Q(4), Q(4), Q(4), Q(4)});
  CHECK(c.kind == RecurrenceKind::BetaGammaRecurrent);
  CHECK(is_beta_gamma_recurrent({Q(4), Q(4), Q(4), Q(4)}, Q(2), Q(0)));

  CHECK(classify_recurrence({Q(0), Q(1), Q(5), Q(2), Q(9), Q(-3)}).kind == RecurrenceKind::None);

  // The notions nest: β-recurrent ⇒ (β,γ) for the computed γ ⇒ (β,γ,ϱ).
  for (const auto& p : fixtures::generated_systems(24)) {
    if (p.d < 3) continue;
    const RecurrenceClass r = classify_recurrence(p.theta);
    REQUIRE(r.kind == RecurrenceKind::Recurrent);
    CHECK(*r.beta + Q(1) == *validate_parameter_array(p).common_value);
    CHECK(is_beta_recurrent(p.theta, *r.beta));
    CHECK(is_beta_gamma_recurrent(p.theta, *r.beta, *r.gamma));
    CHECK(is_beta_gamma_rho_recurrent(p.theta, *r.beta, *r.gamma, *r.rho));
    CHECK_FALSE(is_beta_recurrent(p.theta, *r.beta + Q(1)));
  }
}

TEST_CASE("closed-form fits") {
  const auto fit = fit_closed_form({Q(0), Q(1), Q(2), Q(3)}, Q(2));
  CHECK(fit.basis == ClosedFormBasis::Quadratic);
  CHECK(fit.alpha[0].re() == Q(0));
  CHECK(fit.alpha[1].re() == Q(1));
  CHECK(fit.alpha[2].re() == Q(0));

  // θ_i = (1 - 2^i)(1 - 2^{i+1}) / 2^i = -3 + 2·2^i + 2^{-i}.
  std::vector<Scalar> th;
  for (int i = 0; i <= 3; ++i) th.push_back((Q(1) - Q(2).pow(i)) * (Q(1) - Q(2).pow(i + 1)) / Q(2).pow(i));
  const auto g = fit_closed_form(th, Q(5, 2));
  CHECK(g.basis == ClosedFormBasis::Geometric);
  REQUIRE(g.q.has_value());
  if (g.q->re() == Q(2)) {
    CHECK(g.alpha[0].re() == Q(-3));
    CHECK(g.alpha[1].re() == Q(2));
    CHECK(g.alpha[2].re() == Q(1));
  } else {
    CHECK(g.q->re() == Q(1, 2));
    CHECK(g.alpha[0].re() == Q(-3));
    CHECK(g.alpha[1].re() == Q(1));
    CHECK(g.alpha[2].re() == Q(2));
  }
  for (int i = 0; i <= 3; ++i) CHECK(g.evaluate(i).re() == th[static_cast<std::size_t>(i)]);

  const auto alt = fit_closed_form(beta_sequence(Q(-2), Q(1), Q(0), Q(5), 6), Q(-2));
  CHECK(alt.basis == ClosedFormBasis::Alternating);

  const auto ext_seq = beta_sequence(Q(3), Q(0), Q(1), Q(3), 7);
  const auto ext = fit_closed_form(ext_seq, Q(3));
  CHECK(ext.basis == ClosedFormBasis::GeometricExtension);
  for (int i = 0; i < 7; ++i) CHECK(ext.evaluate(i) == ExtValue::embed(ext_seq[static_cast<std::size_t>(i)], Q(3)));
  CHECK_THROWS_AS(fit_closed_form(ext_seq, Q(3), false), Error);

  const FieldSpec g2 = FieldSpec::prime(2);
  const std::vector<Scalar> bin{Scalar(g2, 0L), Scalar(g2, 1L), Scalar(g2, 1L), Scalar(g2, 0L)};
  CHECK(fit_closed_form(bin, Scalar(g2, 0L)).basis == ClosedFormBasis::Binomial);

  CHECK_THROWS_AS(fit_closed_form({Q(0), Q(1), Q(5), Q(2)}, Q(2)), Error);
}

TEST_CASE("D4 words, inverses and the composition law") {
  const auto all = D4Element::all();
  for (const auto& g : all) {
    CHECK(D4Element::parse(g.name()) == g);
    CHECK(g.then(g.inverse()) == D4Element::identity());
  }
  CHECK(D4Element::parse("↓⇓*") == D4Element::parse("down Down *"));
  CHECK(D4Element::parse("**") == D4Element::identity());
  CHECK_THROWS_AS(D4Element::parse("up"), Error);
  // Conjugating ↓ by * gives ⇓, and ↓⇓ is central.
  const auto dn = D4Element::down(), Dn = D4Element::Down(), st = D4Element::star();
  CHECK(st.then(dn).then(st) == Dn);
  CHECK(dn.then(Dn) == Dn.then(dn));

  for (const auto& p : fixtures::generated_systems(16)) {
    for (const auto& g : all) {
      CHECK(validate_parameter_array(d4_transform(p, g)).ok());
      for (const auto& h : all) CHECK(d4_transform(d4_transform(p, g), h) == d4_transform(p, h.then(g)));
    }
    CHECK(d4_transform(d4_transform(p, st), st) == p);
  }
  const ParameterData r = d4_transform(fixtures::d1_example(), dn);
  CHECK(r.theta_star == std::vector<Scalar>{Q(1), Q(0)});
  CHECK(r.varphi == std::vector<Scalar>{Q(3)});
  CHECK(r.phi == std::vector<Scalar>{Q(2)});
}
