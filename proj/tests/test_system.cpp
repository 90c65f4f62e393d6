#include <cstdlib>

#include "doctest.h"
#include "generators.hpp"
#include "leonard/system.hpp"

using namespace leonard;
using fixtures::Q;

namespace {

const FieldSpec kQ = FieldSpec::rational();

Matrix example_A(FieldSpec f) { return Matrix::from_rows(f, {{0, 3, 0, 0}, {1, 0, 2, 0}, {0, 2, 0, 1}, {0, 0, 3, 0}}); }
Matrix example_A_star(FieldSpec f) {
  return Matrix::from_rows(f, {{3, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, -1, 0}, {0, 0, 0, -3}});
}

bool irreducible_tridiagonal(const Matrix& m) {
  const std::size_t n = m.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const std::size_t gap = i > j ? i - j : j - i;
      if (gap > 1 && !m(i, j).is_zero()) return false;
      if (gap == 1 && m(i, j).is_zero()) return false;
    }
  }
  return true;
}

// θ = θ* = (0, 1, 2), varphi = (-1, -1), phi = (1, 1).
ParameterData d2_example() { return fixtures::make_params(kQ, {"0", "1", "2"}, {"0", "1", "2"}, {"-1", "-1"}, {"1", "1"}); }

// The d = 2 idempotent matrices written out entry by entry.
std::vector<Matrix> d2_idempotents(const ParameterData& p) {
  const auto& t = p.theta;
  const Scalar z = Q(0), o = Q(1);
  return {Matrix::from_rows(kQ, {{o, z, z}, {o / (t[0] - t[1]), z, z}, {o / ((t[0] - t[1]) * (t[0] - t[2])), z, z}}),
          Matrix::from_rows(kQ, {{z, z, z}, {o / (t[1] - t[0]), o, z}, {o / ((t[1] - t[0]) * (t[1] - t[2])), o / (t[1] - t[2]), z}}),
          Matrix::from_rows(kQ, {{z, z, z}, {z, z, z}, {o / ((t[2] - t[1]) * (t[2] - t[0])), o / (t[2] - t[1]), o}})};
}

std::vector<Matrix> d2_dual_idempotents(const ParameterData& p) {
  const auto& s = p.theta_star;
  const Scalar f1 = p.varphi[0], f2 = p.varphi[1];
  const Scalar z = Q(0), o = Q(1);
  return {Matrix::from_rows(kQ, {{o, f1 / (s[0] - s[1]), f1 * f2 / ((s[0] - s[1]) * (s[0] - s[2]))}, {z, z, z}, {z, z, z}}),
          Matrix::from_rows(kQ, {{z, f1 / (s[1] - s[0]), f1 * f2 / ((s[1] - s[0]) * (s[1] - s[2]))},
                                 {z, o, f2 / (s[1] - s[2])},
                                 {z, z, z}}),
          Matrix::from_rows(kQ, {{z, z, f1 * f2 / ((s[2] - s[1]) * (s[2] - s[0]))}, {z, z, f2 / (s[2] - s[1])}, {z, z, o}})};
}

bool bidiagonal(const Matrix& m, bool lower, const std::vector<Scalar>& diag, const std::vector<Scalar>& off) {
  const std::size_t n = m.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      Scalar want = Q(0);
      if (i == j) want = diag[i];
      if (lower && i == j + 1) want = off[j];
      if (!lower && j == i + 1) want = off[i];
      if (!(m(i, j) == want)) return false;
    }
  }
  return true;
}

template <class T>
std::vector<T> reversed(std::vector<T> v) {
  return {v.rbegin(), v.rend()};
}

}  // namespace

TEST_CASE("worked 4x4 example over the rationals") {
  const Matrix A = example_A(kQ), As = example_A_star(kQ);
  const Matrix P = Matrix::from_rows(kQ, {{1, 3, 3, 1}, {1, 1, -1, -1}, {1, -1, -1, 1}, {1, -3, 3, -1}});
  CHECK(P * P == Matrix::identity(kQ, 4) * Q(8));
  CHECK(A * P == P * As);

  const RecognitionResult r = recognize_leonard_pair(A, As);
  REQUIRE(r.systems.size() == 4);
  for (const auto& s : r.systems) {
    CHECK(validate_parameter_array(s.params).ok());
    auto sorted = s.theta;
    std::sort(sorted.begin(), sorted.end(), [](const Scalar& a, const Scalar& b) { return canonical_less(a, b); });
    CHECK(sorted == std::vector<Scalar>{Q(-3), Q(-1), Q(1), Q(3)});
  }
  // The four systems are Φ and its ↓, ⇓, ↓⇓ relatives.
  const ParameterData& base = r.systems.front().params;
  for (const auto& s : r.systems) {
    bool found = false;
    for (const auto& g : {D4Element::identity(), D4Element::down(), D4Element::Down(), D4Element::down().then(D4Element::Down())}) {
      found = found || d4_transform(base, g) == s.params;
    }
    CHECK(found);
  }
}

TEST_CASE("worked 4x4 example is rejected in characteristic 2 and 3") {
  for (std::uint64_t p : {2u, 3u}) {
    const FieldSpec f = FieldSpec::prime(p);
    const Matrix A = example_A(f), As = example_A_star(f);
    CHECK_FALSE(irreducible_tridiagonal(A));
    try {
      recognize_leonard_pair(A, As);
      FAIL("accepted over GF(" << p << ")");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::NotMultiplicityFree);
    }
  }
}

TEST_CASE("recognition rejects commuting diagonal pairs and mismatched inputs") {
  const Matrix D = Matrix::from_rows(kQ, {{0, 0}, {0, 1}});
  try {
    recognize_leonard_pair(D, D);
    FAIL("accepted a commuting pair");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotTridiagonalizable);
  }
  CHECK_THROWS_AS(recognize_leonard_pair(D, example_A(kQ)), Error);
  CHECK_THROWS_AS(recognize_leonard_pair(D, Matrix::from_rows(FieldSpec::prime(5), {{0, 0}, {0, 1}})), Error);
  // Irrational eigenvalues: [[0, 2], [1, 0]] has eigenvalues ±√2.
  try {
    recognize_leonard_pair(Matrix::from_rows(kQ, {{0, 2}, {1, 0}}), D);
    FAIL("accepted irrational eigenvalues");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotMultiplicityFree);
  }
}

TEST_CASE("split form of small examples") {
  const LeonardSystemRep rep = build_split_form(fixtures::d1_example());
  CHECK(rep.A == Matrix::from_rows(kQ, {{0, 0}, {1, 1}}));
  CHECK(rep.A_star == Matrix::from_rows(kQ, {{0, 2}, {0, 1}}));

  const ParameterData p0 = fixtures::make_params(kQ, {"5"}, {"-2"}, {}, {});
  const LeonardSystemRep r0 = build_split_form(p0);
  CHECK(r0.A == Matrix::from_rows(kQ, {{5}}));
  CHECK(r0.E[0] == Matrix::identity(kQ, 1));
  CHECK(r0.E_star[0] == Matrix::identity(kQ, 1));
  CHECK(extract_parameters(r0) == p0);

  ParameterData bad = fixtures::d1_example();
  bad.varphi = {Q(7)};
  CHECK_THROWS_AS(build_split_form(bad), Error);

  // The same d = 1 data over GF(5) builds and is recognised.
  const ParameterData p5 = fixtures::make_params(FieldSpec::prime(5), {"0", "1"}, {"0", "1"}, {"2"}, {"3"});
  const LeonardSystemRep rep5 = build_split_form(p5);
  const RecognitionResult r5 = recognize_leonard_pair(rep5.A, rep5.A_star);
  bool found = false;
  for (const auto& s : r5.systems) found = found || s.params == p5;
  CHECK(found);
}

TEST_CASE("build then extract reproduces the parameters") {
  for (const auto& p : fixtures::generated_systems(56)) {
    const LeonardSystemRep rep = build_split_form(p);
    CHECK(extract_parameters(rep) == p);
    // Idempotent axioms.
    const std::size_t n = rep.A.size();
    Matrix sum(kQ, n), sum_star(kQ, n);
    for (int i = 0; i <= p.d; ++i) {
      const auto k = static_cast<std::size_t>(i);
      CHECK(rep.A * rep.E[k] == rep.E[k] * p.theta[k]);
      CHECK(rep.E[k] * rep.A == rep.E[k] * p.theta[k]);
      CHECK(rep.A_star * rep.E_star[k] == rep.E_star[k] * p.theta_star[k]);
      for (int j = 0; j <= p.d; ++j) {
        const auto m = static_cast<std::size_t>(j);
        CHECK(rep.E[k] * rep.E[m] == (i == j ? rep.E[k] : Matrix(kQ, n)));
      }
      sum += rep.E[k];
      sum_star += rep.E_star[k];
    }
    CHECK(sum == Matrix::identity(kQ, n));
    CHECK(sum_star == Matrix::identity(kQ, n));
  }
}

TEST_CASE("closed-form idempotents agree with the Lagrange products") {
  for (const auto& p : fixtures::generated_systems(40)) {
    const auto [A, As] = split_matrices(p);
    const auto E = idempotents_lagrange(A, p.theta);
    const auto Es = idempotents_lagrange(As, p.theta_star);
    for (int r = 0; r <= p.d; ++r) {
      const auto k = static_cast<std::size_t>(r);
      CHECK(idempotent_entries_closed(p, r, false) == E[k]);
      CHECK(idempotent_entries_closed(p, r, true) == Es[k]);
      CHECK(E[k](k, k).is_one());
    }
  }
  CHECK_THROWS_AS(idempotent_entries_closed(fixtures::d1_example(), 2, false), Error);

  const ParameterData p = d2_example();
  REQUIRE(validate_parameter_array(p).ok());
  const auto [A, As] = split_matrices(p);
  CHECK(idempotents_lagrange(A, p.theta) == d2_idempotents(p));
  CHECK(idempotents_lagrange(As, p.theta_star) == d2_dual_idempotents(p));
  CHECK(d2_idempotents(p)[1](1, 0) == Q(1));
  CHECK(d2_idempotents(p)[0](1, 0) == Q(-1));
  CHECK(d2_idempotents(p)[2](2, 0) == Q(1, 2));

  // Wrong eigenvalues are caught.
  CHECK_THROWS_AS(idempotents_lagrange(A, {Q(0), Q(1), Q(3)}), Error);
  CHECK_THROWS_AS(idempotents_lagrange(A, {Q(0), Q(1), Q(1)}), Error);
  const Matrix D = Matrix::diagonal({Q(3), Q(1), Q(-1), Q(-3)});
  const auto ED = idempotents_lagrange(D, {Q(3), Q(1), Q(-1), Q(-3)});
  for (std::size_t i = 0; i < 4; ++i) {
    Matrix e(kQ, 4);
    e(i, i) = Q(1);
    CHECK(ED[i] == e);
  }
}

TEST_CASE("relatives computed from matrices match the table") {
  for (const auto& p : fixtures::generated_systems(24)) {
    const LeonardSystemRep rep = build_split_form(p);
    for (const auto& g : D4Element::all()) {
      CHECK(extract_parameters(relative(rep, g)) == d4_transform(p, g.inverse()));
      for (const auto& h : D4Element::all()) {
        CHECK(extract_parameters(relative(relative(rep, g), h)) == extract_parameters(relative(rep, g.then(h))));
      }
    }
  }
}

TEST_CASE("trace coefficients and the four expressions for the split sequences") {
  const ParameterData p1 = fixtures::d1_example();
  const TraceCoeffs t1 = trace_coefficients(build_split_form(p1));
  CHECK(t1.a == std::vector<Scalar>{Q(-2), Q(3)});
  const auto four = varphi_four_ways(p1, t1);
  CHECK(four[0][0] == Q(2));
  CHECK(varphi_four_ways(p1, t1, true)[0][0] == Q(3));

  const ParameterData p0 = fixtures::make_params(kQ, {"5"}, {"-2"}, {}, {});
  const TraceCoeffs t0 = trace_coefficients(build_split_form(p0));
  CHECK(t0.a == std::vector<Scalar>{Q(5)});
  CHECK(t0.a_star == std::vector<Scalar>{Q(-2)});

  for (const auto& p : fixtures::generated_systems(40)) {
    const TraceCoeffs tc = trace_coefficients(build_split_form(p));
    CHECK(tc == trace_coefficients_formula(p));
    Scalar s = Q(0), s_star = Q(0);
    for (int i = 0; i <= p.d; ++i) {
      s += p.theta[static_cast<std::size_t>(i)] - tc.a[static_cast<std::size_t>(i)];
      s_star += p.theta_star[static_cast<std::size_t>(i)] - tc.a_star[static_cast<std::size_t>(i)];
    }
    CHECK(s.is_zero());
    CHECK(s_star.is_zero());
    const auto vf = varphi_four_ways(p, tc);
    const auto pf = varphi_four_ways(p, tc, true);
    for (int i = 1; i <= p.d; ++i) {
      for (int k = 0; k < 4; ++k) {
        CHECK(vf[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(k)] == p.varphi_at(i));
        CHECK(pf[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(k)] == p.phi_at(i));
      }
    }
  }
}

TEST_CASE("nine parameters determine the system") {
  using E = NineParameters::Eighth;
  using N = NineParameters::Ninth;
  int checked = 0;
  for (const auto& p : fixtures::generated_systems(48)) {
    if (p.d < 3) {
      CHECK_THROWS_AS(nine_from(p, E::Theta3, N::Varphi1), Error);
      continue;
    }
    for (E e : {E::Theta3, E::ThetaStar3}) {
      for (N n : {N::Varphi1, N::Phi1, N::VarphiD, N::PhiD}) {
        CHECK(reconstruct_from_nine(nine_from(p, e, n)) == p);
        ++checked;
      }
    }
  }
  CHECK(checked > 0);
}

TEST_CASE("split form transforms, zero pattern and irreducibility") {
  for (const auto& p : fixtures::generated_systems(24)) {
    const LeonardSystemRep rep = build_split_form(p);
    const std::size_t n = rep.A.size();
    const Matrix G = lemma_g_matrix(p);
    const Matrix Gi = G.inverse();
    const Matrix Z = reversal_matrix(kQ, n);
    const std::vector<Scalar> ones(n, Q(1));
    CHECK(bidiagonal(Gi * rep.A_star.transpose() * G, true, p.theta_star, ones));
    CHECK(bidiagonal(Gi * rep.A.transpose() * G, false, p.theta, p.varphi));
    CHECK(bidiagonal(Z * rep.A.transpose() * Z, true, reversed(p.theta), ones));
    CHECK(bidiagonal(Z * rep.A_star.transpose() * Z, false, reversed(p.theta_star), reversed(p.varphi)));
    CHECK(bidiagonal(Z * G * rep.A_star * Gi * Z, true, reversed(p.theta_star), ones));
    CHECK(bidiagonal(Z * G * rep.A * Gi * Z, false, reversed(p.theta), reversed(p.varphi)));

    for (int i = 0; i <= p.d; ++i) {
      for (int j = 0; j <= p.d; ++j) {
        const bool far = std::abs(i - j) > 1;
        const auto a = static_cast<std::size_t>(i), b = static_cast<std::size_t>(j);
        CHECK((rep.E[a] * rep.A_star * rep.E[b]).is_zero() == far);
        CHECK((rep.E_star[a] * rep.A * rep.E_star[b]).is_zero() == far);
      }
    }
    CHECK(is_irreducible(rep));
    const auto subs = submodule_subsets(rep);
    CHECK(subs.size() == 2);
  }

  // A zero in the superdiagonal splits off a submodule.
  ParameterData p = d2_example();
  p.varphi[0] = Q(0);
  LeonardSystemRep rep;
  rep.field = kQ;
  rep.d = 2;
  std::tie(rep.A, rep.A_star) = split_matrices(p);
  rep.E = idempotents_lagrange(rep.A, p.theta);
  rep.E_star = idempotents_lagrange(rep.A_star, p.theta_star);
  CHECK_FALSE(is_irreducible(rep));
  CHECK(submodule_subsets(rep).size() > 2);
}
