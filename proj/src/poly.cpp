#include "leonard/poly.hpp"

#include <algorithm>
#include <random>
#include <sstream>

namespace leonard {

Poly::Poly(FieldSpec field, std::vector<Scalar> coeffs) : field_(field), c_(std::move(coeffs)) {
  for (const auto& c : c_) {
    if (!(c.field() == field_)) throw Error(ErrorCode::FieldMismatch, "coefficient field differs from polynomial field");
  }
  trim();
}

void Poly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Poly Poly::constant(const Scalar& c) { return Poly(c.field(), {c}); }

Poly Poly::lambda(FieldSpec field) { return Poly(field, {Scalar::zero(field), Scalar::one(field)}); }

Poly Poly::linear(const Scalar& c) { return Poly(c.field(), {-c, Scalar::one(c.field())}); }

Poly Poly::from_roots(FieldSpec field, const std::vector<Scalar>& roots) {
  Poly out = constant(Scalar::one(field));
  for (const auto& r : roots) out *= linear(r);
  return out;
}

Scalar Poly::coeff(std::size_t k) const { return k < c_.size() ? c_[k] : Scalar::zero(field_); }

Scalar Poly::leading() const {
  if (c_.empty()) throw Error(ErrorCode::EmptyPolynomial, "zero polynomial has no leading coefficient");
  return c_.back();
}

Poly Poly::monic() const {
  if (c_.empty()) return *this;
  return *this * leading().inverse();
}

Scalar Poly::operator()(const Scalar& x) const {
  Scalar acc = Scalar::zero(field_);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Matrix Poly::operator()(const Matrix& m) const {
  if (!(m.field() == field_)) throw Error(ErrorCode::FieldMismatch, "matrix and polynomial fields differ");
  Matrix acc(field_, m.size());
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    acc = mat_mul(acc, m);
    for (std::size_t i = 0; i < m.size(); ++i) acc(i, i) += *it;
  }
  return acc;
}

Poly& Poly::operator+=(const Poly& rhs) {
  if (!(field_ == rhs.field_)) throw Error(ErrorCode::FieldMismatch, "polynomial fields differ");
  if (c_.size() < rhs.c_.size()) c_.resize(rhs.c_.size(), Scalar::zero(field_));
  for (std::size_t k = 0; k < rhs.c_.size(); ++k) c_[k] += rhs.c_[k];
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& rhs) {
  if (!(field_ == rhs.field_)) throw Error(ErrorCode::FieldMismatch, "polynomial fields differ");
  if (c_.size() < rhs.c_.size()) c_.resize(rhs.c_.size(), Scalar::zero(field_));
  for (std::size_t k = 0; k < rhs.c_.size(); ++k) c_[k] -= rhs.c_[k];
  trim();
  return *this;
}

Poly& Poly::operator*=(const Scalar& c) {
  for (auto& x : c_) x *= c;
  trim();
  return *this;
}

Poly operator*(const Poly& lhs, const Poly& rhs) {
  if (!(lhs.field_ == rhs.field_)) throw Error(ErrorCode::FieldMismatch, "polynomial fields differ");
  if (lhs.is_zero() || rhs.is_zero()) return Poly(lhs.field_);
  std::vector<Scalar> out(lhs.c_.size() + rhs.c_.size() - 1, Scalar::zero(lhs.field_));
  for (std::size_t i = 0; i < lhs.c_.size(); ++i) {
    if (lhs.c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < rhs.c_.size(); ++j) out[i + j] += lhs.c_[i] * rhs.c_[j];
  }
  return Poly(lhs.field_, std::move(out));
}

std::pair<Poly, Poly> Poly::divmod(const Poly& divisor) const {
  if (!(field_ == divisor.field_)) throw Error(ErrorCode::FieldMismatch, "polynomial fields differ");
  if (divisor.is_zero()) throw Error(ErrorCode::DivisionByZero, "polynomial division by zero");
  std::vector<Scalar> rem = c_;
  const int dd = divisor.degree();
  if (degree() < dd) return {Poly(field_), *this};
  std::vector<Scalar> quot(static_cast<std::size_t>(degree() - dd + 1), Scalar::zero(field_));
  const Scalar lead_inv = divisor.leading().inverse();
  for (int k = degree() - dd; k >= 0; --k) {
    Scalar q = rem[static_cast<std::size_t>(k + dd)] * lead_inv;
    quot[static_cast<std::size_t>(k)] = q;
    if (q.is_zero()) continue;
    for (int j = 0; j <= dd; ++j) rem[static_cast<std::size_t>(k + j)] -= q * divisor.c_[static_cast<std::size_t>(j)];
  }
  return {Poly(field_, std::move(quot)), Poly(field_, std::move(rem))};
}

Poly Poly::derivative() const {
  if (c_.size() <= 1) return Poly(field_);
  std::vector<Scalar> out;
  for (std::size_t k = 1; k < c_.size(); ++k) out.push_back(c_[k] * Scalar(field_, static_cast<long>(k)));
  return Poly(field_, std::move(out));
}

std::vector<std::string> Poly::coeff_strings() const {
  std::vector<std::string> out;
  for (const auto& c : c_) out.push_back(c.to_string());
  return out;
}

std::string Poly::to_string() const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = c_.size(); k-- > 0;) {
    if (c_[k].is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    os << '(' << c_[k] << ')';
    if (k >= 1) os << "*x";
    if (k >= 2) os << '^' << k;
  }
  return os.str();
}

Poly gcd(Poly a, Poly b) {
  while (!b.is_zero()) {
    Poly r = a.divmod(b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

Poly char_poly(const Matrix& m) {
  const FieldSpec f = m.field();
  const std::size_t n = m.size();
  Matrix h = m;
  // Similarity transforms to upper Hessenberg form.
  for (std::size_t col = 0; col + 2 < n; ++col) {
    const std::size_t m1 = col + 1;
    std::size_t piv = m1;
    while (piv < n && h(piv, col).is_zero()) ++piv;
    if (piv == n) continue;
    if (piv != m1) {
      for (std::size_t j = 0; j < n; ++j) std::swap(h(piv, j), h(m1, j));
      for (std::size_t i = 0; i < n; ++i) std::swap(h(i, piv), h(i, m1));
    }
    const Scalar t_inv = h(m1, col).inverse();
    for (std::size_t i = m1 + 1; i < n; ++i) {
      if (h(i, col).is_zero()) continue;
      const Scalar u = h(i, col) * t_inv;
      for (std::size_t j = 0; j < n; ++j) h(i, j) -= u * h(m1, j);
      for (std::size_t r = 0; r < n; ++r) h(r, m1) += u * h(r, i);
    }
  }
  // Expansion along the Hessenberg structure.
  std::vector<Poly> p;
  p.push_back(Poly::constant(Scalar::one(f)));
  for (std::size_t k = 0; k < n; ++k) {
    Poly next = Poly::linear(h(k, k)) * p[k];
    Scalar t = Scalar::one(f);
    for (std::size_t i = 1; i <= k; ++i) {
      t *= h(k - i + 1, k - i);
      if (t.is_zero()) break;
      next -= p[k - i] * (t * h(k - i, k));
    }
    p.push_back(std::move(next));
  }
  return p.back();
}

namespace {

constexpr std::uint64_t kExhaustiveLimit = 1ULL << 16;

std::vector<Scalar> sorted_with_multiplicity(const Poly& p, const std::vector<Scalar>& distinct) {
  std::vector<Scalar> out;
  for (const auto& r : distinct) {
    Poly rest = p;
    const Poly lin = Poly::linear(r);
    while (true) {
      auto [q, rem] = rest.divmod(lin);
      if (!rem.is_zero()) break;
      out.push_back(r);
      rest = std::move(q);
    }
  }
  std::sort(out.begin(), out.end(), [](const Scalar& a, const Scalar& b) { return canonical_less(a, b); });
  return out;
}

Poly mulmod(const Poly& a, const Poly& b, const Poly& m) { return (a * b).divmod(m).second; }

Poly powmod(Poly base, mpz_class e, const Poly& m) {
  Poly result = Poly::constant(Scalar::one(m.field())).divmod(m).second;
  base = base.divmod(m).second;
  while (e > 0) {
    if (mpz_odd_p(e.get_mpz_t())) result = mulmod(result, base, m);
    base = mulmod(base, base, m);
    e >>= 1;
  }
  return result;
}

// Splits a squarefree product of distinct linear factors over GF(p), p odd.
void split_linear(const Poly& h, std::mt19937_64& rng, std::vector<Scalar>& roots) {
  const FieldSpec f = h.field();
  if (h.degree() <= 0) return;
  if (h.degree() == 1) {
    roots.push_back(-(h.coeff(0) / h.coeff(1)));
    return;
  }
  const std::uint64_t p = f.modulus();
  const mpz_class half = mpz_class(static_cast<unsigned long>(p - 1)) / 2;
  std::uniform_int_distribution<std::uint64_t> dist(0, p - 1);
  while (true) {
    Poly shifted = Poly::linear(Scalar(f, static_cast<long>(dist(rng))));
    Poly w = powmod(shifted, half, h) - Poly::constant(Scalar::one(f));
    Poly g = gcd(h, w);
    if (g.degree() > 0 && g.degree() < h.degree()) {
      split_linear(g, rng, roots);
      split_linear(h.divmod(g).first, rng, roots);
      return;
    }
  }
}

std::vector<Scalar> prime_roots_splitting(const Poly& p) {
  const FieldSpec f = p.field();
  const Poly x = Poly::lambda(f);
  Poly frob = powmod(x, mpz_class(static_cast<unsigned long>(f.modulus())), p) - x;
  Poly h = gcd(p, frob);
  std::vector<Scalar> distinct;
  std::mt19937_64 rng(0x5eed);
  split_linear(h, rng, distinct);
  return distinct;
}

// --- rational path --------------------------------------------------------

std::vector<mpz_class> primitive_integer_coeffs(const Poly& p) {
  mpz_class lcm_den = 1;
  for (const auto& c : p.coeffs()) lcm_den = lcm(lcm_den, mpz_class(c.rational().get_den()));
  std::vector<mpz_class> out;
  mpz_class g = 0;
  for (const auto& c : p.coeffs()) {
    mpq_class scaled = c.rational() * lcm_den;
    out.push_back(scaled.get_num());
    g = gcd(g, scaled.get_num());
  }
  for (auto& c : out) c /= g;
  return out;
}

mpz_class eval_mod(const std::vector<mpz_class>& c, const mpz_class& x, const mpz_class& m) {
  mpz_class acc = 0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    acc = (acc * x + *it) % m;
  }
  if (acc < 0) acc += m;
  return acc;
}

bool next_prime_candidate(std::uint64_t& ell) {
  for (++ell;; ++ell) {
    bool prime = ell >= 2;
    for (std::uint64_t d = 2; d * d <= ell && prime; ++d) prime = ell % d != 0;
    if (prime) return true;
  }
}

// Rational a/b with |a|, |b| <= bound and a ≡ b r (mod m), if one exists.
bool rational_reconstruct(const mpz_class& r, const mpz_class& m, const mpz_class& bound, mpq_class& out) {
  mpz_class r0 = m, r1 = r, t0 = 0, t1 = 1;
  while (r1 > bound) {
    mpz_class q = r0 / r1;
    mpz_class r2 = r0 - q * r1;
    mpz_class t2 = t0 - q * t1;
    r0 = r1;
    r1 = r2;
    t0 = t1;
    t1 = t2;
  }
  if (t1 == 0 || abs(t1) > bound) return false;
  out = mpq_class(r1, t1);
  out.canonicalize();
  return true;
}

std::vector<Scalar> rational_roots(const Poly& p) {
  const FieldSpec q = p.field();
  std::vector<Scalar> distinct;
  Poly f = p;
  if (f.coeff(0).is_zero()) {
    distinct.push_back(Scalar::zero(q));
    std::size_t k = 0;
    while (f.coeff(k).is_zero()) ++k;
    f = Poly(q, std::vector<Scalar>(f.coeffs().begin() + static_cast<long>(k), f.coeffs().end()));
  }
  if (f.degree() <= 0) return distinct;
  Poly g = f.divmod(gcd(f, f.derivative())).first;
  if (g.degree() == 1) {
    distinct.push_back(-(g.coeff(0) / g.coeff(1)));
    return distinct;
  }
  const std::vector<mpz_class> G = primitive_integer_coeffs(g);
  std::vector<mpz_class> dG;
  for (std::size_t k = 1; k < G.size(); ++k) dG.push_back(G[k] * static_cast<unsigned long>(k));

  // A good prime keeps the degree and the squarefreeness of G.
  std::uint64_t ell = 2;
  FieldSpec fl;
  Poly gl;
  while (true) {
    next_prime_candidate(ell);
    if (mpz_class(G.back() % static_cast<unsigned long>(ell)) == 0) continue;
    fl = FieldSpec::prime(ell);
    std::vector<Scalar> cs;
    for (const auto& c : G) cs.emplace_back(fl, mpq_class(c));
    gl = Poly(fl, std::move(cs));
    if (gcd(gl, gl.derivative()).degree() == 0) break;
  }

  const mpz_class a0 = abs(G.front()), an = abs(G.back());
  const mpz_class N = a0 > an ? a0 : an;
  const mpz_class target = 2 * N * N + 1;
  for (const auto& r0 : field_roots_exhaustive(gl)) {
    mpz_class m = static_cast<unsigned long>(ell);
    mpz_class r = static_cast<unsigned long>(r0.residue());
    while (m <= target) {
      mpz_class m2 = m * m;
      mpz_class deriv = eval_mod(dG, r, m2);
      mpz_class inv;
      mpz_invert(inv.get_mpz_t(), deriv.get_mpz_t(), m2.get_mpz_t());
      r = (r - eval_mod(G, r, m2) * inv) % m2;
      if (r < 0) r += m2;
      m = m2;
    }
    mpz_class bound;
    mpz_class half = m / 2;
    mpz_sqrt(bound.get_mpz_t(), half.get_mpz_t());
    mpq_class cand;
    if (!rational_reconstruct(r, m, bound, cand)) continue;
    Scalar s(q, cand);
    if (g(s).is_zero()) distinct.push_back(s);
  }
  return distinct;
}

}  // namespace

std::vector<Scalar> field_roots_exhaustive(const Poly& p) {
  if (p.is_zero()) throw Error(ErrorCode::EmptyPolynomial, "roots of the zero polynomial");
  const FieldSpec f = p.field();
  if (f.is_rational()) throw Error(ErrorCode::InvalidField, "exhaustive root search needs a prime field");
  std::vector<Scalar> distinct;
  for (std::uint64_t v = 0; v < f.modulus(); ++v) {
    Scalar x(f, static_cast<long>(v));
    if (p(x).is_zero()) distinct.push_back(x);
  }
  return sorted_with_multiplicity(p, distinct);
}

std::vector<Scalar> field_roots(const Poly& p) {
  if (p.is_zero()) throw Error(ErrorCode::EmptyPolynomial, "roots of the zero polynomial");
  const FieldSpec f = p.field();
  if (p.degree() == 0) return {};
  if (f.is_rational()) return sorted_with_multiplicity(p, rational_roots(p));
  if (f.modulus() <= kExhaustiveLimit) return field_roots_exhaustive(p);
  return sorted_with_multiplicity(p, prime_roots_splitting(p));
}

}  // namespace leonard
