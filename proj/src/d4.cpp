#include "leonard/d4.hpp"

namespace leonard {

std::array<D4Element, 8> D4Element::all() {
  const D4Element dn = down();
  const D4Element Dn = Down();
  const D4Element st = star();
  return {identity(), dn, Dn, dn.then(Dn), st, dn.then(st), Dn.then(st), dn.then(Dn).then(st)};
}

D4Element D4Element::parse(const std::string& word) {
  D4Element g;
  std::size_t k = 0;
  auto starts = [&](const char* tok) { return word.compare(k, std::char_traits<char>::length(tok), tok) == 0; };
  while (k < word.size()) {
    if (word[k] == ' ' || word[k] == '1') {
      ++k;
    } else if (word[k] == '*') {
      g = g.then(star());
      ++k;
    } else if (starts("down")) {
      g = g.then(down());
      k += 4;
    } else if (starts("Down")) {
      g = g.then(Down());
      k += 4;
    } else if (starts("↓")) {
      g = g.then(down());
      k += 3;
    } else if (starts("⇓")) {
      g = g.then(Down());
      k += 3;
    } else {
      throw Error(ErrorCode::ParseError, "unknown D4 word '" + word + "'");
    }
  }
  return g;
}

D4Element D4Element::then(const D4Element& h) const {
  // Apply h's canonical word *^s ⇓^r1 ↓^r2 to this state.
  D4Element out = *this;
  if (h.swap_) out = D4Element(!out.swap_, out.rev2_, out.rev1_);
  out.rev1_ = out.rev1_ != h.rev1_;
  out.rev2_ = out.rev2_ != h.rev2_;
  return out;
}

D4Element D4Element::inverse() const {
  for (const auto& k : all()) {
    if (then(k) == identity()) return k;
  }
  throw Error(ErrorCode::InvalidParameters, "D4 element without inverse");
}

std::string D4Element::name() const {
  static const char* names[8] = {"1", "down", "Down", "down Down", "*", "down *", "Down *", "down Down *"};
  const auto elems = all();
  for (std::size_t k = 0; k < elems.size(); ++k) {
    if (elems[k] == *this) return names[k];
  }
  return "?";
}

ParameterData d4_transform(const ParameterData& p, const D4Element& g) {
  p.check_sizes();
  const int d = p.d;
  auto rev = [](const std::vector<Scalar>& v) { return std::vector<Scalar>(v.rbegin(), v.rend()); };
  // For the split sequences, "index d-i+1" is exactly the reversed array.
  const auto& th = p.theta;
  const auto& ts = p.theta_star;
  const auto& vp = p.varphi;
  const auto& ph = p.phi;
  ParameterData out;
  out.field = p.field;
  out.d = d;
  const auto elems = D4Element::all();
  std::size_t row = 0;
  while (!(elems[row] == g)) ++row;
  switch (row) {
    case 0: out.theta = th; out.theta_star = ts; out.varphi = vp; out.phi = ph; break;
    case 1: out.theta = th; out.theta_star = rev(ts); out.varphi = rev(ph); out.phi = rev(vp); break;
    case 2: out.theta = rev(th); out.theta_star = ts; out.varphi = ph; out.phi = vp; break;
    case 3: out.theta = rev(th); out.theta_star = rev(ts); out.varphi = rev(vp); out.phi = rev(ph); break;
    case 4: out.theta = ts; out.theta_star = th; out.varphi = vp; out.phi = rev(ph); break;
    case 5: out.theta = ts; out.theta_star = rev(th); out.varphi = ph; out.phi = rev(vp); break;
    case 6: out.theta = rev(ts); out.theta_star = th; out.varphi = rev(ph); out.phi = vp; break;
    default: out.theta = rev(ts); out.theta_star = rev(th); out.varphi = rev(vp); out.phi = ph; break;
  }
  return out;
}

}  // namespace leonard
