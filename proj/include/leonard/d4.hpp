#pragma once

#include <array>
#include <string>

#include "leonard/params.hpp"

namespace leonard {

/// Element of the dihedral group generated by *, ↓, ⇓ acting on Leonard
/// systems. An element is identified with the system it produces from
/// Φ = (A; E_0..E_d; A*; E*_0..E*_d):
///   swap   - the system starts with (A*, E*) instead of (A, E),
///   rev1   - the first idempotent list is reversed,
///   rev2   - the second idempotent list is reversed.
/// Words are read left to right: Φ^{gh} = (Φ^g)^h.
class D4Element {
 public:
  constexpr D4Element() = default;
  constexpr D4Element(bool swap, bool rev1, bool rev2) : swap_(swap), rev1_(rev1), rev2_(rev2) {}

  static constexpr D4Element identity() { return {}; }
  static constexpr D4Element star() { return {true, false, false}; }
  static constexpr D4Element down() { return {false, false, true}; }
  static constexpr D4Element Down() { return {false, true, false}; }

  /// All eight elements in table order: 1, ↓, ⇓, ↓⇓, *, ↓*, ⇓*, ↓⇓*.
  static std::array<D4Element, 8> all();

  /// Parses a word over {"*", "down"/"↓", "Down"/"⇓"}, e.g. "down*", "↓⇓*",
  /// "1". Throws ParseError.
  static D4Element parse(const std::string& word);

  constexpr bool swap() const { return swap_; }
  constexpr bool rev1() const { return rev1_; }
  constexpr bool rev2() const { return rev2_; }

  /// The product "this, then h".
  D4Element then(const D4Element& h) const;
  D4Element inverse() const;
  /// Canonical name from the table ("1", "down", "Down", "down Down", "*",
  /// "down *", "Down *", "down Down *").
  std::string name() const;

  friend constexpr bool operator==(const D4Element&, const D4Element&) = default;

 private:
  bool swap_ = false;
  bool rev1_ = false;
  bool rev2_ = false;
};

/// Parameters of Φ^{g^{-1}} read from the eight-row relatives table.
ParameterData d4_transform(const ParameterData& p, const D4Element& g);

}  // namespace leonard
