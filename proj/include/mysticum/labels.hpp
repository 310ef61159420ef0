// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <compare>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "mysticum/errors.hpp"
#include "mysticum/perm6.hpp"

namespace mysticum {

/// Unordered pair of distinct number symbols, stored with lo < hi.
struct SymbolPair {
  Symbol lo = 0;
  Symbol hi = 1;

  static SymbolPair make(int a, int b);
  bool contains(int s) const { return lo == s || hi == s; }
  bool disjoint(const SymbolPair& o) const {
    return !contains(o.lo) && !contains(o.hi);
  }
  auto operator<=>(const SymbolPair&) const = default;
};

/// Shape x;yz with x outside the unordered pair {y, z}. Used by Pascal
/// lines and Kirkman nodes.
template <typename Tag>
struct PointedPair {
  Symbol x = 0;
  SymbolPair pair;

  static PointedPair make(int x, int y, int z) {
    PointedPair l{static_cast<Symbol>(x), SymbolPair::make(y, z)};
    if (x < 0 || x > 5 || l.pair.contains(x)) {
      throw LabelError("x;yz needs three distinct symbols");
    }
    return l;
  }
  auto operator<=>(const PointedPair&) const = default;
};

/// Unordered triple, sorted. Steiner nodes and Cayley lines.
template <typename Tag>
struct SymbolTriple {
  std::array<Symbol, 3> s{0, 1, 2};

  static SymbolTriple make(int a, int b, int c);
  auto operator<=>(const SymbolTriple&) const = default;
};

/// Unordered pair. Plücker lines and Salmon nodes.
template <typename Tag>
struct SymbolDuo {
  SymbolPair pair;

  static SymbolDuo make(int a, int b) { return {SymbolPair::make(a, b)}; }
  auto operator<=>(const SymbolDuo&) const = default;
};

/// Two disjoint pairs with xy.zw = zw.xy. Ordinary meeting points, Ladd
/// lines, Veronese nodes. Stored with first < second.
template <typename Tag>
struct PairOfPairs {
  SymbolPair first;
  SymbolPair second{2, 3};

  static PairOfPairs make(SymbolPair a, SymbolPair b) {
    if (!a.disjoint(b)) throw LabelError("xy.zw needs disjoint pairs");
    if (b < a) std::swap(a, b);
    return {a, b};
  }
  auto operator<=>(const PairOfPairs&) const = default;
};

/// Ordered xy.zw: `upper` carries the higher height in linking lines and
/// meeting points, (xy)^(i+1).(zw)^(i). Also names the meeting and linking
/// ranges and the Plücker-Ladd nodes / Salmon-Veronese lines.
struct OrderedPairs {
  SymbolPair upper;
  SymbolPair lower{2, 3};

  static OrderedPairs make(SymbolPair upper, SymbolPair lower);
  OrderedPairs swapped() const { return {lower, upper}; }
  /// The two symbols outside upper and lower.
  SymbolPair rest() const;
  auto operator<=>(const OrderedPairs&) const = default;
};

struct PascalTag {};
struct KirkmanTag {};
struct SteinerTag {};
struct CayleyTag {};
struct PluckerTag {};
struct SalmonTag {};
struct OrdinaryTag {};
struct LaddTag {};
struct VeroneseTag {};

using PascalLabel = PointedPair<PascalTag>;
using KirkmanLabel = PointedPair<KirkmanTag>;
using SteinerLabel = SymbolTriple<SteinerTag>;
using CayleyLabel = SymbolTriple<CayleyTag>;
using PluckerLabel = SymbolDuo<PluckerTag>;
using SalmonLabel = SymbolDuo<SalmonTag>;
using OrdinaryLabel = PairOfPairs<OrdinaryTag>;
using LaddLabel = PairOfPairs<LaddTag>;
using VeroneseNodeLabel = PairOfPairs<VeroneseTag>;

/// A linking line (lower height even) or higher meeting point (odd).
struct InterLabel {
  OrderedPairs pairs;
  int lower_height = 0;
  auto operator<=>(const InterLabel&) const = default;
};

// Label text, bit-exact:
//   "P 2;04"  "K 2;04"  "N 024"  "L 024"  "L 24"  "N 24"
//   "12.35"  "L 12.34"  "N 12.34"  "12(1).34(0)"
// plus "PLN 12.34" / "SVL 12.34" for Plücker-Ladd nodes and
// Salmon-Veronese lines.
std::string to_string(const SymbolPair& p);
std::string to_string(const PascalLabel& l);
std::string to_string(const KirkmanLabel& l);
std::string to_string(const SteinerLabel& l);
std::string to_string(const CayleyLabel& l);
std::string to_string(const PluckerLabel& l);
std::string to_string(const SalmonLabel& l);
std::string to_string(const OrdinaryLabel& l);
std::string to_string(const LaddLabel& l);
std::string to_string(const VeroneseNodeLabel& l);
std::string to_string(const OrderedPairs& l);  // "12.34"
std::string to_string(const InterLabel& l);

/// Inverse of to_string for the given family. Throws LabelError.
template <typename Label>
Label parse_label(std::string_view text);

/// All labels of a family, duplicate-free, in ascending order.
template <typename Label>
const std::vector<Label>& enumerate();

const std::vector<OrderedPairs>& enumerate_ordered_pairs();

/// Number symbols not in `used`, ascending.
std::vector<Symbol> complement(std::initializer_list<int> used);

// Conversions between families that share a shape.
inline KirkmanLabel kirkman(const PascalLabel& l) { return {l.x, l.pair}; }
inline PascalLabel pascal(const KirkmanLabel& l) { return {l.x, l.pair}; }
template <typename To, typename Tag>
To relabel(const PairOfPairs<Tag>& l) {
  return {l.first, l.second};
}
template <typename To, typename Tag>
To relabel(const SymbolTriple<Tag>& l) {
  return {l.s};
}
template <typename To, typename Tag>
To relabel(const SymbolDuo<Tag>& l) {
  return {l.pair};
}
template <typename To>
To unordered(const OrderedPairs& l) {
  return To::make(l.upper, l.lower);
}

/// Complementary triple of x;yz: the Cayley line carrying a Kirkman node,
/// or the Steiner node on a Pascal line.
std::array<Symbol, 3> complement_triple(Symbol x, const SymbolPair& pair);

// --- hexagons ----------------------------------------------------------------

/// Cyclic word of six distinct letters (0..5 = a..f), one inscribed hexagon.
using Hexagon = std::array<Symbol, 6>;

/// Parses "acebfd". Throws LabelError (repeated or unknown letter).
Hexagon parse_hexagon(std::string_view word);
std::string to_string(const Hexagon& h);

/// The six-cycle a hexagon's boundary traces.
LetterPerm hexagon_cycle(const Hexagon& h);

/// Dual name of the Pascal line of a hexagon: zeta of its six-cycle has one
/// fixed point x and one 2-cycle (y z). Throws LabelError on repeated
/// letters.
PascalLabel pascal_label_of_hexagon(const Hexagon& h);

/// A hexagon whose Pascal line carries `label`, starting at letter a.
Hexagon hexagon_of_pascal_label(const PascalLabel& label);

/// Whether two words are the same hexagon up to rotation and reversal.
bool same_hexagon(const Hexagon& a, const Hexagon& b);

/// The two letter chords whose intersection is the ordinary meeting point:
/// zeta_inv of the double transposition (xy)(zw).
std::array<std::pair<Symbol, Symbol>, 2> chords_of(const OrdinaryLabel& l);

}  // namespace mysticum
