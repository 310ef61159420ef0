// SPDX-License-Identifier: Apache-2.0
#include "mysticum/labels.hpp"

#include <algorithm>
#include <charconv>

namespace mysticum {

SymbolPair SymbolPair::make(int a, int b) {
  if (a == b || a < 0 || b < 0 || a > 5 || b > 5) {
    throw LabelError("a pair needs two distinct symbols in 0..5");
  }
  if (b < a) std::swap(a, b);
  return {static_cast<Symbol>(a), static_cast<Symbol>(b)};
}

template <typename Tag>
SymbolTriple<Tag> SymbolTriple<Tag>::make(int a, int b, int c) {
  std::array<int, 3> v{a, b, c};
  std::sort(v.begin(), v.end());
  if (v[0] < 0 || v[2] > 5 || v[0] == v[1] || v[1] == v[2]) {
    throw LabelError("a triple needs three distinct symbols in 0..5");
  }
  return {{static_cast<Symbol>(v[0]), static_cast<Symbol>(v[1]),
           static_cast<Symbol>(v[2])}};
}

template struct SymbolTriple<SteinerTag>;
template struct SymbolTriple<CayleyTag>;

OrderedPairs OrderedPairs::make(SymbolPair upper, SymbolPair lower) {
  if (!upper.disjoint(lower)) throw LabelError("xy.zw needs disjoint pairs");
  return {upper, lower};
}

SymbolPair OrderedPairs::rest() const {
  const auto r = complement({upper.lo, upper.hi, lower.lo, lower.hi});
  return {r[0], r[1]};
}

std::vector<Symbol> complement(std::initializer_list<int> used) {
  std::vector<Symbol> out;
  for (int s = 0; s < 6; ++s) {
    if (std::find(used.begin(), used.end(), s) == used.end()) {
      out.push_back(static_cast<Symbol>(s));
    }
  }
  return out;
}

std::array<Symbol, 3> complement_triple(Symbol x, const SymbolPair& pair) {
  const auto r = complement({x, pair.lo, pair.hi});
  return {r[0], r[1], r[2]};
}

// --- text --------------------------------------------------------------------

namespace {

char digit(int s) { return static_cast<char>('0' + s); }

std::string pointed(char kind, Symbol x, const SymbolPair& p) {
  return std::string{kind, ' ', digit(x), ';', digit(p.lo), digit(p.hi)};
}

int parse_digit(char c) {
  if (c < '0' || c > '5') {
    throw LabelError(std::string("bad number symbol '") + c + "'");
  }
  return c - '0';
}

std::string_view strip_prefix(std::string_view text, std::string_view prefix) {
  if (text.substr(0, prefix.size()) != prefix) {
    throw LabelError("expected '" + std::string(prefix) + "' in '" +
                     std::string(text) + "'");
  }
  return text.substr(prefix.size());
}

SymbolPair parse_pair(std::string_view s) {
  if (s.size() != 2) throw LabelError("bad pair '" + std::string(s) + "'");
  return SymbolPair::make(parse_digit(s[0]), parse_digit(s[1]));
}

template <typename Label>
Label parse_pointed(std::string_view text, std::string_view prefix) {
  const auto body = strip_prefix(text, prefix);
  if (body.size() != 4 || body[1] != ';') {
    throw LabelError("bad label '" + std::string(text) + "'");
  }
  return Label::make(parse_digit(body[0]), parse_digit(body[2]),
                     parse_digit(body[3]));
}

template <typename Label>
Label parse_triple(std::string_view text, std::string_view prefix) {
  const auto body = strip_prefix(text, prefix);
  if (body.size() != 3) {
    throw LabelError("bad label '" + std::string(text) + "'");
  }
  return Label::make(parse_digit(body[0]), parse_digit(body[1]),
                     parse_digit(body[2]));
}

template <typename Label>
Label parse_duo(std::string_view text, std::string_view prefix) {
  return {parse_pair(strip_prefix(text, prefix))};
}

OrderedPairs parse_dotted(std::string_view body) {
  if (body.size() != 5 || body[2] != '.') {
    throw LabelError("bad label 'xy.zw': '" + std::string(body) + "'");
  }
  return OrderedPairs::make(parse_pair(body.substr(0, 2)),
                            parse_pair(body.substr(3, 2)));
}

template <typename Label>
Label parse_pair_of_pairs(std::string_view text, std::string_view prefix) {
  const auto o = parse_dotted(strip_prefix(text, prefix));
  return Label::make(o.upper, o.lower);
}

int parse_height(std::string_view s) {
  int h = -1;
  const auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), h);
  if (ec != std::errc() || end != s.data() + s.size() || h < 0) {
    throw LabelError("bad height '" + std::string(s) + "'");
  }
  return h;
}

}  // namespace

std::string to_string(const SymbolPair& p) {
  return {digit(p.lo), digit(p.hi)};
}
std::string to_string(const PascalLabel& l) { return pointed('P', l.x, l.pair); }
std::string to_string(const KirkmanLabel& l) {
  return pointed('K', l.x, l.pair);
}
std::string to_string(const SteinerLabel& l) {
  return {'N', ' ', digit(l.s[0]), digit(l.s[1]), digit(l.s[2])};
}
std::string to_string(const CayleyLabel& l) {
  return {'L', ' ', digit(l.s[0]), digit(l.s[1]), digit(l.s[2])};
}
std::string to_string(const PluckerLabel& l) { return "L " + to_string(l.pair); }
std::string to_string(const SalmonLabel& l) { return "N " + to_string(l.pair); }
std::string to_string(const OrdinaryLabel& l) {
  return to_string(l.first) + "." + to_string(l.second);
}
std::string to_string(const LaddLabel& l) {
  return "L " + to_string(l.first) + "." + to_string(l.second);
}
std::string to_string(const VeroneseNodeLabel& l) {
  return "N " + to_string(l.first) + "." + to_string(l.second);
}
std::string to_string(const OrderedPairs& l) {
  return to_string(l.upper) + "." + to_string(l.lower);
}
std::string to_string(const InterLabel& l) {
  return to_string(l.pairs.upper) + "(" + std::to_string(l.lower_height + 1) +
         ")." + to_string(l.pairs.lower) + "(" +
         std::to_string(l.lower_height) + ")";
}

template <>
PascalLabel parse_label(std::string_view t) {
  return parse_pointed<PascalLabel>(t, "P ");
}
template <>
KirkmanLabel parse_label(std::string_view t) {
  return parse_pointed<KirkmanLabel>(t, "K ");
}
template <>
SteinerLabel parse_label(std::string_view t) {
  return parse_triple<SteinerLabel>(t, "N ");
}
template <>
CayleyLabel parse_label(std::string_view t) {
  return parse_triple<CayleyLabel>(t, "L ");
}
template <>
PluckerLabel parse_label(std::string_view t) {
  return parse_duo<PluckerLabel>(t, "L ");
}
template <>
SalmonLabel parse_label(std::string_view t) {
  return parse_duo<SalmonLabel>(t, "N ");
}
template <>
OrdinaryLabel parse_label(std::string_view t) {
  return parse_pair_of_pairs<OrdinaryLabel>(t, "");
}
template <>
LaddLabel parse_label(std::string_view t) {
  return parse_pair_of_pairs<LaddLabel>(t, "L ");
}
template <>
VeroneseNodeLabel parse_label(std::string_view t) {
  return parse_pair_of_pairs<VeroneseNodeLabel>(t, "N ");
}
template <>
OrderedPairs parse_label(std::string_view t) {
  return parse_dotted(t);
}
template <>
InterLabel parse_label(std::string_view t) {
  // xy(h+1).zw(h)
  const auto dot = t.find(").");
  if (t.size() < 10 || dot == std::string_view::npos || t[2] != '(' ||
      t.back() != ')' || t[dot + 4] != '(') {
    throw LabelError("bad inter-layer label '" + std::string(t) + "'");
  }
  const int upper_h = parse_height(t.substr(3, dot - 3));
  const int lower_h = parse_height(t.substr(dot + 5, t.size() - dot - 6));
  if (upper_h != lower_h + 1) {
    throw LabelError("inter-layer heights must differ by one: '" +
                     std::string(t) + "'");
  }
  return {OrderedPairs::make(parse_pair(t.substr(0, 2)),
                             parse_pair(t.substr(dot + 2, 2))),
          lower_h};
}

// --- enumeration -------------------------------------------------------------

namespace {

std::vector<SymbolPair> all_pairs() {
  std::vector<SymbolPair> out;
  for (int a = 0; a < 6; ++a) {
    for (int b = a + 1; b < 6; ++b) out.push_back(SymbolPair::make(a, b));
  }
  return out;
}

template <typename Label>
std::vector<Label> pointed_labels() {
  std::vector<Label> out;
  for (int x = 0; x < 6; ++x) {
    for (const auto& p : all_pairs()) {
      if (!p.contains(x)) out.push_back({static_cast<Symbol>(x), p});
    }
  }
  return out;
}

template <typename Label>
std::vector<Label> triple_labels() {
  std::vector<Label> out;
  for (int a = 0; a < 6; ++a) {
    for (int b = a + 1; b < 6; ++b) {
      for (int c = b + 1; c < 6; ++c) out.push_back(Label::make(a, b, c));
    }
  }
  return out;
}

template <typename Label>
std::vector<Label> duo_labels() {
  std::vector<Label> out;
  for (const auto& p : all_pairs()) out.push_back({p});
  return out;
}

template <typename Label>
std::vector<Label> pair_of_pairs_labels() {
  std::vector<Label> out;
  for (const auto& a : all_pairs()) {
    for (const auto& b : all_pairs()) {
      if (a < b && a.disjoint(b)) out.push_back({a, b});
    }
  }
  return out;
}

}  // namespace

#define MYSTICUM_ENUMERATE(Label, generator)       \
  template <>                                      \
  const std::vector<Label>& enumerate<Label>() {   \
    static const std::vector<Label> all = generator<Label>(); \
    return all;                                    \
  }

MYSTICUM_ENUMERATE(PascalLabel, pointed_labels)
MYSTICUM_ENUMERATE(KirkmanLabel, pointed_labels)
MYSTICUM_ENUMERATE(SteinerLabel, triple_labels)
MYSTICUM_ENUMERATE(CayleyLabel, triple_labels)
MYSTICUM_ENUMERATE(PluckerLabel, duo_labels)
MYSTICUM_ENUMERATE(SalmonLabel, duo_labels)
MYSTICUM_ENUMERATE(OrdinaryLabel, pair_of_pairs_labels)
MYSTICUM_ENUMERATE(LaddLabel, pair_of_pairs_labels)
MYSTICUM_ENUMERATE(VeroneseNodeLabel, pair_of_pairs_labels)

#undef MYSTICUM_ENUMERATE

template <>
const std::vector<OrderedPairs>& enumerate<OrderedPairs>() {
  static const std::vector<OrderedPairs> all = [] {
    std::vector<OrderedPairs> out;
    for (const auto& a : all_pairs()) {
      for (const auto& b : all_pairs()) {
        if (a.disjoint(b)) out.push_back({a, b});
      }
    }
    return out;
  }();
  return all;
}

const std::vector<OrderedPairs>& enumerate_ordered_pairs() {
  return enumerate<OrderedPairs>();
}

// --- hexagons ----------------------------------------------------------------

Hexagon parse_hexagon(std::string_view word) {
  if (word.size() != 6) throw LabelError("a hexagon has six letters");
  Hexagon h{};
  std::array<bool, 6> seen{};
  for (int k = 0; k < 6; ++k) {
    const int s = word[k] - 'a';
    if (s < 0 || s > 5) {
      throw LabelError(std::string("bad letter '") + word[k] + "'");
    }
    if (seen[s]) {
      throw LabelError("RepeatedLetter: '" + std::string(word) + "'");
    }
    seen[s] = true;
    h[k] = static_cast<Symbol>(s);
  }
  return h;
}

std::string to_string(const Hexagon& h) {
  std::string s;
  for (Symbol v : h) s += static_cast<char>('a' + v);
  return s;
}

LetterPerm hexagon_cycle(const Hexagon& h) {
  std::array<bool, 6> seen{};
  std::array<Symbol, 6> images{};
  for (int k = 0; k < 6; ++k) {
    if (h[k] > 5 || seen[h[k]]) {
      throw LabelError("RepeatedLetter: '" + to_string(h) + "'");
    }
    seen[h[k]] = true;
    images[h[k]] = h[(k + 1) % 6];
  }
  return LetterPerm(images);
}

PascalLabel pascal_label_of_hexagon(const Hexagon& h) {
  const NumberPerm image = zeta(hexagon_cycle(h));
  int fixed = -1;
  SymbolPair swapped;
  for (const auto& c : image.cycles()) {
    if (c.size() == 1) fixed = c[0];
    if (c.size() == 2) swapped = SymbolPair::make(c[0], c[1]);
  }
  if (image.cycle_type() != std::vector<int>{3, 2, 1}) {
    throw std::logic_error("zeta of a six-cycle must have type 1+2+3");
  }
  return {static_cast<Symbol>(fixed), swapped};
}

Hexagon hexagon_of_pascal_label(const PascalLabel& label) {
  const auto r = complement({label.x, label.pair.lo, label.pair.hi});
  std::array<Symbol, 6> images{0, 1, 2, 3, 4, 5};
  images[label.pair.lo] = label.pair.hi;
  images[label.pair.hi] = label.pair.lo;
  images[r[0]] = r[1];
  images[r[1]] = r[2];
  images[r[2]] = r[0];
  const LetterPerm cycle = zeta_inv(NumberPerm(images));
  Hexagon h{};
  Symbol v = 0;
  for (int k = 0; k < 6; ++k) {
    h[k] = v;
    v = static_cast<Symbol>(cycle(v));
  }
  return h;
}

bool same_hexagon(const Hexagon& a, const Hexagon& b) {
  const LetterPerm c = hexagon_cycle(a);
  const LetterPerm d = hexagon_cycle(b);
  return c == d || c == d.inverse();
}

std::array<std::pair<Symbol, Symbol>, 2> chords_of(const OrdinaryLabel& l) {
  const NumberPerm double_swap =
      NumberPerm::transposition(l.first.lo, l.first.hi) *
      NumberPerm::transposition(l.second.lo, l.second.hi);
  std::array<std::pair<Symbol, Symbol>, 2> chords{};
  int k = 0;
  for (const auto& c : zeta_inv(double_swap).cycles()) {
    if (c.size() == 2) chords[k++] = {c[0], c[1]};
  }
  if (k != 2) throw std::logic_error("zeta must preserve type 2+2");
  return chords;
}

}  // namespace mysticum
