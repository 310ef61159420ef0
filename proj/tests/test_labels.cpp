// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <map>
#include <set>

#include "mysticum/labels.hpp"

using namespace mysticum;

namespace {

template <typename Label>
void check_family(std::size_t count) {
  const auto& all = enumerate<Label>();
  CHECK(all.size() == count);
  std::set<std::string> texts;
  for (const auto& l : all) {
    const std::string text = to_string(l);
    texts.insert(text);
    CHECK(parse_label<Label>(text) == l);
  }
  CHECK(texts.size() == count);
}

}  // namespace

TEST_CASE("label text") {
  CHECK(to_string(PascalLabel::make(2, 0, 4)) == "P 2;04");
  CHECK(to_string(PascalLabel::make(2, 4, 0)) == "P 2;04");
  CHECK(to_string(KirkmanLabel::make(3, 5, 0)) == "K 3;05");
  CHECK(to_string(SteinerLabel::make(4, 0, 2)) == "N 024");
  CHECK(to_string(CayleyLabel::make(1, 3, 5)) == "L 135");
  CHECK(to_string(PluckerLabel::make(4, 2)) == "L 24");
  CHECK(to_string(SalmonLabel::make(0, 5)) == "N 05");
  const auto a = SymbolPair::make(1, 2), b = SymbolPair::make(3, 5);
  CHECK(to_string(OrdinaryLabel::make(a, b)) == "12.35");
  CHECK(to_string(OrdinaryLabel::make(b, a)) == "12.35");
  CHECK(OrdinaryLabel::make(a, b) == OrdinaryLabel::make(b, a));
  CHECK(to_string(LaddLabel::make(a, b)) == "L 12.35");
  CHECK(to_string(VeroneseNodeLabel::make(a, b)) == "N 12.35");
  const InterLabel il{OrderedPairs::make(a, b), 0};
  CHECK(to_string(il) == "12(1).35(0)");
  CHECK(parse_label<InterLabel>("35(4).12(3)") ==
        InterLabel{OrderedPairs::make(b, a), 3});
  CHECK_FALSE(OrderedPairs::make(a, b) == OrderedPairs::make(b, a));
  CHECK(OrderedPairs::make(a, b).rest() == SymbolPair::make(0, 4));
}

TEST_CASE("label parse errors") {
  CHECK_THROWS_AS(parse_label<PascalLabel>("P 2;02"), LabelError);
  CHECK_THROWS_AS(parse_label<PascalLabel>("K 2;04"), LabelError);
  CHECK_THROWS_AS(parse_label<SteinerLabel>("N 026"), LabelError);
  CHECK_THROWS_AS(parse_label<OrdinaryLabel>("12.23"), LabelError);
  CHECK_THROWS_AS(parse_label<InterLabel>("12(2).34(0)"), LabelError);
  CHECK_THROWS_AS(PascalLabel::make(1, 1, 2), LabelError);
}

TEST_CASE("family sizes") {
  check_family<PascalLabel>(60);
  check_family<KirkmanLabel>(60);
  check_family<SteinerLabel>(20);
  check_family<CayleyLabel>(20);
  check_family<PluckerLabel>(15);
  check_family<SalmonLabel>(15);
  check_family<OrdinaryLabel>(45);
  check_family<LaddLabel>(45);
  check_family<VeroneseNodeLabel>(45);
  const auto& ordered = enumerate_ordered_pairs();
  CHECK(ordered.size() == 90);
  CHECK(std::set<OrderedPairs>(ordered.begin(), ordered.end()).size() == 90);
}

TEST_CASE("hexagons and Pascal labels") {
  CHECK(pascal_label_of_hexagon(parse_hexagon("acebfd")) == PascalLabel::make(2, 0, 4));
  const PascalLabel abcdef = pascal_label_of_hexagon(parse_hexagon("abcdef"));
  CHECK(pascal_label_of_hexagon(parse_hexagon("bcdefa")) == abcdef);
  CHECK(pascal_label_of_hexagon(parse_hexagon("fedcba")) == abcdef);

  CHECK(same_hexagon(hexagon_of_pascal_label(PascalLabel::make(3, 1, 5)),
                     parse_hexagon("adfceb")));
  CHECK(same_hexagon(hexagon_of_pascal_label(PascalLabel::make(2, 0, 4)),
                     parse_hexagon("acebfd")));
  CHECK(same_hexagon(parse_hexagon("abcdef"), parse_hexagon("afedcb")));
  CHECK_FALSE(same_hexagon(parse_hexagon("abcdef"), parse_hexagon("abcdfe")));

  std::set<PascalLabel> images;
  for (const auto& l : enumerate<PascalLabel>()) {
    const Hexagon h = hexagon_of_pascal_label(l);
    CHECK(h[0] == 0);
    CHECK(pascal_label_of_hexagon(h) == l);
    images.insert(pascal_label_of_hexagon(h));
  }
  CHECK(images.size() == 60);

  CHECK_THROWS_AS(parse_hexagon("abcdea"), LabelError);
  CHECK_THROWS_AS(parse_hexagon("abcdeg"), LabelError);
}

TEST_CASE("chords of ordinary points") {
  // 23.04 comes from ac and bf.
  const auto chords =
      chords_of(OrdinaryLabel::make(SymbolPair::make(2, 3), SymbolPair::make(0, 4)));
  std::set<std::pair<Symbol, Symbol>> got;
  for (auto [u, v] : chords) got.insert(std::minmax(u, v));
  CHECK(got == std::set<std::pair<Symbol, Symbol>>{{0, 2}, {1, 5}});
  // A chord meets the six chords on the other four letters.
  std::map<std::pair<Symbol, Symbol>, int> uses;
  for (const auto& o : enumerate<OrdinaryLabel>()) {
    for (auto [u, v] : chords_of(o)) ++uses[std::minmax(u, v)];
  }
  CHECK(uses.size() == 15);
  for (const auto& [c, n] : uses) CHECK(n == 6);
}
