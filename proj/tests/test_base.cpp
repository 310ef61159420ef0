// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <set>

#include "support.hpp"

using namespace mysticum;
using namespace mysticum::testing;

namespace {

std::array<Extended, 6> ints(std::array<long, 6> t) {
  std::array<Extended, 6> out;
  for (int i = 0; i < 6; ++i) out[i] = Extended(q(t[i]));
  return out;
}

const BaseMysticum& base() { return fixture().base(); }

}  // namespace

TEST_CASE("sextuple") {
  CHECK_THROWS_AS(Sextuple(ints({0, 0, 1, 2, 3, 4})), DegenerateSextuple);
  auto params = ints({0, 1, 2, 3, 4, 5});
  params[5] = Extended::infinity();
  const Sextuple s(params);
  CHECK(s.point(5) == pt(1, 0, 0));
  CHECK(s.point(3) == pt(9, 3, 1));
}

TEST_CASE("Pascal line of a hexagon") {
  auto params = ints({0, 1, 2, 3, 4, 0});
  params[5] = Extended::infinity();
  const Sextuple s(params);
  // By hand: ab^de = (2:2:1), bc^ef = (10:4:1), cd^fa = (6:0:-1).
  const Line expected = ln(1, -4, 6);
  CHECK(build_pascal(s, parse_hexagon("abcdef")) == expected);
  CHECK(build_pascal(s, parse_hexagon("bcdefa")) == expected);
  CHECK(build_pascal(s, parse_hexagon("fedcba")) == expected);
  for (const Point& p : {pt(2, 2, 1), pt(10, 4, 1), pt(6, 0, -1)}) {
    CHECK(incident(p, expected));
  }
}

TEST_CASE("default fixture") {
  const auto params = default_fixture_params();
  CHECK(params == ints({0, 1, 2, 3, 5, 14}));
  const GeneralPositionReport first = validate_general_position(Sextuple(ints({0, 1, 2, 3, 4, 5})));
  CHECK_FALSE(first.ok);
  CHECK_FALSE(first.failing_step.empty());
  const GeneralPositionReport r = validate_general_position(base());
  CHECK(r.ok);
  CHECK(r.incidences_found == r.incidences_expected);
}

TEST_CASE("random sextuples are almost always in general position") {
  int passed = 0;
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const auto params = random_params(seed);
    CHECK(random_params(seed) == params);
    for (int i = 0; i < 6; ++i) {
      CHECK(abs(boost::multiprecision::numerator(params[i].value())) <= 20);
      CHECK(boost::multiprecision::denominator(params[i].value()) <= 20);
    }
    passed += validate_general_position(Sextuple(params)).ok;
  }
  CHECK(passed >= 18);
}

TEST_CASE("counts and distinctness") {
  const BaseMysticum& b = base();
  CHECK(b.pascals.size() == 60);
  CHECK(b.kirkmans.size() == 60);
  CHECK(b.steiner.size() == 20);
  CHECK(b.cayley.size() == 20);
  CHECK(b.plucker.size() == 15);
  CHECK(b.salmon.size() == 15);
  CHECK(b.ordinary.size() == 45);
  std::set<Line> pascals;
  for (const auto& [l, p] : b.pascals) pascals.insert(p);
  CHECK(pascals.size() == 60);
}

TEST_CASE("Pascal's theorem for every hexagon") {
  const BaseMysticum& b = base();
  const Sextuple& s = b.sextuple;
  for (const auto& l : enumerate<PascalLabel>()) {
    const Hexagon h = hexagon_of_pascal_label(l);
    auto side = [&](int i, int j) { return join(s.point(h[i]), s.point(h[j])); };
    const Point p1 = meet(side(0, 1), side(3, 4));
    const Point p2 = meet(side(1, 2), side(4, 5));
    const Point p3 = meet(side(2, 3), side(5, 0));
    CHECK(dependent_triple(p1, p2, p3));
    CHECK(incident(p1, b.pascals.at(l)));
    CHECK(incident(p3, b.pascals.at(l)));
  }
}

TEST_CASE("named incidences") {
  const BaseMysticum& b = base();
  CHECK(incident(b.steiner.at(SteinerLabel::make(0, 2, 4)), b.cayley.at(CayleyLabel::make(1, 3, 5))));
  const Line p123 = b.pascals.at(PascalLabel::make(1, 2, 3));
  for (auto k : {KirkmanLabel::make(1, 0, 4), KirkmanLabel::make(1, 0, 5),
                 KirkmanLabel::make(1, 4, 5)}) {
    CHECK(incident(b.kirkmans.at(k), p123));
  }
  const auto o = OrdinaryLabel::make(SymbolPair::make(1, 2), SymbolPair::make(3, 5));
  for (auto p : {PascalLabel::make(1, 3, 5), PascalLabel::make(2, 3, 5),
                 PascalLabel::make(3, 1, 2), PascalLabel::make(5, 1, 2)}) {
    CHECK(incident(b.ordinary.at(o), b.pascals.at(p)));
  }
  // 23.04 is ac ^ bf.
  const Sextuple& s = b.sextuple;
  CHECK(b.ordinary.at(OrdinaryLabel::make(SymbolPair::make(2, 3), SymbolPair::make(0, 4))) ==
        meet(join(s.point(0), s.point(2)), join(s.point(1), s.point(5))));
  CHECK(ordinary_meeting_point(b, o) == b.ordinary.at(o));
}

TEST_CASE("incidence pattern, exhaustively") {
  const BaseMysticum& b = base();
  for (const auto& [pl, p] : b.pascals) {
    std::set<KirkmanLabel> on;
    for (const auto& [kl, k] : b.kirkmans) {
      if (incident(k, p)) on.insert(kl);
    }
    const auto documented = kirkmans_on(pl);
    CHECK(on == std::set<KirkmanLabel>(documented.begin(), documented.end()));
    CHECK(on.size() == 3);
  }
  for (const auto& [kl, k] : b.kirkmans) {
    int through = 0;
    for (const auto& [pl, p] : b.pascals) through += incident(k, p);
    CHECK(through == 3);
  }
  for (const auto& [nl, n] : b.steiner) {
    for (const auto& [ll, l] : b.cayley) {
      std::set<int> all(nl.s.begin(), nl.s.end());
      all.insert(ll.s.begin(), ll.s.end());
      CHECK(incident(n, l) == (all.size() == 6));
    }
  }
  for (const auto& [ol, o] : b.ordinary) {
    int through = 0;
    for (const auto& [pl, p] : b.pascals) through += incident(o, p);
    CHECK(through == 4);
  }
  for (const auto& [kl, k] : b.kirkmans) {
    for (const auto& [ll, l] : b.plucker) CHECK_FALSE(incident(k, l));
  }
  for (const auto& [nl, n] : b.salmon) {
    for (const auto& [pl, p] : b.pascals) CHECK_FALSE(incident(n, p));
  }
}
