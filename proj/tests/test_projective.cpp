// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <array>

#include "support.hpp"

using namespace mysticum;
using namespace mysticum::testing;

namespace {

// Hand cross product on machine integers, independent of the library.
std::array<long, 3> cross(std::array<long, 3> u, std::array<long, 3> v) {
  return {u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2],
          u[0] * v[1] - u[1] * v[0]};
}

GeometryError::Kind kind_of(auto&& f) {
  try {
    f();
  } catch (const GeometryError& e) {
    return e.kind();
  }
  FAIL("expected a GeometryError");
  return GeometryError::Kind::kZeroVector;
}

}  // namespace

TEST_CASE("canonical form") {
  CHECK(pt(2, 4, 6) == pt(1, 2, 3));
  CHECK(pt(0, 0, 5).coords() == IntVector3(0, 0, 1));
  CHECK(Point(RatVector3(q(-1, 2), q(1), q(0))).coords() == IntVector3(1, -2, 0));
  CHECK(pt(-3, 6, 0) == pt(1, -2, 0));
  CHECK(kind_of([] { pt(0, 0, 0); }) == GeometryError::Kind::kZeroVector);

  std::mt19937_64 rng(11);
  for (int n = 0; n < 200; ++n) {
    RatVector3 v(random_rational(rng), random_rational(rng), random_rational(rng));
    if (v.isZero()) continue;
    const Point p(v);
    CHECK(Point(p.coords()) == p);
    CHECK(Point(RatVector3(v * q(-7, 3))) == p);
  }
}

TEST_CASE("join and meet") {
  CHECK(join(pt(1, 0, 0), pt(0, 1, 0)) == ln(0, 0, 1));
  const auto c = cross({0, 0, 1}, {1, 1, 1});
  CHECK(join(pt(0, 0, 1), pt(1, 1, 1)) == ln(c[0], c[1], c[2]));
  CHECK(join(pt(0, 0, 1), pt(1, 1, 1)) == ln(1, -1, 0));
  CHECK(kind_of([] { join(pt(1, 2, 3), pt(2, 4, 6)); }) ==
        GeometryError::Kind::kCoincidentPoints);

  CHECK(meet(ln(0, 0, 1), ln(0, 1, 0)) == pt(1, 0, 0));
  const auto m = cross({1, -1, 0}, {1, 1, -2});
  CHECK(meet(ln(1, -1, 0), ln(1, 1, -2)) == pt(m[0], m[1], m[2]));
  CHECK(meet(ln(1, -1, 0), ln(1, 1, -2)) == pt(1, 1, 1));
  CHECK(kind_of([] { meet(ln(1, 1, 1), ln(-1, -1, -1)); }) ==
        GeometryError::Kind::kCoincidentLines);
}

TEST_CASE("incidence and dependence") {
  CHECK(incident(pt(1, 1, 1), ln(1, -1, 0)));
  CHECK_FALSE(incident(pt(1, 0, 0), ln(1, 0, 0)));
  CHECK(dependent_triple(pt(1, 0, 0), pt(0, 1, 0), pt(1, 1, 0)));
  CHECK_FALSE(dependent_triple(pt(1, 0, 0), pt(0, 1, 0), pt(0, 0, 1)));
  CHECK(dependent_triple(ln(1, 0, 0), ln(0, 1, 0), ln(1, 1, 0)));
  CHECK(kind_of([] { dependent_triple(pt(1, 0, 0), pt(2, 0, 0), pt(0, 0, 1)); }) ==
        GeometryError::Kind::kDuplicateElement);

  std::mt19937_64 rng(5);
  for (int n = 0; n < 300; ++n) {
    const Extended s(random_rational(rng));
    const Extended t(random_rational(rng));
    if (s == t) continue;
    const Line chord = join(conic_point(s), conic_point(t));
    CHECK(incident(conic_point(s), chord));
    CHECK(incident(conic_point(t), chord));
  }
}

TEST_CASE("duality and the determinant criterion") {
  std::mt19937_64 rng(17);
  auto random_point = [&] {
    while (true) {
      RatVector3 v(random_rational(rng), random_rational(rng), random_rational(rng));
      if (!v.isZero()) return Point(v);
    }
  };
  int checked = 0;
  while (checked < 300) {
    const Point p = random_point(), r = random_point(), s = random_point();
    if (p == r || r == s || p == s) continue;
    CHECK(dependent_triple(p, r, s) == incident(s, join(p, r)));
    if (dependent_triple(p, r, s)) continue;
    CHECK(incident(p, join(p, r)));
    CHECK(meet(join(p, r), join(r, s)) == r);
    CHECK(meet(join(p, r), join(p, s)) == p);
    ++checked;
  }
  // Collinear by construction.
  CHECK(dependent_triple(pt(1, 2, 3), pt(2, 3, 4), pt(3, 4, 5)));
}

TEST_CASE("cross ratio of points") {
  const Point inf = pt(1, 0, 0), zero = pt(0, 0, 1), one = pt(1, 0, 1);
  CHECK(cross_ratio_points(inf, zero, one, pt(2, 0, 1)) == Extended(q(2)));
  CHECK(cross_ratio_points(inf, zero, one, pt(-1, 0, 1)) == Extended(q(-1)));
  CHECK(cross_ratio_points(inf, zero, one, one) == Extended(q(1)));
  CHECK(cross_ratio_points(inf, zero, one, zero) == Extended(q(0)));
  CHECK(cross_ratio_points(inf, zero, one, inf).is_infinite());
  CHECK(kind_of([&] { cross_ratio_points(inf, inf, one, pt(2, 0, 1)); }) ==
        GeometryError::Kind::kDegenerateFrame);
  CHECK(kind_of([&] { cross_ratio_points(inf, zero, one, pt(0, 1, 0)); }) ==
        GeometryError::Kind::kNotCollinear);

  // Affine coordinate on a slanted line: (t, 2t+1) with frame t = inf, 0, 1.
  auto on = [](Rational t) { return Point(RatVector3(t, 2 * t + 1, q(1))); };
  CHECK(cross_ratio_points(pt(1, 2, 0), on(q(0)), on(q(1)), on(q(5, 3))) ==
        Extended(q(5, 3)));
}

TEST_CASE("cross ratio is projectively invariant") {
  std::mt19937_64 rng(23);
  for (int n = 0; n < 100; ++n) {
    // Four points on the line through two random points.
    const RatVector3 u(random_rational(rng), random_rational(rng), q(1));
    const RatVector3 v(random_rational(rng), q(1), random_rational(rng));
    const Rational s = random_rational(rng);
    if (Point(u) == Point(v)) continue;
    const std::array<Point, 4> pts{Point(u), Point(v), Point(u + v), Point(u + s * v)};
    const Extended before = cross_ratio_points(pts[0], pts[1], pts[2], pts[3]);
    const RatMatrix3 m = random_invertible(rng);
    const Extended after = cross_ratio_points(transform(m, pts[0]), transform(m, pts[1]),
                                              transform(m, pts[2]), transform(m, pts[3]));
    CHECK(before == after);
    // a u + b v sits at a/b in the frame (u, v, u + v).
    CHECK(before == (s == 0 ? Extended::infinity() : Extended(1 / s)));
  }
}

TEST_CASE("cross ratio of lines") {
  const Line l1 = ln(1, 0, 0), l2 = ln(0, 1, 0), l3 = ln(1, -1, 0), l4 = ln(2, -1, 0);
  CHECK(cross_ratio_lines(l1, l2, l3, l4) == Extended(q(2)));
  CHECK(cross_ratio_lines(l1, l2, l3, l3) == Extended(q(1)));
  CHECK(kind_of([&] { cross_ratio_lines(l1, l2, l3, ln(1, 1, 1)); }) ==
        GeometryError::Kind::kNotConcurrent);

  // Same value on two different transversals.
  for (const Line& t : {ln(0, 1, -1), ln(3, 5, 7)}) {
    CHECK(cross_ratio_points(meet(l1, t), meet(l2, t), meet(l3, t), meet(l4, t)) ==
          Extended(q(2)));
  }

  std::mt19937_64 rng(31);
  for (int n = 0; n < 100; ++n) {
    const RatMatrix3 m = random_invertible(rng);
    CHECK(cross_ratio_lines(transform(m, l1), transform(m, l2), transform(m, l3),
                            transform(m, l4)) == Extended(q(2)));
  }
}

TEST_CASE("conic points") {
  CHECK(conic_point(Extended(q(0))) == pt(0, 0, 1));
  CHECK(conic_point(Extended::infinity()) == pt(1, 0, 0));
  CHECK(conic_point(Extended(q(2))) == pt(4, 2, 1));
  std::mt19937_64 rng(3);
  for (int n = 0; n < 100; ++n) {
    const Point p = conic_point(Extended(random_rational(rng)));
    CHECK(p[0] * p[2] == p[1] * p[1]);
  }
}
