// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <random>

#include "mysticum/ranges.hpp"

namespace mysticum::testing {

// Fixture sextuple (0,1,2,3,5,14) built once to height 8.
inline const Multimysticum& fixture() {
  static const Multimysticum m = Multimysticum::build(
      Sextuple(default_fixture_params()), 8);
  return m;
}

inline Point pt(long x, long y, long z) { return Point(x, y, z); }
inline Line ln(long a, long b, long c) { return Line(a, b, c); }

inline Rational q(long n, long d = 1) { return Rational(n, d); }

// Small random rationals, never zero denominators.
inline Rational random_rational(std::mt19937_64& rng, long bound = 20) {
  std::uniform_int_distribution<long> num(-bound, bound);
  std::uniform_int_distribution<long> den(1, bound);
  return Rational(num(rng), den(rng));
}

using RatMatrix3 = Eigen::Matrix<Rational, 3, 3>;

inline RatMatrix3 random_invertible(std::mt19937_64& rng) {
  while (true) {
    RatMatrix3 m;
    for (int r = 0; r < 3; ++r) {
      for (int c = 0; c < 3; ++c) m(r, c) = random_rational(rng, 9);
    }
    const Rational det = m(0, 0) * (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1)) -
                         m(0, 1) * (m(1, 0) * m(2, 2) - m(1, 2) * m(2, 0)) +
                         m(0, 2) * (m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0));
    if (det != 0) return m;
  }
}

inline RatVector3 rational(const IntVector3& v) {
  return RatVector3(Rational(v[0]), Rational(v[1]), Rational(v[2]));
}

inline Point transform(const RatMatrix3& m, const Point& p) {
  return Point(RatVector3(m * rational(p.coords())));
}

// Lines transform by the inverse transpose; any nonzero multiple will do, so
// the adjugate transpose is enough.
inline Line transform(const RatMatrix3& m, const Line& l) {
  RatMatrix3 cof;
  for (int r = 0; r < 3; ++r) {
    for (int c = 0; c < 3; ++c) {
      const int r1 = (r + 1) % 3, r2 = (r + 2) % 3;
      const int c1 = (c + 1) % 3, c2 = (c + 2) % 3;
      cof(r, c) = m(r1, c1) * m(r2, c2) - m(r1, c2) * m(r2, c1);
    }
  }
  return Line(RatVector3(cof * rational(l.coords())));
}

}  // namespace mysticum::testing
