// SPDX-License-Identifier: Apache-2.0
#include "mysticum/projective.hpp"

#include <boost/integer/common_factor_rt.hpp>

namespace mysticum {

namespace mp = boost::multiprecision;

IntVector3 canonical_triple(IntVector3 raw) {
  Integer content = mp::gcd(mp::gcd(mp::abs(raw[0]), mp::abs(raw[1])),
                            mp::abs(raw[2]));
  if (content == 0) {
    throw GeometryError(GeometryError::Kind::kZeroVector,
                        "zero vector has no projective meaning");
  }
  const int lead = raw[0] != 0 ? 0 : (raw[1] != 0 ? 1 : 2);
  if (raw[lead] < 0) content = -content;
  if (content != 1) {
    for (int i = 0; i < 3; ++i) raw[i] /= content;
  }
  return raw;
}

IntVector3 canonical_triple(const RatVector3& raw) {
  Integer common = 1;
  for (int i = 0; i < 3; ++i) {
    const Integer den = mp::denominator(raw[i]);
    common = common / mp::gcd(common, den) * den;
  }
  IntVector3 scaled;
  for (int i = 0; i < 3; ++i) {
    scaled[i] = mp::numerator(raw[i]) * (common / mp::denominator(raw[i]));
  }
  return canonical_triple(std::move(scaled));
}

namespace {

template <typename Tag>
std::string format(const Homogeneous<Tag>& h, char open, char close) {
  std::string s(1, open);
  for (int i = 0; i < 3; ++i) {
    if (i) s += ':';
    s += to_string(h[i]);
  }
  s += close;
  return s;
}

Integer dot(const IntVector3& a, const IntVector3& b) {
  return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}

Integer determinant(const IntVector3& a, const IntVector3& b,
                    const IntVector3& c) {
  return dot(a, b.cross(c));
}

// Coordinate on a range of collinear points (or concurrent lines, dually).
// `carrier` is the common line (point); for two elements u, v of the range
// u x v is a multiple of `carrier`, and the multiplier is a bilinear
// alternating form that we read off one nonzero component.
template <typename Elem, typename Carrier>
Extended frame_coordinate(const Carrier& carrier, const Elem& inf,
                          const Elem& zero, const Elem& one, const Elem& x) {
  const int k = carrier[0] != 0 ? 0 : (carrier[1] != 0 ? 1 : 2);
  const auto form = [k](const Elem& u, const Elem& v) -> Integer {
    const IntVector3& a = u.coords();
    const IntVector3& b = v.coords();
    const int i = (k + 1) % 3;
    const int j = (k + 2) % 3;
    return a[i] * b[j] - a[j] * b[i];
  };
  const Integer num = form(x, zero) * form(one, inf);
  const Integer den = form(x, inf) * form(one, zero);
  if (den == 0) return Extended::infinity();
  return Extended(Rational(num, den));
}

}  // namespace

std::string to_string(const Point& p) { return format(p, '(', ')'); }
std::string to_string(const Line& l) { return format(l, '[', ']'); }

Line join(const Point& p, const Point& q) {
  if (p == q) {
    throw GeometryError(GeometryError::Kind::kCoincidentPoints,
                        "join of coincident points " + to_string(p));
  }
  return Line(p.coords().cross(q.coords()));
}

Point meet(const Line& l, const Line& m) {
  if (l == m) {
    throw GeometryError(GeometryError::Kind::kCoincidentLines,
                        "meet of coincident lines " + to_string(l));
  }
  return Point(l.coords().cross(m.coords()));
}

bool incident(const Point& p, const Line& l) {
  return dot(p.coords(), l.coords()) == 0;
}

namespace {

template <typename Tag>
bool dependent(const Homogeneous<Tag>& a, const Homogeneous<Tag>& b,
               const Homogeneous<Tag>& c) {
  if (a == b || a == c || b == c) {
    throw GeometryError(GeometryError::Kind::kDuplicateElement,
                        "dependent_triple needs three distinct elements");
  }
  return determinant(a.coords(), b.coords(), c.coords()) == 0;
}

}  // namespace

bool dependent_triple(const Point& a, const Point& b, const Point& c) {
  return dependent(a, b, c);
}

bool dependent_triple(const Line& a, const Line& b, const Line& c) {
  return dependent(a, b, c);
}

Extended cross_ratio_points(const Point& frame_inf, const Point& frame_zero,
                            const Point& frame_one, const Point& x) {
  if (frame_inf == frame_zero || frame_inf == frame_one ||
      frame_zero == frame_one) {
    throw GeometryError(GeometryError::Kind::kDegenerateFrame,
                        "frame points must be pairwise distinct");
  }
  const Line carrier = join(frame_inf, frame_zero);
  if (!incident(frame_one, carrier) || !incident(x, carrier)) {
    throw GeometryError(GeometryError::Kind::kNotCollinear,
                        "point " + to_string(x) + " or frame leaves " +
                            to_string(carrier));
  }
  return frame_coordinate(carrier, frame_inf, frame_zero, frame_one, x);
}

Extended cross_ratio_lines(const Line& frame_inf, const Line& frame_zero,
                           const Line& frame_one, const Line& x) {
  if (frame_inf == frame_zero || frame_inf == frame_one ||
      frame_zero == frame_one) {
    throw GeometryError(GeometryError::Kind::kDegenerateFrame,
                        "frame lines must be pairwise distinct");
  }
  const Point center = meet(frame_inf, frame_zero);
  if (!incident(center, frame_one) || !incident(center, x)) {
    throw GeometryError(GeometryError::Kind::kNotConcurrent,
                        "line " + to_string(x) + " or frame misses " +
                            to_string(center));
  }
  return frame_coordinate(center, frame_inf, frame_zero, frame_one, x);
}

Point conic_point(const Extended& t) {
  if (t.is_infinite()) return Point(1, 0, 0);
  const Rational& v = t.value();
  return Point(RatVector3(v * v, v, Rational(1)));
}

}  // namespace mysticum
