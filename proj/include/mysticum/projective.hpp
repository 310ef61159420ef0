// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <compare>
#include <string>

#include <Eigen/Core>
#include <Eigen/Geometry>

#include "mysticum/errors.hpp"
#include "mysticum/scalar.hpp"

namespace mysticum {

template <typename Scalar>
using Vector3 = Eigen::Matrix<Scalar, 3, 1>;

using IntVector3 = Vector3<Integer>;
using RatVector3 = Vector3<Rational>;

/// Reduces a nonzero homogeneous triple to its canonical integer
/// representative: denominators cleared, content 1, first nonzero entry
/// positive. Two triples name the same projective element iff their
/// canonical forms are identical.
///
/// Throws GeometryError(kZeroVector) on the zero triple.
IntVector3 canonical_triple(IntVector3 raw);
IntVector3 canonical_triple(const RatVector3& raw);

template <typename Derived>
IntVector3 canonicalize(const Eigen::MatrixBase<Derived>& raw) {
  static_assert(Derived::SizeAtCompileTime == 3, "homogeneous triples only");
  return canonical_triple(Vector3<typename Derived::Scalar>(raw));
}

struct PointTag {};
struct LineTag {};

/// A point or line of the rational projective plane, stored canonically.
/// Points and lines are distinct types; the coordinates of a line are the
/// coefficients of its equation.
template <typename Tag>
class Homogeneous {
 public:
  template <typename Derived>
  Homogeneous(const Eigen::MatrixBase<Derived>& raw)  // NOLINT
      : coords_(canonicalize(raw)) {}
  Homogeneous(long x, long y, long z)
      : Homogeneous(IntVector3(Integer(x), Integer(y), Integer(z))) {}

  const IntVector3& coords() const { return coords_; }
  const Integer& operator[](int i) const { return coords_[i]; }

  friend bool operator==(const Homogeneous& a, const Homogeneous& b) {
    return a.coords_ == b.coords_;
  }
  friend std::strong_ordering operator<=>(const Homogeneous& a,
                                          const Homogeneous& b) {
    for (int i = 0; i < 3; ++i) {
      if (a.coords_[i] < b.coords_[i]) return std::strong_ordering::less;
      if (b.coords_[i] < a.coords_[i]) return std::strong_ordering::greater;
    }
    return std::strong_ordering::equal;
  }

 private:
  IntVector3 coords_;
};

using Point = Homogeneous<PointTag>;
using Line = Homogeneous<LineTag>;

/// "(x:y:z)" for points, "[a:b:c]" for lines.
std::string to_string(const Point& p);
std::string to_string(const Line& l);

/// Line through two distinct points. Throws kCoincidentPoints.
Line join(const Point& p, const Point& q);

/// Common point of two distinct lines. Throws kCoincidentLines.
Point meet(const Line& l, const Line& m);

bool incident(const Point& p, const Line& l);

/// Whether three pairwise distinct points are collinear (or three lines
/// concurrent). Throws kDuplicateElement if two inputs coincide.
bool dependent_triple(const Point& a, const Point& b, const Point& c);
bool dependent_triple(const Line& a, const Line& b, const Line& c);

/// Projective coordinate of `x` on the line through the frame, normalised so
/// that frame_inf, frame_zero, frame_one map to inf, 0, 1.
///
/// Throws kDegenerateFrame if the frame points are not pairwise distinct and
/// kNotCollinear if any of the four points leaves the frame line.
Extended cross_ratio_points(const Point& frame_inf, const Point& frame_zero,
                            const Point& frame_one, const Point& x);

/// Dual of cross_ratio_points for four lines of a pencil. Throws
/// kDegenerateFrame or kNotConcurrent.
Extended cross_ratio_lines(const Line& frame_inf, const Line& frame_zero,
                           const Line& frame_one, const Line& x);

/// Rational point of the conic xz = y^2: t -> (t^2 : t : 1), inf -> (1:0:0).
Point conic_point(const Extended& t);

}  // namespace mysticum
