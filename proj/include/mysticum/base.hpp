// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "mysticum/labels.hpp"
#include "mysticum/projective.hpp"

namespace mysticum {

/// Six distinct points a..f on the conic xz = y^2, given by parameter.
class Sextuple {
 public:
  /// Throws DegenerateSextuple if two parameters coincide.
  explicit Sextuple(const std::array<Extended, 6>& params);

  const std::array<Extended, 6>& params() const { return params_; }
  const std::array<Point, 6>& points() const { return points_; }
  const Point& point(Symbol letter) const { return points_[letter]; }

 private:
  std::array<Extended, 6> params_;
  std::array<Point, 6> points_;
};

/// The hexagrammum mysticum at height 0 together with the fixed part.
struct BaseMysticum {
  Sextuple sextuple;
  std::map<PascalLabel, Line> pascals;
  std::map<KirkmanLabel, Point> kirkmans;
  std::map<SteinerLabel, Point> steiner;
  std::map<CayleyLabel, Line> cayley;
  std::map<PluckerLabel, Line> plucker;
  std::map<SalmonLabel, Point> salmon;
  std::map<OrdinaryLabel, Point> ordinary;
};

/// Line through ab^de, bc^ef, cd^fa for the hexagon w = abcdef; the third
/// point is checked against the line through the first two.
///
/// Throws DegenerateSextuple or PascalViolation.
Line build_pascal(const Sextuple& s, const Hexagon& w);

/// Computes every element from two of its defining elements and verifies
/// the remaining ones exactly. Throws DegenerateSextuple naming the step.
BaseMysticum build_base(const Sextuple& s);

/// ac^bf style chord intersection for xy.zw, checked on its four Pascals.
Point ordinary_meeting_point(const BaseMysticum& hm, const OrdinaryLabel& l);

// Documented incidences of the base configuration, used both to construct
// and to detect accidental ones.
std::vector<PascalLabel> pascals_through(const KirkmanLabel& k);
std::vector<KirkmanLabel> kirkmans_on(const PascalLabel& p);
std::array<PascalLabel, 3> pascals_through(const SteinerLabel& n);
std::array<KirkmanLabel, 3> kirkmans_on(const CayleyLabel& l);
std::array<SteinerLabel, 4> steiners_on(const PluckerLabel& l);
std::array<CayleyLabel, 4> cayleys_through(const SalmonLabel& n);
std::array<PascalLabel, 4> pascals_through(const OrdinaryLabel& o);
CayleyLabel cayley_carrying(const KirkmanLabel& k);
SteinerLabel steiner_on(const PascalLabel& p);

struct GeneralPositionReport {
  bool ok = true;
  /// Construction step or check that failed, empty when ok.
  std::string failing_step;
  std::vector<std::string> issues;
  std::size_t pairs_scanned = 0;
  std::size_t incidences_found = 0;
  std::size_t incidences_expected = 0;
};

/// Exhaustive point x line scan of the base configuration against the
/// documented incidence list, plus distinctness inside every family.
GeneralPositionReport validate_general_position(const BaseMysticum& hm);

/// Builds and validates; never throws for degenerate input.
GeneralPositionReport validate_general_position(const Sextuple& s);

/// First strictly increasing tuple of nonnegative integers, in lexicographic
/// order, whose sextuple passes validate_general_position.
std::array<Extended, 6> default_fixture_params();

/// Distinct rationals p/q with |p| <= 20 and 1 <= q <= 20 from a seeded
/// generator. Deterministic per seed.
std::array<Extended, 6> random_params(std::uint64_t seed);

}  // namespace mysticum
