// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "mysticum/multimysticum.hpp"

namespace mysticum {

/// ∞, 0, α0, α1, ... with α0 = 1, α_i + α_{i+1} = 2 for odd i and
/// 1/α_i + 1/α_{i+1} = 3 for even i. Returns the first `count` terms.
std::vector<Extended> veronese_sequence(int count);

enum class RangeKind { kKirkman, kPascal, kMeeting, kLinking };

/// One of the 300 ranges. Kirkman and Pascal ranges are named x;yz, meeting
/// and linking ranges by an ordered xy.zw.
struct RangeSpec {
  RangeKind kind = RangeKind::kKirkman;
  std::variant<KirkmanLabel, PascalLabel, OrderedPairs> label;

  static RangeSpec kirkman(const KirkmanLabel& l) { return {RangeKind::kKirkman, l}; }
  static RangeSpec pascal(const PascalLabel& l) { return {RangeKind::kPascal, l}; }
  static RangeSpec meeting(const OrderedPairs& l) { return {RangeKind::kMeeting, l}; }
  static RangeSpec linking(const OrderedPairs& l) { return {RangeKind::kLinking, l}; }

  bool is_point_range() const {
    return kind == RangeKind::kKirkman || kind == RangeKind::kMeeting;
  }
  friend bool operator==(const RangeSpec&, const RangeSpec&) = default;
};

/// "kirkman 3;05", "pascal 3;05", "meeting 12.34", "linking 12.34".
std::string to_string(const RangeSpec& spec);
RangeSpec parse_range_spec(std::string_view text);

/// All 60 + 60 + 90 + 90 specs.
const std::vector<RangeSpec>& all_range_specs();

/// Label text of the carrier: Cayley line, Steiner node, Ladd line or
/// Veronese node.
std::string carrier_name(const RangeSpec& spec);

/// Elements of a range, depth + 3 of them (heights 0..depth), plus the
/// carrier they share.
struct ExtractedRange {
  std::variant<Line, Point> carrier;
  std::vector<Point> points;  // point ranges
  std::vector<Line> lines;    // line ranges
  std::vector<std::string> names;
};

/// Throws HeightNotBuilt if the multimysticum is too shallow for `depth`.
ExtractedRange extract_range(const Multimysticum& m, const RangeSpec& spec,
                             int depth);

struct RangeReport {
  RangeSpec spec;
  /// Coordinates in the frame of the first three elements, up to the first
  /// element that could not be placed.
  std::vector<Extended> coordinates;
  bool match = false;
  std::optional<int> first_mismatch;
  std::string expected;  // at first_mismatch
  std::string actual;    // at first_mismatch, or the error text
};

/// Coordinates of every element against the Veronese sequence. Geometric
/// failures (an element off its carrier) are recorded as a mismatch at that
/// index rather than thrown; a shallow build still throws HeightNotBuilt.
RangeReport range_coordinates(const Multimysticum& m, const RangeSpec& spec,
                              int depth);

struct VerificationSummary {
  int depth = 0;
  std::vector<RangeReport> reports;
  int passed = 0;
  int total = 0;
  bool all_passed() const { return passed == total; }
};

/// Runs range_coordinates for all 300 specs.
VerificationSummary verify_all(const Multimysticum& m, int depth);

struct Witness {
  std::string name;
  bool passed = false;
  std::string detail;
};

/// Exact checks of the devices used to pin down the sequence:
///  - alignment of the Kirkman range 2;04 with the Pascal range 2;15;
///  - on every Ladd line, the involution exchanging the two meeting ranges
///    acts as z -> 2 - z;
///  - at every Veronese node, the involution exchanging the two linking
///    ranges acts as z -> z / (3z - 1), i.e. 1/β_2m + 1/β_2m+1 = 3;
///  - the quadruple N23, N023, K(0;23), K(0;23)^(1) seen from 01.45 lands on
///    the quadruple for 1;23 with its middle pair swapped, and its
///    coordinate is 1/2.
/// Requires height >= 3.
std::vector<Witness> proof_witnesses(const Multimysticum& m, int depth);

}  // namespace mysticum
