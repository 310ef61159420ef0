// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>

namespace mysticum {

/// Failures of the projective primitives. Each one signals a degenerate
/// input: exact arithmetic leaves no room for near-misses.
class GeometryError : public std::runtime_error {
 public:
  enum class Kind {
    kZeroVector,
    kCoincidentPoints,
    kCoincidentLines,
    kDuplicateElement,
    kNotCollinear,
    kNotConcurrent,
    kDegenerateFrame,
  };

  GeometryError(Kind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

class LabelError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// The sextuple is not in general position. `step()` names the construction
/// that failed.
class DegenerateSextuple : public std::runtime_error {
 public:
  DegenerateSextuple(std::string step, const std::string& detail)
      : std::runtime_error(step + ": " + detail), step_(std::move(step)) {}

  const std::string& step() const { return step_; }

 private:
  std::string step_;
};

/// The three opposite-side intersections of a hexagon were not collinear. Cannot happen for
/// points on a conic, so this signals an arithmetic bug.
class PascalViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class MutationDegeneracy : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class HeightNotBuilt : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

class ParityMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace mysticum
