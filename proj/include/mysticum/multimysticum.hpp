// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <map>
#include <optional>
#include <vector>

#include "mysticum/base.hpp"

namespace mysticum {

/// The mutable part at one height: 60 Kirkman nodes and 60 Pascal lines.
struct Layer {
  int height = 0;
  std::map<KirkmanLabel, Point> kirkmans;
  std::map<PascalLabel, Line> pascals;
};

/// The 90 elements (xy)^(i+1).(zw)^(i) between heights i and i+1: linking
/// lines when i is even, higher meeting points when i is odd. Only the map
/// matching the parity is populated.
struct InterLayer {
  int lower_height = 0;
  std::map<OrderedPairs, Line> linking;
  std::map<OrderedPairs, Point> meeting;

  bool is_linking() const { return lower_height % 2 == 0; }
};

/// Builds the 90 linking lines (even i) or meeting points (odd i) out of
/// the layer at height i.
InterLayer build_interlayer(const Layer& layer);

/// Builds the layer at height i+1 from the inter-layer (i, i+1), checking
/// every three-fold concurrency and collinearity. Throws MutationDegeneracy.
Layer mutate(const InterLayer& inter);

/// Base mysticum, layers 0..N, inter-layers 0..N (the top one points out of
/// layer N, so ranges of depth N are available), and the height-independent
/// Ladd lines and Veronese nodes.
class Multimysticum {
 public:
  /// Height 0. Throws DegenerateSextuple / MutationDegeneracy.
  explicit Multimysticum(BaseMysticum base);

  static Multimysticum build(const Sextuple& s, int max_height);

  /// Reassembles a stored configuration without re-deriving anything. The
  /// result is not checked; verification does that.
  static Multimysticum restore(BaseMysticum base, std::vector<Layer> layers,
                               std::vector<InterLayer> inter,
                               std::map<LaddLabel, Line> ladd,
                               std::map<VeroneseNodeLabel, Point> veronese);

  /// Adds layer N+1 and inter-layer N+1. Also computes the Ladd lines once
  /// inter-layer 1 exists and re-derives the Ladd lines / Veronese nodes
  /// from inter-layers 3 / 2, throwing MutationDegeneracy on disagreement.
  void elevate();

  int height() const { return static_cast<int>(layers_.size()) - 1; }
  const BaseMysticum& base() const { return base_; }
  const std::vector<Layer>& layers() const { return layers_; }
  const std::vector<InterLayer>& interlayers() const { return inter_; }

  /// Throws HeightNotBuilt.
  const Layer& layer(int height) const;
  const InterLayer& interlayer(int lower_height) const;

  /// Throws HeightNotBuilt or ParityMismatch (linking lines live at even
  /// lower heights, meeting points at odd ones).
  const Line& linking_line(const OrderedPairs& label, int lower_height) const;
  const Point& meeting_point(const OrderedPairs& label, int lower_height) const;

  /// Stored height-independent elements. Throws HeightNotBuilt when the
  /// required inter-layer (1 for Ladd lines, 0 for Veronese nodes) is absent.
  const Line& ladd_line(const LaddLabel& label) const;
  const Point& veronese_node(const VeroneseNodeLabel& label) const;
  const std::map<LaddLabel, Line>& ladd_lines() const { return ladd_; }
  const std::map<VeroneseNodeLabel, Point>& veronese_nodes() const {
    return veronese_;
  }

 private:
  Multimysticum(BaseMysticum base, std::vector<Layer> layers,
                std::vector<InterLayer> inter);

  void derive_linking_objects();

  BaseMysticum base_;
  std::vector<Layer> layers_;
  std::vector<InterLayer> inter_;
  std::map<LaddLabel, Line> ladd_;
  std::map<VeroneseNodeLabel, Point> veronese_;
};

/// Ladd line xy.zw recomputed from the meeting points at odd height i.
Line ladd_line_at(const Multimysticum& m, const LaddLabel& label, int i);

/// Veronese node xy.zw recomputed from the linking lines at even height i.
Point veronese_node_at(const Multimysticum& m, const VeroneseNodeLabel& label,
                       int i);

/// Meet of the Plücker line on the lower pair with the Ladd line:
/// PLN(12;34) = L34 ^ L12.34. Throws HeightNotBuilt.
Point plucker_ladd_node(const Multimysticum& m, const OrderedPairs& label);

/// Join of the Salmon node on the lower pair with the Veronese node:
/// SVL(12;34) = N34 v N12.34. Throws HeightNotBuilt.
Line salmon_veronese_line(const Multimysticum& m, const OrderedPairs& label);

}  // namespace mysticum
