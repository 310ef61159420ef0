// SPDX-License-Identifier: Apache-2.0
#include "mysticum/multimysticum.hpp"

#include <string>

namespace mysticum {

namespace {

std::string at_height(const std::string& what, int h) {
  return what + " at height " + std::to_string(h);
}

template <typename F>
auto guarded(const std::string& name, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const GeometryError& e) {
    throw MutationDegeneracy(name + ": " + e.what());
  }
}

// The three inter-layer labels (x t).(zw), t outside {x, z, w}, whose
// elements define the new element x;zw.
std::vector<OrderedPairs> defining_inter_labels(Symbol x, const SymbolPair& zw) {
  std::vector<OrderedPairs> out;
  for (Symbol t : complement({x, zw.lo, zw.hi})) {
    out.push_back({SymbolPair::make(x, t), zw});
  }
  return out;
}

Point common_point(const std::vector<const Line*>& lines,
                   const std::string& name) {
  const Point p = guarded(name, [&] { return meet(*lines[0], *lines[1]); });
  for (std::size_t k = 2; k < lines.size(); ++k) {
    if (!incident(p, *lines[k])) {
      throw MutationDegeneracy(name + ": defining lines are not concurrent");
    }
  }
  return p;
}

Line common_line(const std::vector<const Point*>& points,
                 const std::string& name) {
  const Line l = guarded(name, [&] { return join(*points[0], *points[1]); });
  for (std::size_t k = 2; k < points.size(); ++k) {
    if (!incident(*points[k], l)) {
      throw MutationDegeneracy(name + ": defining points are not collinear");
    }
  }
  return l;
}

void fill_pascals_from_kirkmans(Layer& layer) {
  for (const auto& label : enumerate<PascalLabel>()) {
    std::vector<const Point*> points;
    for (const auto& k : kirkmans_on(label)) points.push_back(&layer.kirkmans.at(k));
    layer.pascals.emplace(
        label, common_line(points, at_height(to_string(label), layer.height)));
  }
}

void fill_kirkmans_from_pascals(Layer& layer) {
  for (const auto& label : enumerate<KirkmanLabel>()) {
    std::vector<const Line*> lines;
    for (const auto& p : pascals_through(label)) lines.push_back(&layer.pascals.at(p));
    layer.kirkmans.emplace(
        label, common_point(lines, at_height(to_string(label), layer.height)));
  }
}

void check_fixed_incidences(const BaseMysticum& base, const Layer& layer) {
  for (const auto& [label, k] : layer.kirkmans) {
    if (!incident(k, base.cayley.at(cayley_carrying(label)))) {
      throw MutationDegeneracy(at_height(to_string(label), layer.height) +
                               " leaves its Cayley line");
    }
  }
  for (const auto& [label, p] : layer.pascals) {
    if (!incident(base.steiner.at(steiner_on(label)), p)) {
      throw MutationDegeneracy(at_height(to_string(label), layer.height) +
                               " misses its Steiner node");
    }
  }
}

Layer base_layer(const BaseMysticum& base) {
  return {0, base.kirkmans, base.pascals};
}

}  // namespace

InterLayer build_interlayer(const Layer& layer) {
  InterLayer inter;
  inter.lower_height = layer.height;
  for (const auto& label : enumerate<OrderedPairs>()) {
    const std::string name = to_string(InterLabel{label, layer.height});
    const Symbol z = label.lower.lo;
    const Symbol w = label.lower.hi;
    if (inter.is_linking()) {
      // (xy)^(i+1).(zw)^(i) joins K(z;xy) and K(w;xy) at height i.
      inter.linking.emplace(label, guarded(name, [&] {
        return join(layer.kirkmans.at({z, label.upper}),
                    layer.kirkmans.at({w, label.upper}));
      }));
    } else {
      // Dually, the meet of P(z;xy) and P(w;xy).
      inter.meeting.emplace(label, guarded(name, [&] {
        return meet(layer.pascals.at({z, label.upper}),
                    layer.pascals.at({w, label.upper}));
      }));
    }
  }
  return inter;
}

Layer mutate(const InterLayer& inter) {
  Layer next;
  next.height = inter.lower_height + 1;
  if (inter.is_linking()) {
    for (const auto& label : enumerate<KirkmanLabel>()) {
      std::vector<const Line*> lines;
      for (const auto& l : defining_inter_labels(label.x, label.pair)) {
        lines.push_back(&inter.linking.at(l));
      }
      next.kirkmans.emplace(
          label, common_point(lines, at_height(to_string(label), next.height)));
    }
    fill_pascals_from_kirkmans(next);
  } else {
    for (const auto& label : enumerate<PascalLabel>()) {
      std::vector<const Point*> points;
      for (const auto& l : defining_inter_labels(label.x, label.pair)) {
        points.push_back(&inter.meeting.at(l));
      }
      next.pascals.emplace(
          label, common_line(points, at_height(to_string(label), next.height)));
    }
    fill_kirkmans_from_pascals(next);
  }
  return next;
}

Multimysticum::Multimysticum(BaseMysticum base, std::vector<Layer> layers,
                             std::vector<InterLayer> inter)
    : base_(std::move(base)),
      layers_(std::move(layers)),
      inter_(std::move(inter)) {}

Multimysticum::Multimysticum(BaseMysticum base)
    : Multimysticum(std::move(base), {}, {}) {
  layers_.push_back(base_layer(base_));
  inter_.push_back(build_interlayer(layers_.back()));
  derive_linking_objects();
}

Multimysticum Multimysticum::build(const Sextuple& s, int max_height) {
  if (max_height < 0) throw std::invalid_argument("negative height");
  Multimysticum m(build_base(s));
  while (m.height() < max_height) m.elevate();
  return m;
}

Multimysticum Multimysticum::restore(BaseMysticum base,
                                     std::vector<Layer> layers,
                                     std::vector<InterLayer> inter,
                                     std::map<LaddLabel, Line> ladd,
                                     std::map<VeroneseNodeLabel, Point> veronese) {
  Multimysticum m(std::move(base), std::move(layers), std::move(inter));
  m.ladd_ = std::move(ladd);
  m.veronese_ = std::move(veronese);
  return m;
}

void Multimysticum::elevate() {
  Layer next = mutate(inter_.back());
  check_fixed_incidences(base_, next);
  layers_.push_back(std::move(next));
  inter_.push_back(build_interlayer(layers_.back()));
  derive_linking_objects();
}

void Multimysticum::derive_linking_objects() {
  const int top = static_cast<int>(inter_.size()) - 1;
  if (top == 0) {
    for (const auto& label : enumerate<VeroneseNodeLabel>()) {
      const Point node = veronese_node_at(*this, label, 0);
      const PluckerLabel carrier{OrderedPairs{label.first, label.second}.rest()};
      if (!incident(node, base_.plucker.at(carrier))) {
        throw MutationDegeneracy(to_string(label) + " leaves " +
                                 to_string(carrier));
      }
      veronese_.emplace(label, node);
    }
  } else if (top == 1) {
    for (const auto& label : enumerate<LaddLabel>()) {
      const Line line = ladd_line_at(*this, label, 1);
      const SalmonLabel salmon{OrderedPairs{label.first, label.second}.rest()};
      const OrdinaryLabel ordinary{label.first, label.second};
      if (!incident(base_.salmon.at(salmon), line) ||
          !incident(base_.ordinary.at(ordinary), line)) {
        throw MutationDegeneracy(to_string(label) + " misses " +
                                 to_string(salmon) + " or " +
                                 to_string(ordinary));
      }
      ladd_.emplace(label, line);
    }
  } else if (top == 2 || top == 3) {
    // Re-derive from the next admissible height.
    if (top == 2) {
      for (const auto& [label, node] : veronese_) {
        if (!(veronese_node_at(*this, label, 2) == node)) {
          throw MutationDegeneracy(to_string(label) + " depends on height");
        }
      }
    } else {
      for (const auto& [label, line] : ladd_) {
        if (!(ladd_line_at(*this, label, 3) == line)) {
          throw MutationDegeneracy(to_string(label) + " depends on height");
        }
      }
    }
  }
}

const Layer& Multimysticum::layer(int height) const {
  if (height < 0 || height > this->height()) {
    throw HeightNotBuilt("layer " + std::to_string(height) + " not built");
  }
  return layers_[height];
}

const InterLayer& Multimysticum::interlayer(int lower_height) const {
  if (lower_height < 0 || lower_height >= static_cast<int>(inter_.size())) {
    throw HeightNotBuilt("inter-layer " + std::to_string(lower_height) +
                         " not built");
  }
  return inter_[lower_height];
}

const Line& Multimysticum::linking_line(const OrderedPairs& label,
                                        int lower_height) const {
  if (lower_height % 2 != 0) {
    throw ParityMismatch("linking lines sit above even heights");
  }
  return interlayer(lower_height).linking.at(label);
}

const Point& Multimysticum::meeting_point(const OrderedPairs& label,
                                          int lower_height) const {
  if (lower_height % 2 == 0) {
    throw ParityMismatch("higher meeting points sit above odd heights");
  }
  return interlayer(lower_height).meeting.at(label);
}

const Line& Multimysticum::ladd_line(const LaddLabel& label) const {
  const auto it = ladd_.find(label);
  if (it == ladd_.end()) {
    throw HeightNotBuilt("Ladd lines need inter-layer 1");
  }
  return it->second;
}

const Point& Multimysticum::veronese_node(const VeroneseNodeLabel& label) const {
  const auto it = veronese_.find(label);
  if (it == veronese_.end()) {
    throw HeightNotBuilt("Veronese nodes need inter-layer 0");
  }
  return it->second;
}

Line ladd_line_at(const Multimysticum& m, const LaddLabel& label, int i) {
  const OrderedPairs forward{label.first, label.second};
  return guarded(to_string(label), [&] {
    return join(m.meeting_point(forward, i),
                m.meeting_point(forward.swapped(), i));
  });
}

Point veronese_node_at(const Multimysticum& m, const VeroneseNodeLabel& label,
                       int i) {
  const OrderedPairs forward{label.first, label.second};
  return guarded(to_string(label), [&] {
    return meet(m.linking_line(forward, i),
                m.linking_line(forward.swapped(), i));
  });
}

Point plucker_ladd_node(const Multimysticum& m, const OrderedPairs& label) {
  const Line& ladd = m.ladd_line(unordered<LaddLabel>(label));
  const Line& plucker = m.base().plucker.at(PluckerLabel{label.lower});
  return guarded("PLN " + to_string(label), [&] { return meet(plucker, ladd); });
}

Line salmon_veronese_line(const Multimysticum& m, const OrderedPairs& label) {
  const Point& node = m.veronese_node(unordered<VeroneseNodeLabel>(label));
  const Point& salmon = m.base().salmon.at(SalmonLabel{label.lower});
  return guarded("SVL " + to_string(label), [&] { return join(salmon, node); });
}

}  // namespace mysticum
