// SPDX-License-Identifier: Apache-2.0
#include "mysticum/ranges.hpp"

#include <functional>

namespace mysticum {

std::vector<Extended> veronese_sequence(int count) {
  std::vector<Extended> terms;
  if (count <= 0) return terms;
  terms.push_back(Extended::infinity());
  if (count >= 2) terms.emplace_back(Rational(0));
  Rational alpha(1);
  for (int i = 0; static_cast<int>(terms.size()) < count; ++i) {
    terms.emplace_back(alpha);
    if (i % 2 == 1) {
      alpha = Rational(2) - alpha;
    } else {
      alpha = Rational(1) / (Rational(3) - Rational(1) / alpha);
    }
  }
  return terms;
}

// --- specs -------------------------------------------------------------------

std::string to_string(const RangeSpec& spec) {
  switch (spec.kind) {
    case RangeKind::kKirkman:
      return "kirkman " + to_string(std::get<KirkmanLabel>(spec.label)).substr(2);
    case RangeKind::kPascal:
      return "pascal " + to_string(std::get<PascalLabel>(spec.label)).substr(2);
    case RangeKind::kMeeting:
      return "meeting " + to_string(std::get<OrderedPairs>(spec.label));
    case RangeKind::kLinking:
      return "linking " + to_string(std::get<OrderedPairs>(spec.label));
  }
  return {};
}

RangeSpec parse_range_spec(std::string_view text) {
  const auto space = text.find(' ');
  if (space == std::string_view::npos) {
    throw LabelError("bad range '" + std::string(text) + "'");
  }
  const std::string_view kind = text.substr(0, space);
  const std::string body(text.substr(space + 1));
  if (kind == "kirkman") return RangeSpec::kirkman(parse_label<KirkmanLabel>("K " + body));
  if (kind == "pascal") return RangeSpec::pascal(parse_label<PascalLabel>("P " + body));
  if (kind == "meeting") return RangeSpec::meeting(parse_label<OrderedPairs>(body));
  if (kind == "linking") return RangeSpec::linking(parse_label<OrderedPairs>(body));
  throw LabelError("unknown range kind '" + std::string(kind) + "'");
}

const std::vector<RangeSpec>& all_range_specs() {
  static const std::vector<RangeSpec> all = [] {
    std::vector<RangeSpec> out;
    for (const auto& l : enumerate<KirkmanLabel>()) out.push_back(RangeSpec::kirkman(l));
    for (const auto& l : enumerate<PascalLabel>()) out.push_back(RangeSpec::pascal(l));
    for (const auto& l : enumerate<OrderedPairs>()) out.push_back(RangeSpec::meeting(l));
    for (const auto& l : enumerate<OrderedPairs>()) out.push_back(RangeSpec::linking(l));
    return out;
  }();
  return all;
}

std::string carrier_name(const RangeSpec& spec) {
  switch (spec.kind) {
    case RangeKind::kKirkman:
      return to_string(cayley_carrying(std::get<KirkmanLabel>(spec.label)));
    case RangeKind::kPascal:
      return to_string(steiner_on(std::get<PascalLabel>(spec.label)));
    case RangeKind::kMeeting:
      return to_string(unordered<LaddLabel>(std::get<OrderedPairs>(spec.label)));
    case RangeKind::kLinking:
      return to_string(
          unordered<VeroneseNodeLabel>(std::get<OrderedPairs>(spec.label)));
  }
  return {};
}

// --- extraction --------------------------------------------------------------

ExtractedRange extract_range(const Multimysticum& m, const RangeSpec& spec,
                             int depth) {
  if (depth < 0) throw std::invalid_argument("negative depth");
  const BaseMysticum& base = m.base();
  switch (spec.kind) {
    case RangeKind::kKirkman: {
      // N yz, N xyz, K(x;yz)^(0), K^(1), ... on the Cayley line L uvw.
      const auto& k = std::get<KirkmanLabel>(spec.label);
      const auto steiner = SteinerLabel::make(k.x, k.pair.lo, k.pair.hi);
      ExtractedRange r{base.cayley.at(cayley_carrying(k)), {}, {}, {}};
      r.points = {base.salmon.at({k.pair}), base.steiner.at(steiner)};
      r.names = {to_string(SalmonLabel{k.pair}), to_string(steiner)};
      for (int h = 0; h <= depth; ++h) {
        r.points.push_back(m.layer(h).kirkmans.at(k));
        r.names.push_back(to_string(k) + "(" + std::to_string(h) + ")");
      }
      return r;
    }
    case RangeKind::kPascal: {
      // L xyz, L yz, P(x;yz)^(0), P^(1), ... through the Steiner node N uvw.
      const auto& p = std::get<PascalLabel>(spec.label);
      const auto cayley = CayleyLabel::make(p.x, p.pair.lo, p.pair.hi);
      ExtractedRange r{base.steiner.at(steiner_on(p)), {}, {}, {}};
      r.lines = {base.cayley.at(cayley), base.plucker.at({p.pair})};
      r.names = {to_string(cayley), to_string(PluckerLabel{p.pair})};
      for (int h = 0; h <= depth; ++h) {
        r.lines.push_back(m.layer(h).pascals.at(p));
        r.names.push_back(to_string(p) + "(" + std::to_string(h) + ")");
      }
      return r;
    }
    case RangeKind::kMeeting: {
      // N rest, PLN, xy.zw, p1, q1, p3, q3, ... on the Ladd line, where
      // p_i = (zw)^(i+1).(xy)^(i) and q_i = (xy)^(i+1).(zw)^(i).
      const auto& o = std::get<OrderedPairs>(spec.label);
      const auto ordinary = unordered<OrdinaryLabel>(o);
      ExtractedRange r{m.ladd_line(unordered<LaddLabel>(o)), {}, {}, {}};
      r.points = {base.salmon.at({o.rest()}), plucker_ladd_node(m, o),
                  base.ordinary.at(ordinary)};
      r.names = {to_string(SalmonLabel{o.rest()}), "PLN " + to_string(o),
                 to_string(ordinary)};
      for (int j = 1; j <= depth; ++j) {
        const bool odd = j % 2 == 1;
        const InterLabel inter{odd ? o.swapped() : o, odd ? j : j - 1};
        r.points.push_back(m.meeting_point(inter.pairs, inter.lower_height));
        r.names.push_back(to_string(inter));
      }
      return r;
    }
    case RangeKind::kLinking: {
      // SVL, L rest, r0, s0, r2, s2, ... through the Veronese node, where
      // r_i = (zw)^(i+1).(xy)^(i) and s_i = (xy)^(i+1).(zw)^(i).
      const auto& o = std::get<OrderedPairs>(spec.label);
      ExtractedRange r{m.veronese_node(unordered<VeroneseNodeLabel>(o)), {}, {}, {}};
      r.lines = {salmon_veronese_line(m, o), base.plucker.at({o.rest()})};
      r.names = {"SVL " + to_string(o), to_string(PluckerLabel{o.rest()})};
      for (int j = 0; j <= depth; ++j) {
        const bool even = j % 2 == 0;
        const InterLabel inter{even ? o.swapped() : o, even ? j : j - 1};
        r.lines.push_back(m.linking_line(inter.pairs, inter.lower_height));
        r.names.push_back(to_string(inter));
      }
      return r;
    }
  }
  throw std::logic_error("unknown range kind");
}

// --- coordinates -------------------------------------------------------------

namespace {

// Coordinate of element k in the frame of elements 0, 1, 2.
std::function<Extended(std::size_t)> coordinate_fn(const ExtractedRange& r) {
  if (!r.points.empty()) {
    return [&r](std::size_t k) {
      if (!incident(r.points[k], std::get<Line>(r.carrier))) {
        throw GeometryError(GeometryError::Kind::kNotCollinear,
                            r.names[k] + " is off the carrier");
      }
      return cross_ratio_points(r.points[0], r.points[1], r.points[2],
                                r.points[k]);
    };
  }
  return [&r](std::size_t k) {
    if (!incident(std::get<Point>(r.carrier), r.lines[k])) {
      throw GeometryError(GeometryError::Kind::kNotConcurrent,
                          r.names[k] + " misses the carrier");
    }
    return cross_ratio_lines(r.lines[0], r.lines[1], r.lines[2], r.lines[k]);
  };
}

std::size_t size_of(const ExtractedRange& r) {
  return r.points.empty() ? r.lines.size() : r.points.size();
}

}  // namespace

RangeReport range_coordinates(const Multimysticum& m, const RangeSpec& spec,
                              int depth) {
  RangeReport report{spec, {}, false, std::nullopt, {}, {}};
  const ExtractedRange range = extract_range(m, spec, depth);
  const auto expected = veronese_sequence(static_cast<int>(size_of(range)));
  const auto coordinate = coordinate_fn(range);
  for (std::size_t k = 0; k < size_of(range); ++k) {
    try {
      report.coordinates.push_back(coordinate(k));
    } catch (const GeometryError& e) {
      report.first_mismatch = static_cast<int>(k);
      report.expected = to_string(expected[k]);
      report.actual = e.what();
      return report;
    }
    if (!(report.coordinates.back() == expected[k])) {
      report.first_mismatch = static_cast<int>(k);
      report.expected = to_string(expected[k]);
      report.actual = to_string(report.coordinates.back());
      // Keep going so the report carries the full coordinate list.
      for (++k; k < size_of(range); ++k) {
        try {
          report.coordinates.push_back(coordinate(k));
        } catch (const GeometryError&) {
          break;
        }
      }
      return report;
    }
  }
  report.match = true;
  return report;
}

VerificationSummary verify_all(const Multimysticum& m, int depth) {
  VerificationSummary summary;
  summary.depth = depth;
  for (const auto& spec : all_range_specs()) {
    summary.reports.push_back(range_coordinates(m, spec, depth));
    summary.passed += summary.reports.back().match;
    ++summary.total;
  }
  return summary;
}

// --- proof witnesses -----------------------------------------------------------

namespace {

Extended reflect_about_one(const Extended& z) {
  if (z.is_infinite()) return z;
  return Extended(Rational(2) - z.value());
}

// z -> z / (rz - 1)
Extended pencil_involution(const Extended& z, const Rational& r) {
  if (z.is_infinite()) return Extended(Rational(1) / r);
  const Rational den = r * z.value() - 1;
  if (den == 0) return Extended::infinity();
  return Extended(z.value() / den);
}

Witness alignment_witness(const Multimysticum& m, int depth) {
  Witness w{"alignment kirkman 2;04 ~ pascal 2;15", true, {}};
  const auto k = extract_range(m, RangeSpec::kirkman(KirkmanLabel::make(2, 0, 4)), depth);
  const auto p = extract_range(m, RangeSpec::pascal(PascalLabel::make(2, 1, 5)), depth);
  for (std::size_t c = 0; c < k.points.size(); ++c) {
    if (!incident(k.points[c], p.lines[c])) {
      w.passed = false;
      w.detail = k.names[c] + " not on " + p.names[c];
      return w;
    }
  }
  const auto a = range_coordinates(m, RangeSpec::kirkman(KirkmanLabel::make(2, 0, 4)), depth);
  const auto b = range_coordinates(m, RangeSpec::pascal(PascalLabel::make(2, 1, 5)), depth);
  w.passed = a.coordinates == b.coordinates;
  w.detail = std::to_string(k.points.size()) + " incident columns";
  if (!w.passed) w.detail += ", but coordinates differ";
  return w;
}

Witness ladd_involution_witness(const Multimysticum& m, int depth) {
  Witness w{"ladd involution z -> 2 - z", true, {}};
  int checked = 0;
  for (const auto& label : enumerate<LaddLabel>()) {
    const OrderedPairs o{label.first, label.second};
    const auto a = extract_range(m, RangeSpec::meeting(o), depth);
    const auto b = extract_range(m, RangeSpec::meeting(o.swapped()), depth);
    for (std::size_t k = 0; k < a.points.size(); ++k) {
      if (k == 1) continue;  // the Plücker-Ladd nodes differ
      const Extended za = cross_ratio_points(a.points[0], a.points[1], a.points[2], a.points[k]);
      const Extended zb = cross_ratio_points(a.points[0], a.points[1], a.points[2], b.points[k]);
      if (!(zb == reflect_about_one(za))) {
        w.passed = false;
        w.detail = to_string(label) + " index " + std::to_string(k) + ": " +
                   to_string(zb) + " != 2 - " + to_string(za);
        return w;
      }
    }
    ++checked;
  }
  w.detail = std::to_string(checked) + " Ladd lines";
  return w;
}

Witness linking_involution_witness(const Multimysticum& m, int depth) {
  Witness w{"linking involution z -> z/(3z - 1)", true, {}};
  int checked = 0;
  int sums = 0;
  for (const auto& label : enumerate<VeroneseNodeLabel>()) {
    const OrderedPairs o{label.first, label.second};
    const auto a = extract_range(m, RangeSpec::linking(o), depth);
    const auto b = extract_range(m, RangeSpec::linking(o.swapped()), depth);
    std::vector<Extended> za;
    for (std::size_t k = 0; k < a.lines.size(); ++k) {
      za.push_back(cross_ratio_lines(a.lines[0], a.lines[1], a.lines[2], a.lines[k]));
    }
    // 1/β_2m + 1/β_2m+1 = 3, with β_j at index j + 2.
    for (std::size_t j = 0; j + 3 < za.size(); j += 2) {
      const Extended& lo = za[j + 2];
      const Extended& hi = za[j + 3];
      if (lo.is_infinite() || hi.is_infinite() || lo.value() == 0 ||
          hi.value() == 0 || 1 / lo.value() + 1 / hi.value() != 3) {
        w.passed = false;
        w.detail = to_string(label) + ": reciprocal sum at m=" +
                   std::to_string(j / 2) + " is not 3";
        return w;
      }
      ++sums;
    }
    for (std::size_t k = 1; k < a.lines.size(); ++k) {
      const Extended zb = cross_ratio_lines(a.lines[0], a.lines[1], a.lines[2], b.lines[k]);
      if (!(zb == pencil_involution(za[k], Rational(3)))) {
        w.passed = false;
        w.detail = to_string(label) + " index " + std::to_string(k) +
                   ": involution fails";
        return w;
      }
    }
    ++checked;
  }
  w.detail = std::to_string(checked) + " Veronese nodes, " +
             std::to_string(sums) + " reciprocal sums equal to 3";
  return w;
}

Witness harmonic_witness(const Multimysticum& m) {
  Witness w{"harmonic quadruple through 01.45", true, {}};
  const BaseMysticum& base = m.base();
  const Point& center = base.ordinary.at(parse_label<OrdinaryLabel>("01.45"));
  const auto quadruple = [&](int x) {
    const auto k = KirkmanLabel::make(x, 2, 3);
    return std::array<Point, 4>{base.salmon.at(parse_label<SalmonLabel>("N 23")),
                                base.steiner.at(SteinerLabel::make(x, 2, 3)),
                                m.layer(0).kirkmans.at(k),
                                m.layer(1).kirkmans.at(k)};
  };
  const auto first = quadruple(0);
  const auto second = quadruple(1);
  std::array<Line, 4> rays_first{join(center, first[0]), join(center, first[1]),
                                 join(center, first[2]), join(center, first[3])};
  std::array<Line, 4> rays_second{join(center, second[0]), join(center, second[1]),
                                  join(center, second[2]), join(center, second[3])};
  const std::array<Line, 4> named{
      m.ladd_line(parse_label<LaddLabel>("L 01.45")),
      base.pascals.at(parse_label<PascalLabel>("P 1;45")),
      base.pascals.at(parse_label<PascalLabel>("P 0;45")),
      m.linking_line(parse_label<OrderedPairs>("01.23"), 0)};
  if (rays_first != named) {
    w.passed = false;
    w.detail = "rays from 01.45 are not L 01.45, P 1;45, P 0;45, 01(1).23(0)";
    return w;
  }
  const std::array<Line, 4> swapped{named[0], named[2], named[1], named[3]};
  if (rays_second != swapped) {
    w.passed = false;
    w.detail = "second quadruple does not swap the middle rays";
    return w;
  }
  const Extended beta = cross_ratio_points(first[0], first[1], first[2], first[3]);
  const Extended ray_beta = cross_ratio_lines(named[0], named[1], named[2], named[3]);
  const Extended swapped_beta =
      cross_ratio_lines(swapped[0], swapped[1], swapped[2], swapped[3]);
  const Extended half(Rational(1, 2));
  w.passed = beta == half && ray_beta == half && swapped_beta == half;
  w.detail = "cross-ratio " + to_string(beta) + ", swapped pencil " +
             to_string(swapped_beta);
  return w;
}

template <typename F>
Witness guarded_witness(const std::string& name, F&& f) {
  try {
    return f();
  } catch (const std::exception& e) {
    return {name, false, e.what()};
  }
}

}  // namespace

std::vector<Witness> proof_witnesses(const Multimysticum& m, int depth) {
  if (m.height() < 3 || depth < 3) {
    throw HeightNotBuilt("proof witnesses need height and depth >= 3");
  }
  return {
      guarded_witness("alignment", [&] { return alignment_witness(m, depth); }),
      guarded_witness("ladd involution", [&] { return ladd_involution_witness(m, depth); }),
      guarded_witness("linking involution",
                      [&] { return linking_involution_witness(m, depth); }),
      guarded_witness("harmonic quadruple", [&] { return harmonic_witness(m); }),
  };
}

}  // namespace mysticum
