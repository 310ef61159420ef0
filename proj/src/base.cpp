// SPDX-License-Identifier: Apache-2.0
#include "mysticum/base.hpp"

#include <random>
#include <set>
#include <utility>

namespace mysticum {

namespace {

std::array<Point, 6> conic_points(const std::array<Extended, 6>& params) {
  return {conic_point(params[0]), conic_point(params[1]),
          conic_point(params[2]), conic_point(params[3]),
          conic_point(params[4]), conic_point(params[5])};
}

// Runs one construction step, turning geometric failures into a named
// degeneracy.
template <typename F>
auto step(const std::string& name, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const GeometryError& e) {
    throw DegenerateSextuple(name, e.what());
  }
}

Line chord(const Sextuple& s, Symbol a, Symbol b) {
  return join(s.point(a), s.point(b));
}

template <typename L, typename E>
const E& at(const std::map<L, E>& m, const L& label) {
  return m.at(label);
}

// Common point of lines[0], lines[1], verified on the rest.
Point concurrent_point(const std::vector<Line>& lines, const std::string& name) {
  const Point p = step(name, [&] { return meet(lines[0], lines[1]); });
  for (std::size_t k = 2; k < lines.size(); ++k) {
    if (!incident(p, lines[k])) {
      throw DegenerateSextuple(name, "defining lines are not concurrent");
    }
  }
  return p;
}

Line collinear_line(const std::vector<Point>& points, const std::string& name) {
  const Line l = step(name, [&] { return join(points[0], points[1]); });
  for (std::size_t k = 2; k < points.size(); ++k) {
    if (!incident(points[k], l)) {
      throw DegenerateSextuple(name, "defining points are not collinear");
    }
  }
  return l;
}

std::vector<SymbolPair> pairs_in(const std::vector<Symbol>& s) {
  std::vector<SymbolPair> out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    for (std::size_t j = i + 1; j < s.size(); ++j) {
      out.push_back(SymbolPair::make(s[i], s[j]));
    }
  }
  return out;
}

}  // namespace

Sextuple::Sextuple(const std::array<Extended, 6>& params)
    : params_(params), points_(conic_points(params)) {
  for (int i = 0; i < 6; ++i) {
    for (int j = i + 1; j < 6; ++j) {
      if (params_[i] == params_[j]) {
        throw DegenerateSextuple(
            "sextuple", std::string("parameters ") +
                            static_cast<char>('a' + i) + " and " +
                            static_cast<char>('a' + j) + " coincide");
      }
    }
  }
}

// --- documented incidences -----------------------------------------------------

std::vector<PascalLabel> pascals_through(const KirkmanLabel& k) {
  std::vector<PascalLabel> out;
  for (const auto& p : pairs_in(complement({k.x, k.pair.lo, k.pair.hi}))) {
    out.push_back({k.x, p});
  }
  return out;
}

std::vector<KirkmanLabel> kirkmans_on(const PascalLabel& l) {
  std::vector<KirkmanLabel> out;
  for (const auto& p : pairs_in(complement({l.x, l.pair.lo, l.pair.hi}))) {
    out.push_back({l.x, p});
  }
  return out;
}

std::array<PascalLabel, 3> pascals_through(const SteinerLabel& n) {
  const auto r = complement({n.s[0], n.s[1], n.s[2]});
  return {PascalLabel::make(r[0], r[1], r[2]),
          PascalLabel::make(r[1], r[0], r[2]),
          PascalLabel::make(r[2], r[0], r[1])};
}

std::array<KirkmanLabel, 3> kirkmans_on(const CayleyLabel& l) {
  const auto r = complement({l.s[0], l.s[1], l.s[2]});
  return {KirkmanLabel::make(r[0], r[1], r[2]),
          KirkmanLabel::make(r[1], r[0], r[2]),
          KirkmanLabel::make(r[2], r[0], r[1])};
}

std::array<SteinerLabel, 4> steiners_on(const PluckerLabel& l) {
  const auto r = complement({l.pair.lo, l.pair.hi});
  return {SteinerLabel::make(r[0], r[1], r[2]),
          SteinerLabel::make(r[0], r[1], r[3]),
          SteinerLabel::make(r[0], r[2], r[3]),
          SteinerLabel::make(r[1], r[2], r[3])};
}

std::array<CayleyLabel, 4> cayleys_through(const SalmonLabel& n) {
  const auto r = complement({n.pair.lo, n.pair.hi});
  return {CayleyLabel::make(r[0], r[1], r[2]),
          CayleyLabel::make(r[0], r[1], r[3]),
          CayleyLabel::make(r[0], r[2], r[3]),
          CayleyLabel::make(r[1], r[2], r[3])};
}

std::array<PascalLabel, 4> pascals_through(const OrdinaryLabel& o) {
  return {PascalLabel{o.first.lo, o.second}, PascalLabel{o.first.hi, o.second},
          PascalLabel{o.second.lo, o.first},
          PascalLabel{o.second.hi, o.first}};
}

CayleyLabel cayley_carrying(const KirkmanLabel& k) {
  const auto r = complement_triple(k.x, k.pair);
  return CayleyLabel::make(r[0], r[1], r[2]);
}

SteinerLabel steiner_on(const PascalLabel& p) {
  const auto r = complement_triple(p.x, p.pair);
  return SteinerLabel::make(r[0], r[1], r[2]);
}

// --- construction --------------------------------------------------------------

Line build_pascal(const Sextuple& s, const Hexagon& w) {
  const std::string name = "pascal " + to_string(w);
  const auto side_meet = [&](int i, int j) {
    return step(name, [&] {
      return meet(chord(s, w[i], w[(i + 1) % 6]), chord(s, w[j], w[(j + 1) % 6]));
    });
  };
  const Point p = side_meet(0, 3);
  const Point q = side_meet(1, 4);
  const Point r = side_meet(2, 5);
  const Line line = step(name, [&] { return join(p, q); });
  if (!incident(r, line)) {
    throw PascalViolation("opposite sides of " + to_string(w) +
                          " do not meet on a line");
  }
  return line;
}

Point ordinary_meeting_point(const BaseMysticum& hm, const OrdinaryLabel& l) {
  const std::string name = "ordinary " + to_string(l);
  const auto chords = chords_of(l);
  const Point p = step(name, [&] {
    return meet(chord(hm.sextuple, chords[0].first, chords[0].second),
                chord(hm.sextuple, chords[1].first, chords[1].second));
  });
  for (const auto& pascal : pascals_through(l)) {
    if (!incident(p, at(hm.pascals, pascal))) {
      throw DegenerateSextuple(name, "misses " + to_string(pascal));
    }
  }
  return p;
}

BaseMysticum build_base(const Sextuple& s) {
  BaseMysticum hm{s, {}, {}, {}, {}, {}, {}, {}};

  for (const auto& label : enumerate<PascalLabel>()) {
    hm.pascals.emplace(label,
                       build_pascal(s, hexagon_of_pascal_label(label)));
  }
  for (const auto& label : enumerate<KirkmanLabel>()) {
    std::vector<Line> lines;
    for (const auto& p : pascals_through(label)) lines.push_back(hm.pascals.at(p));
    hm.kirkmans.emplace(label, concurrent_point(lines, to_string(label)));
  }
  for (const auto& label : enumerate<SteinerLabel>()) {
    std::vector<Line> lines;
    for (const auto& p : pascals_through(label)) lines.push_back(hm.pascals.at(p));
    hm.steiner.emplace(label, concurrent_point(lines, to_string(label)));
  }
  for (const auto& label : enumerate<CayleyLabel>()) {
    std::vector<Point> points;
    for (const auto& k : kirkmans_on(label)) points.push_back(hm.kirkmans.at(k));
    hm.cayley.emplace(label, collinear_line(points, to_string(label)));
  }
  for (const auto& label : enumerate<PluckerLabel>()) {
    std::vector<Point> points;
    for (const auto& n : steiners_on(label)) points.push_back(hm.steiner.at(n));
    hm.plucker.emplace(label, collinear_line(points, to_string(label)));
  }
  for (const auto& label : enumerate<SalmonLabel>()) {
    std::vector<Line> lines;
    for (const auto& l : cayleys_through(label)) lines.push_back(hm.cayley.at(l));
    hm.salmon.emplace(label, concurrent_point(lines, to_string(label)));
  }
  for (const auto& label : enumerate<OrdinaryLabel>()) {
    hm.ordinary.emplace(label, ordinary_meeting_point(hm, label));
  }
  return hm;
}

// --- general position ------------------------------------------------------------

namespace {

struct Named {
  std::string name;
  const IntVector3* coords;
};

template <typename Map>
void collect(const Map& m, std::vector<Named>& out) {
  for (const auto& [label, elem] : m) out.push_back({to_string(label), &elem.coords()});
}

std::set<std::pair<std::string, std::string>> documented_incidences() {
  std::set<std::pair<std::string, std::string>> s;
  for (const auto& k : enumerate<KirkmanLabel>()) {
    for (const auto& p : pascals_through(k)) s.emplace(to_string(k), to_string(p));
    s.emplace(to_string(k), to_string(cayley_carrying(k)));
  }
  for (const auto& n : enumerate<SteinerLabel>()) {
    for (const auto& p : pascals_through(n)) s.emplace(to_string(n), to_string(p));
    const auto r = complement({n.s[0], n.s[1], n.s[2]});
    s.emplace(to_string(n), to_string(CayleyLabel::make(r[0], r[1], r[2])));
  }
  for (const auto& l : enumerate<PluckerLabel>()) {
    for (const auto& n : steiners_on(l)) s.emplace(to_string(n), to_string(l));
  }
  for (const auto& n : enumerate<SalmonLabel>()) {
    for (const auto& l : cayleys_through(n)) s.emplace(to_string(n), to_string(l));
  }
  for (const auto& o : enumerate<OrdinaryLabel>()) {
    for (const auto& p : pascals_through(o)) s.emplace(to_string(o), to_string(p));
  }
  return s;
}

}  // namespace

GeneralPositionReport validate_general_position(const BaseMysticum& hm) {
  GeneralPositionReport report;
  const auto fail = [&](const std::string& step, const std::string& issue) {
    if (report.ok) report.failing_step = step;
    report.ok = false;
    report.issues.push_back(issue);
  };

  std::vector<Named> points;
  std::vector<Named> lines;
  collect(hm.kirkmans, points);
  collect(hm.steiner, points);
  collect(hm.salmon, points);
  collect(hm.ordinary, points);
  collect(hm.pascals, lines);
  collect(hm.cayley, lines);
  collect(hm.plucker, lines);

  const auto distinct = [&](const std::vector<Named>& elems, const char* what) {
    std::map<IntVector3, std::string,
             bool (*)(const IntVector3&, const IntVector3&)>
        seen([](const IntVector3& a, const IntVector3& b) {
          return std::lexicographical_compare(a.begin(), a.end(), b.begin(),
                                              b.end());
        });
    for (const auto& e : elems) {
      const auto [it, fresh] = seen.emplace(*e.coords, e.name);
      if (!fresh) {
        fail(std::string("distinct ") + what,
             e.name + " coincides with " + it->second);
      }
    }
  };
  distinct(points, "points");
  distinct(lines, "lines");

  const auto expected = documented_incidences();
  report.incidences_expected = expected.size();
  for (const auto& p : points) {
    for (const auto& l : lines) {
      ++report.pairs_scanned;
      const bool on = p.coords->dot(*l.coords) == 0;
      const bool documented = expected.count({p.name, l.name}) > 0;
      report.incidences_found += on;
      if (on && !documented) {
        fail("unexpected incidence", p.name + " lies on " + l.name);
      } else if (!on && documented) {
        fail("missing incidence", p.name + " misses " + l.name);
      }
    }
  }
  return report;
}

GeneralPositionReport validate_general_position(const Sextuple& s) {
  try {
    return validate_general_position(build_base(s));
  } catch (const DegenerateSextuple& e) {
    GeneralPositionReport report;
    report.ok = false;
    report.failing_step = e.step();
    report.issues.push_back(e.what());
    return report;
  }
}

std::array<Extended, 6> default_fixture_params() {
  constexpr int kBound = 32;
  std::array<int, 6> t{0, 1, 2, 3, 4, 5};
  while (true) {
    std::array<Extended, 6> params;
    for (int i = 0; i < 6; ++i) params[i] = Extended(t[i]);
    if (validate_general_position(Sextuple(params)).ok) return params;
    // Next strictly increasing tuple below kBound in lexicographic order.
    int i = 5;
    while (i >= 0 && t[i] == kBound - 6 + i) --i;
    if (i < 0) throw std::logic_error("no integer sextuple in general position");
    ++t[i];
    for (int j = i + 1; j < 6; ++j) t[j] = t[j - 1] + 1;
  }
}

std::array<Extended, 6> random_params(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> num(-20, 20);
  std::uniform_int_distribution<long> den(1, 20);
  std::array<Extended, 6> params;
  int filled = 0;
  while (filled < 6) {
    const Extended candidate(Rational(num(rng), den(rng)));
    bool fresh = true;
    for (int i = 0; i < filled; ++i) fresh = fresh && !(params[i] == candidate);
    if (fresh) params[filled++] = candidate;
  }
  return params;
}

}  // namespace mysticum
