// SPDX-License-Identifier: Apache-2.0
#include "mysticum/report.hpp"

#include <sstream>

namespace mysticum {

using nlohmann::json;

std::array<Extended, 6> parse_params(const std::string& text) {
  std::array<Extended, 6> params;
  std::stringstream in(text);
  std::string item;
  int n = 0;
  while (std::getline(in, item, ',')) {
    if (n == 6) throw std::invalid_argument("--params takes six values");
    params[n++] = parse_extended(item);
  }
  if (n != 6) throw std::invalid_argument("--params takes six values");
  return params;
}

std::array<Extended, 6> resolve_params(const RunConfig& cfg) {
  if (cfg.params) return *cfg.params;
  if (cfg.seed) return random_params(*cfg.seed);
  return default_fixture_params();
}

json config_json(const RunConfig& cfg, const std::array<Extended, 6>& params) {
  json params_text = json::array();
  for (const auto& p : params) params_text.push_back(to_string(p));
  return {
      {"params", params_text},
      {"seed", cfg.seed ? json(*cfg.seed) : json(nullptr)},
      {"height", cfg.max_height},
      {"depth", cfg.depth < 0 ? cfg.max_height : cfg.depth},
      {"format", cfg.format},
  };
}

json counts_json(const Multimysticum& m) {
  const BaseMysticum& b = m.base();
  json layers = json::array();
  for (const auto& layer : m.layers()) {
    layers.push_back({{"height", layer.height},
                      {"kirkmans", layer.kirkmans.size()},
                      {"pascals", layer.pascals.size()}});
  }
  json inter = json::array();
  for (const auto& il : m.interlayers()) {
    inter.push_back({{"lowerHeight", il.lower_height},
                     {"kind", il.is_linking() ? "linking" : "meeting"},
                     {"elements", il.is_linking() ? il.linking.size()
                                                  : il.meeting.size()}});
  }
  std::size_t pascals = 0;
  std::size_t kirkmans = 0;
  for (const auto& layer : m.layers()) {
    pascals += layer.pascals.size();
    kirkmans += layer.kirkmans.size();
  }
  return {
      {"pascal", pascals},
      {"kirkman", kirkmans},
      {"steiner", b.steiner.size()},
      {"cayley", b.cayley.size()},
      {"plucker", b.plucker.size()},
      {"salmon", b.salmon.size()},
      {"ordinary", b.ordinary.size()},
      {"ladd", m.ladd_lines().size()},
      {"veronese", m.veronese_nodes().size()},
      {"layers", layers},
      {"interlayers", inter},
  };
}

// --- elements ------------------------------------------------------------------

namespace {

template <typename Tag>
json coords_json(const Homogeneous<Tag>& h) {
  return json::array({to_string(h[0]), to_string(h[1]), to_string(h[2])});
}

template <typename Elem>
Elem coords_from(const json& j) {
  if (!j.is_array() || j.size() != 3) {
    throw std::invalid_argument("an element needs three coordinates");
  }
  RatVector3 v;
  for (int i = 0; i < 3; ++i) v[i] = parse_rational(j[i].get<std::string>());
  return Elem(v);
}

template <typename Label, typename Elem>
json map_json(const std::map<Label, Elem>& m) {
  json out = json::object();
  for (const auto& [label, elem] : m) out[to_string(label)] = coords_json(elem);
  return out;
}

template <typename Label, typename Elem>
std::map<Label, Elem> map_from(const json& j, const char* key) {
  if (!j.contains(key)) {
    throw std::invalid_argument(std::string("missing '") + key + "'");
  }
  std::map<Label, Elem> out;
  for (const auto& [text, coords] : j.at(key).items()) {
    out.emplace(parse_label<Label>(text), coords_from<Elem>(coords));
  }
  return out;
}

}  // namespace

json serialize(const Multimysticum& m) {
  const BaseMysticum& b = m.base();
  json sextuple = json::array();
  for (int i = 0; i < 6; ++i) {
    sextuple.push_back({{"letter", std::string(1, static_cast<char>('a' + i))},
                        {"param", to_string(b.sextuple.params()[i])},
                        {"point", coords_json(b.sextuple.points()[i])}});
  }
  json layers = json::array();
  for (const auto& layer : m.layers()) {
    layers.push_back({{"height", layer.height},
                      {"kirkmans", map_json(layer.kirkmans)},
                      {"pascals", map_json(layer.pascals)}});
  }
  json inter = json::array();
  for (const auto& il : m.interlayers()) {
    json elements = json::object();
    if (il.is_linking()) {
      for (const auto& [l, e] : il.linking) {
        elements[to_string(InterLabel{l, il.lower_height})] = coords_json(e);
      }
    } else {
      for (const auto& [l, e] : il.meeting) {
        elements[to_string(InterLabel{l, il.lower_height})] = coords_json(e);
      }
    }
    inter.push_back({{"lowerHeight", il.lower_height},
                     {"kind", il.is_linking() ? "linking" : "meeting"},
                     {"elements", elements}});
  }
  return {
      {"fixedPart",
       {{"sextuple", sextuple},
        {"steiner", map_json(b.steiner)},
        {"cayley", map_json(b.cayley)},
        {"plucker", map_json(b.plucker)},
        {"salmon", map_json(b.salmon)},
        {"ordinary", map_json(b.ordinary)},
        {"ladd", map_json(m.ladd_lines())},
        {"veronese", map_json(m.veronese_nodes())}}},
      {"layers", layers},
      {"interlayers", inter},
  };
}

Multimysticum deserialize(const json& doc) {
  try {
    const json& fixed = doc.at("fixedPart");
    std::array<Extended, 6> params;
    const json& sextuple = fixed.at("sextuple");
    if (!sextuple.is_array() || sextuple.size() != 6) {
      throw std::invalid_argument("sextuple needs six entries");
    }
    for (int i = 0; i < 6; ++i) {
      params[i] = parse_extended(sextuple[i].at("param").get<std::string>());
    }

    std::vector<Layer> layers;
    for (const auto& lj : doc.at("layers")) {
      layers.push_back({lj.at("height").get<int>(),
                        map_from<KirkmanLabel, Point>(lj, "kirkmans"),
                        map_from<PascalLabel, Line>(lj, "pascals")});
      if (layers.back().height != static_cast<int>(layers.size()) - 1) {
        throw std::invalid_argument("layers out of order");
      }
    }
    if (layers.empty()) throw std::invalid_argument("no layers");

    std::vector<InterLayer> inter;
    for (const auto& ij : doc.at("interlayers")) {
      InterLayer il;
      il.lower_height = ij.at("lowerHeight").get<int>();
      for (const auto& [text, coords] : ij.at("elements").items()) {
        const InterLabel label = parse_label<InterLabel>(text);
        if (label.lower_height != il.lower_height) {
          throw std::invalid_argument("inter-layer label at wrong height: " + text);
        }
        if (il.is_linking()) {
          il.linking.emplace(label.pairs, coords_from<Line>(coords));
        } else {
          il.meeting.emplace(label.pairs, coords_from<Point>(coords));
        }
      }
      inter.push_back(std::move(il));
    }

    BaseMysticum base{Sextuple(params),
                      layers.front().pascals,
                      layers.front().kirkmans,
                      map_from<SteinerLabel, Point>(fixed, "steiner"),
                      map_from<CayleyLabel, Line>(fixed, "cayley"),
                      map_from<PluckerLabel, Line>(fixed, "plucker"),
                      map_from<SalmonLabel, Point>(fixed, "salmon"),
                      map_from<OrdinaryLabel, Point>(fixed, "ordinary")};
    return Multimysticum::restore(std::move(base), std::move(layers),
                                  std::move(inter),
                                  map_from<LaddLabel, Line>(fixed, "ladd"),
                                  map_from<VeroneseNodeLabel, Point>(fixed, "veronese"));
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("malformed document: ") + e.what());
  }
}

// --- verification ------------------------------------------------------------

json ranges_json(const VerificationSummary& summary) {
  json out = json::array();
  for (const auto& r : summary.reports) {
    json coords = json::array();
    for (const auto& c : r.coordinates) coords.push_back(to_string(c));
    json entry = {{"spec", to_string(r.spec)},
                  {"carrier", carrier_name(r.spec)},
                  {"coordinates", coords},
                  {"match", r.match},
                  {"firstMismatch", nullptr}};
    if (r.first_mismatch) {
      entry["firstMismatch"] = {{"index", *r.first_mismatch},
                                {"expected", r.expected},
                                {"actual", r.actual}};
    }
    out.push_back(std::move(entry));
  }
  return out;
}

json witnesses_json(const std::vector<Witness>& witnesses) {
  json out = json::array();
  for (const auto& w : witnesses) {
    out.push_back({{"name", w.name}, {"passed", w.passed}, {"detail", w.detail}});
  }
  return out;
}

json verdict_json(const VerificationSummary& summary,
                  const std::vector<Witness>& witnesses) {
  int witnesses_passed = 0;
  for (const auto& w : witnesses) witnesses_passed += w.passed;
  json first_failure = nullptr;
  for (const auto& r : summary.reports) {
    if (!r.match) {
      first_failure = {{"spec", to_string(r.spec)},
                       {"index", *r.first_mismatch},
                       {"expected", r.expected},
                       {"actual", r.actual}};
      break;
    }
  }
  return {
      {"depth", summary.depth},
      {"rangesPassed", summary.passed},
      {"rangesTotal", summary.total},
      {"witnessesPassed", witnesses_passed},
      {"witnessesTotal", witnesses.size()},
      {"firstFailure", first_failure},
      {"ok", summary.all_passed() &&
                 witnesses_passed == static_cast<int>(witnesses.size())},
  };
}

}  // namespace mysticum
