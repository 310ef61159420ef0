// SPDX-License-Identifier: Apache-2.0
#include "mysticum/cli.hpp"

#include <chrono>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "mysticum/render.hpp"
#include "mysticum/report.hpp"

namespace mysticum {

using nlohmann::json;

namespace {

// Everything the subcommands share. Filled by CLI11.
struct Options {
  std::string params;
  bool random = false;
  std::optional<std::uint64_t> seed;
  int height = 8;
  std::optional<int> depth;
  std::string format = "json";
  std::string out;
  std::string labels = "pascal";
  std::string svg_size = "800x800";
  std::string input;
  int count = 12;
};

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
      .count();
}

RunConfig make_config(const Options& o) {
  RunConfig cfg;
  if (!o.params.empty() && o.random) {
    throw UsageError("--params and --random are exclusive");
  }
  if (o.seed && !o.random) throw UsageError("--seed needs --random");
  if (!o.params.empty()) cfg.params = parse_params(o.params);
  if (o.random) cfg.seed = o.seed.value_or(0);
  if (o.height < 0) throw UsageError("--height must be >= 0");
  if (o.depth && *o.depth < 0) throw UsageError("--depth must be >= 0");
  cfg.max_height = o.height;
  cfg.depth = o.depth.value_or(-1);
  cfg.format = o.format;
  return cfg;
}

// Builds and checks general position; degenerate input escapes as
// DegenerateSextuple.
Multimysticum build_checked(const std::array<Extended, 6>& params, int height,
                            GeneralPositionReport& gp) {
  BaseMysticum base = build_base(Sextuple(params));
  gp = validate_general_position(base);
  if (!gp.ok) {
    throw DegenerateSextuple(gp.failing_step,
                             gp.issues.empty() ? "not in general position"
                                               : gp.issues.front());
  }
  Multimysticum m(std::move(base));
  while (m.height() < height) m.elevate();
  return m;
}

json general_position_json(const GeneralPositionReport& gp) {
  return {{"ok", gp.ok},
          {"pairsScanned", gp.pairs_scanned},
          {"incidencesFound", gp.incidences_found},
          {"incidencesExpected", gp.incidences_expected}};
}

std::string params_text(const std::array<Extended, 6>& params) {
  std::string s;
  for (const auto& p : params) s += (s.empty() ? "" : " ") + to_string(p);
  return s;
}

template <typename Map>
void text_elements(std::ostream& os, const Map& map, const std::string& suffix = "") {
  for (const auto& [label, elem] : map) {
    os << "  " << to_string(label) << suffix << ' ' << to_string(elem) << '\n';
  }
}

void emit(const Options& o, const std::string& body, std::ostream& out) {
  if (o.out.empty()) {
    out << body;
    return;
  }
  std::ofstream file(o.out, std::ios::binary);
  if (!file) throw UsageError("cannot write '" + o.out + "'");
  file << body;
}

std::string json_text(const json& doc) { return doc.dump(2) + "\n"; }

// --- build ----------------------------------------------------------------------

int cmd_build(const Options& o, std::ostream& out) {
  const RunConfig cfg = make_config(o);
  const auto params = resolve_params(cfg);
  const auto start = std::chrono::steady_clock::now();
  GeneralPositionReport gp;
  const Multimysticum m = build_checked(params, cfg.max_height, gp);
  const double elapsed = seconds_since(start);

  if (cfg.format == "json") {
    json doc = serialize(m);
    doc["config"] = config_json(cfg, params);
    doc["counts"] = counts_json(m);
    doc["verdict"] = {{"status", "built"},
                      {"height", m.height()},
                      {"generalPosition", general_position_json(gp)}};
    doc["timing"] = {{"buildSeconds", elapsed}};
    emit(o, json_text(doc), out);
    return kExitOk;
  }

  std::ostringstream os;
  const BaseMysticum& b = m.base();
  os << "params: " << params_text(params) << '\n'
     << "height: " << m.height() << '\n'
     << "general position: ok, " << gp.incidences_found << '/'
     << gp.incidences_expected << " incidences\n";
  os << "sextuple:\n";
  for (int i = 0; i < 6; ++i) {
    os << "  " << static_cast<char>('a' + i) << ' ' << to_string(b.sextuple.params()[i])
       << ' ' << to_string(b.sextuple.points()[i]) << '\n';
  }
  os << "steiner:\n";
  text_elements(os, b.steiner);
  os << "cayley:\n";
  text_elements(os, b.cayley);
  os << "plucker:\n";
  text_elements(os, b.plucker);
  os << "salmon:\n";
  text_elements(os, b.salmon);
  os << "ordinary:\n";
  text_elements(os, b.ordinary);
  os << "ladd:\n";
  text_elements(os, m.ladd_lines());
  os << "veronese:\n";
  text_elements(os, m.veronese_nodes());
  for (const auto& layer : m.layers()) {
    const std::string suffix = "^(" + std::to_string(layer.height) + ")";
    os << "layer " << layer.height << ":\n";
    text_elements(os, layer.kirkmans, suffix);
    text_elements(os, layer.pascals, suffix);
  }
  for (const auto& il : m.interlayers()) {
    os << "interlayer " << il.lower_height
       << (il.is_linking() ? " (linking lines):\n" : " (meeting points):\n");
    if (il.is_linking()) {
      for (const auto& [l, e] : il.linking) {
        os << "  " << to_string(InterLabel{l, il.lower_height}) << ' ' << to_string(e) << '\n';
      }
    } else {
      for (const auto& [l, e] : il.meeting) {
        os << "  " << to_string(InterLabel{l, il.lower_height}) << ' ' << to_string(e) << '\n';
      }
    }
  }
  os << "timing: build " << std::fixed << std::setprecision(3) << elapsed << " s\n";
  emit(o, os.str(), out);
  return kExitOk;
}

// --- verify ---------------------------------------------------------------------

int cmd_verify(const Options& o, std::ostream& out) {
  RunConfig cfg;
  std::array<Extended, 6> params;
  std::optional<Multimysticum> m;
  const auto start = std::chrono::steady_clock::now();
  json general_position = nullptr;

  if (!o.input.empty()) {
    if (!o.params.empty() || o.random) {
      throw UsageError("--input excludes --params and --random");
    }
    std::ifstream file(o.input);
    if (!file) throw UsageError("cannot read '" + o.input + "'");
    json doc;
    try {
      doc = json::parse(file);
    } catch (const json::exception& e) {
      throw UsageError(std::string("'") + o.input + "' is not JSON: " + e.what());
    }
    m.emplace(deserialize(doc));
    params = m->base().sextuple.params();
    cfg.params = params;
    cfg.max_height = m->height();
    cfg.depth = o.depth.value_or(m->height());
    cfg.format = o.format;
    if (cfg.depth > m->height()) {
      throw HeightNotBuilt("--depth " + std::to_string(cfg.depth) +
                           " exceeds the stored height " +
                           std::to_string(m->height()));
    }
  } else {
    cfg = make_config(o);
    if (cfg.depth < 0) cfg.depth = cfg.max_height;
    params = resolve_params(cfg);
    // Ranges need layers up to the depth, the witnesses up to height 3.
    cfg.max_height = std::max({cfg.max_height, cfg.depth, 3});
    GeneralPositionReport gp;
    m.emplace(build_checked(params, cfg.max_height, gp));
    general_position = general_position_json(gp);
  }
  const double build_seconds = seconds_since(start);

  const auto verify_start = std::chrono::steady_clock::now();
  const VerificationSummary summary = verify_all(*m, cfg.depth);
  std::vector<Witness> witnesses;
  const bool witnesses_run = m->height() >= 3;
  if (witnesses_run) witnesses = proof_witnesses(*m, std::max(cfg.depth, 3));
  const double verify_seconds = seconds_since(verify_start);

  json verdict = verdict_json(summary, witnesses);
  verdict["witnessesRun"] = witnesses_run;
  const bool ok = verdict["ok"].get<bool>();

  if (cfg.format == "json") {
    json doc = {{"config", config_json(cfg, params)},
                {"counts", counts_json(*m)},
                {"generalPosition", general_position},
                {"ranges", ranges_json(summary)},
                {"witnesses", witnesses_json(witnesses)},
                {"verdict", verdict},
                {"timing", {{"buildSeconds", build_seconds},
                            {"verifySeconds", verify_seconds}}}};
    if (!o.input.empty()) doc["config"]["input"] = o.input;
    emit(o, json_text(doc), out);
  } else {
    std::ostringstream os;
    os << "params: " << params_text(params) << '\n'
       << "height: " << m->height() << '\n'
       << "depth: " << summary.depth << '\n';
    for (const auto& r : summary.reports) {
      os << to_string(r.spec) << " on " << carrier_name(r.spec) << ':';
      for (const auto& c : r.coordinates) os << ' ' << to_string(c);
      if (r.match) {
        os << " ok\n";
      } else {
        os << " MISMATCH at " << *r.first_mismatch << ": expected " << r.expected
           << ", got " << r.actual << '\n';
      }
    }
    os << "ranges: " << summary.passed << '/' << summary.total << '\n';
    for (const auto& w : witnesses) {
      os << "witness " << w.name << ": " << (w.passed ? "pass" : "FAIL") << " ("
         << w.detail << ")\n";
    }
    if (!witnesses_run) os << "witnesses: not run, height below 3\n";
    os << "verdict: " << (ok ? "ok" : "FAILED") << '\n'
       << "timing: build " << std::fixed << std::setprecision(3) << build_seconds
       << " s, verify " << verify_seconds << " s\n";
    emit(o, os.str(), out);
  }
  return ok ? kExitOk : kExitVerificationFailed;
}

// --- sequence -------------------------------------------------------------------

int cmd_sequence(const Options& o, std::ostream& out) {
  if (o.count < 0) throw UsageError("count must be >= 0");
  const auto terms = veronese_sequence(o.count);
  if (o.format == "json") {
    json list = json::array();
    for (const auto& t : terms) list.push_back(to_string(t));
    emit(o, json_text({{"count", o.count}, {"terms", list}}), out);
  } else {
    std::string line;
    for (const auto& t : terms) line += (line.empty() ? "" : ", ") + to_string(t);
    emit(o, line + "\n", out);
  }
  return kExitOk;
}

// --- render ---------------------------------------------------------------------

int cmd_render(const Options& o, std::ostream& out) {
  const RunConfig cfg = make_config(o);
  RenderOptions ro;
  ro.labels = o.labels;
  const auto x = o.svg_size.find('x');
  try {
    if (x == std::string::npos) throw std::invalid_argument("");
    std::size_t used = 0;
    ro.width = std::stoi(o.svg_size.substr(0, x), &used);
    if (used != x) throw std::invalid_argument("");
    ro.height = std::stoi(o.svg_size.substr(x + 1), &used);
    if (used != o.svg_size.size() - x - 1) throw std::invalid_argument("");
  } catch (const std::logic_error&) {
    throw UsageError("--svg-size takes WxH, e.g. 800x600");
  }
  GeneralPositionReport gp;
  const Multimysticum m = build_checked(resolve_params(cfg), cfg.max_height, gp);
  emit(o, render_svg(m, ro), out);
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Exact Hexagrammum Mysticum and Veronese multimysticum engine",
               "mysticum"};
  app.require_subcommand(1);
  Options o;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--params", o.params,
                    "six conic parameters a,b,c,d,e,f (rationals or inf)");
    sub->add_flag("--random", o.random, "draw the parameters from --seed");
    sub->add_option("--seed", o.seed, "seed for --random");
    sub->add_option("--height", o.height, "build layers 0..N");
    sub->add_option("--out", o.out, "write the report here instead of stdout");
  };
  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", o.format, "report format")
        ->check(CLI::IsMember({"json", "text"}));
  };

  CLI::App* build = app.add_subcommand("build", "construct a multimysticum");
  add_common(build);
  add_format(build);

  CLI::App* verify = app.add_subcommand("verify", "check all 300 ranges");
  add_common(verify);
  add_format(verify);
  verify->add_option("--depth", o.depth, "range depth (default: height)");
  verify->add_option("--input", o.input, "verify a stored build report");

  CLI::App* sequence = app.add_subcommand("sequence", "print the range sequence");
  sequence->add_option("count", o.count, "number of terms")->required();
  sequence->add_option("--out", o.out, "write here instead of stdout");
  add_format(sequence);

  CLI::App* render = app.add_subcommand("render", "draw selected elements as SVG");
  add_common(render);
  render->add_option("--labels", o.labels, "selection, e.g. pascal@2,steiner");
  render->add_option("--svg-size", o.svg_size, "WxH");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "mysticum: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (*build) return cmd_build(o, out);
    if (*verify) return cmd_verify(o, out);
    if (*sequence) return cmd_sequence(o, out);
    return cmd_render(o, out);
  } catch (const DegenerateSextuple& e) {
    err << "mysticum: degenerate sextuple at " << e.what() << '\n';
    return kExitDegenerate;
  } catch (const MutationDegeneracy& e) {
    err << "mysticum: degenerate mutation: " << e.what() << '\n';
    return kExitDegenerate;
  } catch (const GeometryError& e) {
    err << "mysticum: degenerate configuration: " << e.what() << '\n';
    return kExitDegenerate;
  } catch (const std::logic_error& e) {
    // Bad parameters, labels, heights, parities, sizes.
    err << "mysticum: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "mysticum: " << e.what() << '\n';
    return kExitUsage;
  }
}

}  // namespace mysticum
