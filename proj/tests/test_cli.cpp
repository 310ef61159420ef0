// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "mysticum/cli.hpp"
#include "mysticum/report.hpp"
#include "support.hpp"

using namespace mysticum;
using nlohmann::json;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

json without_timing(const std::string& text) {
  json doc = json::parse(text);
  doc.erase("timing");
  return doc;
}

std::filesystem::path temp(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("mysticum_test_" + name);
}

std::size_t count(const std::string& haystack, const std::string& needle) {
  std::size_t n = 0;
  for (auto at = haystack.find(needle); at != std::string::npos;
       at = haystack.find(needle, at + 1)) {
    ++n;
  }
  return n;
}

}  // namespace

TEST_CASE("sequence command") {
  auto r = run({"sequence", "12", "--format", "text"});
  CHECK(r.code == 0);
  CHECK(r.out == "inf, 0, 1, 1/2, 3/2, 3/7, 11/7, 11/26, 41/26, 41/97, 153/97, 153/362\n");
  CHECK(run({"sequence", "4", "--format", "text"}).out == "inf, 0, 1, 1/2\n");
  r = run({"sequence", "0"});
  CHECK(r.code == 0);
  CHECK(json::parse(r.out)["terms"] == json::array());
  r = run({"sequence", "3"});
  CHECK(json::parse(r.out)["terms"] == json({"inf", "0", "1"}));
  CHECK(run({"sequence", "-1"}).code == kExitUsage);
}

TEST_CASE("usage errors") {
  CHECK(run({}).code == kExitUsage);
  CHECK(run({"frobnicate"}).code == kExitUsage);
  CHECK(run({"build", "--params", "0,1,2"}).code == kExitUsage);
  CHECK(run({"build", "--params", "0,1,2,3,4,x"}).code == kExitUsage);
  CHECK(run({"build", "--params", "0,1,2,3,4,5/0"}).code == kExitUsage);
  CHECK(run({"build", "--height", "-1"}).code == kExitUsage);
  CHECK(run({"build", "--format", "xml"}).code == kExitUsage);
  CHECK(run({"build", "--seed", "3"}).code == kExitUsage);
  CHECK(run({"build", "--random", "--params", "0,1,2,3,5,14"}).code == kExitUsage);
  CHECK(run({"verify", "--input", temp("missing.json").string()}).code == kExitUsage);
}

TEST_CASE("degenerate input") {
  auto r = run({"build", "--params", "0,0,1,2,3,4"});
  CHECK(r.code == kExitDegenerate);
  CHECK(r.err.find("sextuple") != std::string::npos);
  r = run({"build", "--params", "0,1,2,3,4,5", "--height", "2"});
  CHECK(r.code == kExitDegenerate);
  CHECK(r.err.find("coincides") != std::string::npos);
  CHECK(run({"verify", "--params", "0,1,2,3,4,inf"}).code == kExitDegenerate);
}

TEST_CASE("build report") {
  auto r = run({"build", "--params", "-5,-2,17/8,-17/10,1/2,inf", "--height", "4"});
  REQUIRE(r.code == 0);
  const json doc = json::parse(r.out);
  CHECK(doc["counts"]["pascal"] == 300);
  CHECK(doc["layers"].size() == 5);
  CHECK(doc["interlayers"].size() == 5);
  CHECK(doc["config"]["params"][5] == "inf");
  CHECK(doc["fixedPart"]["sextuple"][5]["point"] == json({"1", "0", "0"}));
  CHECK(doc["layers"][4]["pascals"].size() == 60);
  CHECK(doc["layers"][0]["kirkmans"].contains("K 2;04"));
  CHECK(doc["interlayers"][1]["elements"].contains("12(2).34(1)"));
  CHECK(doc.contains("timing"));

  r = run({"build", "--height", "1", "--format", "text"});
  CHECK(r.code == 0);
  CHECK(r.out.find("  P 2;04^(1) [") != std::string::npos);
  CHECK(r.out.find("  N 12.34 (") != std::string::npos);
}

TEST_CASE("reports are deterministic") {
  const std::vector<std::string> build{"build", "--random", "--seed", "7", "--height", "2"};
  const auto a = run(build), b = run(build);
  REQUIRE(a.code == 0);
  CHECK(without_timing(a.out).dump() == without_timing(b.out).dump());
  CHECK(json::parse(a.out)["config"]["seed"] == 7);

  const std::vector<std::string> verify{"verify", "--random", "--seed", "4", "--height", "4"};
  const auto c = run(verify), d = run(verify);
  REQUIRE(c.code == 0);
  CHECK(without_timing(c.out).dump() == without_timing(d.out).dump());

  const auto e = run({"verify", "--height", "3", "--format", "text"});
  const auto f = run({"verify", "--height", "3", "--format", "text"});
  auto strip = [](const std::string& s) { return s.substr(0, s.rfind("timing:")); };
  CHECK(strip(e.out) == strip(f.out));
}

TEST_CASE("verify command") {
  auto r = run({"verify", "--height", "8"});
  REQUIRE(r.code == 0);
  const json doc = json::parse(r.out);
  CHECK(doc["verdict"]["rangesPassed"] == 300);
  CHECK(doc["verdict"]["witnessesPassed"] == 4);
  CHECK(doc["verdict"]["ok"] == true);
  CHECK(doc["ranges"].size() == 300);
  CHECK(doc["ranges"][0]["coordinates"].size() == 11);
  for (const char* key : {"config", "counts", "ranges", "witnesses", "verdict", "timing"}) {
    CHECK(doc.contains(key));
  }

  r = run({"verify", "--depth", "0", "--format", "text"});
  CHECK(r.code == 0);
  CHECK(r.out.find("ranges: 300/300") != std::string::npos);
}

TEST_CASE("round trip through JSON") {
  const auto path = temp("roundtrip.json");
  REQUIRE(run({"build", "--random", "--seed", "5", "--height", "5", "--out", path.string()}).code == 0);
  std::ifstream in(path);
  const json stored = json::parse(in);
  const Multimysticum loaded = deserialize(stored);
  const Multimysticum direct = Multimysticum::build(Sextuple(random_params(5)), 5);
  CHECK(serialize(loaded) == serialize(direct));

  const VerificationSummary a = verify_all(loaded, 5);
  const VerificationSummary b = verify_all(direct, 5);
  CHECK(ranges_json(a) == ranges_json(b));
  CHECK(a.passed == 300);

  const auto from_file = run({"verify", "--input", path.string()});
  const auto fresh = run({"verify", "--random", "--seed", "5", "--height", "5"});
  REQUIRE(from_file.code == 0);
  CHECK(json::parse(from_file.out)["ranges"] == json::parse(fresh.out)["ranges"]);
  CHECK(json::parse(from_file.out)["witnesses"] == json::parse(fresh.out)["witnesses"]);
  CHECK(run({"verify", "--input", path.string(), "--depth", "6"}).code == kExitUsage);
  std::filesystem::remove(path);
}

TEST_CASE("a perturbed element fails verification") {
  const auto good = temp("good.json"), bad = temp("bad.json");
  REQUIRE(run({"build", "--height", "4", "--out", good.string()}).code == 0);
  json doc = json::parse(std::ifstream(good));
  auto& k = doc["layers"][3]["kirkmans"]["K 0;12"];
  k[0] = (Integer(k[0].get<std::string>()) + 1).str();
  std::ofstream(bad) << doc.dump();

  const auto r = run({"verify", "--input", bad.string()});
  CHECK(r.code == kExitVerificationFailed);
  const json report = json::parse(r.out);
  CHECK(report["verdict"]["ok"] == false);
  CHECK(report["verdict"]["rangesPassed"] == 299);
  CHECK(report["verdict"]["firstFailure"]["spec"] == "kirkman 0;12");
  CHECK(report["verdict"]["firstFailure"]["index"] == 5);
  CHECK(report["verdict"]["firstFailure"]["expected"] == "3/7");

  // A changed coordinate of a Ladd line breaks a whole meeting range frame.
  json doc2 = json::parse(std::ifstream(good));
  doc2["fixedPart"]["ladd"]["L 12.34"][2] = "12345";
  std::ofstream(bad) << doc2.dump();
  CHECK(run({"verify", "--input", bad.string()}).code == kExitVerificationFailed);

  std::ofstream(bad) << "{\"layers\": 3}";
  CHECK(run({"verify", "--input", bad.string()}).code == kExitUsage);
  std::filesystem::remove(good);
  std::filesystem::remove(bad);
}

TEST_CASE("render command") {
  auto r = run({"render", "--height", "0", "--labels", "pascal"});
  REQUIRE(r.code == 0);
  CHECK(r.out.rfind("<?xml", 0) == 0);
  CHECK(r.out.find("<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\"") != std::string::npos);
  CHECK(count(r.out, "<line ") == 60);
  CHECK(count(r.out, "class=\"conic\"") == 1);

  r = run({"render", "--height", "3", "--labels", "range:kirkman 3;05", "--svg-size", "640x480"});
  REQUIRE(r.code == 0);
  CHECK(r.out.find("width=\"640\" height=\"480\"") != std::string::npos);
  CHECK(count(r.out, "<line ") == 1);
  CHECK(r.out.find("<title>L 124</title>") != std::string::npos);
  CHECK(r.out.find("#2a8c3c") != std::string::npos);
  CHECK(r.out.find("#2456c4") != std::string::npos);

  r = run({"render", "--height", "2", "--labels", "kirkman@*,steiner,linking@0"});
  CHECK(r.code == 0);
  CHECK(count(r.out, "<line ") == 90);

  CHECK(run({"render", "--labels", ""}).code == kExitUsage);
  CHECK(run({"render", "--labels", "hexagon"}).code == kExitUsage);
  CHECK(run({"render", "--height", "1", "--labels", "pascal@4"}).code == kExitUsage);
  CHECK(run({"render", "--labels", "meeting@0"}).code == kExitUsage);
  CHECK(run({"render", "--svg-size", "100"}).code == kExitUsage);
}

TEST_CASE("installed binary exit codes") {
  const std::string bin = MYSTICUM_CLI_PATH;
  auto status = [&](const std::string& args) {
    const int raw = std::system((bin + " " + args + " > /dev/null 2>&1").c_str());
    return WEXITSTATUS(raw);
  };
  CHECK(status("sequence 5") == 0);
  CHECK(status("build --params 0,0,1,2,3,4") == 2);
  CHECK(status("render --labels ''") == 1);
  CHECK(status("verify --depth 1") == 0);
}
