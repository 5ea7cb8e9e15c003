#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>
#include <string>

#include "cliffwave/scenario.hpp"

using namespace cw;
using nlohmann::json;

namespace {
Scenario fast_scenario() {
  Scenario s;
  s.name = "unit";
  s.grid_n = 32;
  s.stages = {"algebra", "uncertainty"};
  s.theorems = {"heisenberg_fourier"};
  return s;
}
}  // namespace

TEST_CASE("scenario json round trip preserves every field") {
  Scenario s;
  s.name = "roundtrip";
  s.dim = 3;
  s.grid_n = 16;
  s.box = 4.0;
  s.wavelet = "gauss_d1";
  s.scale_min = 0.5;
  s.scale_max = 2.0;
  s.scale_count = 6;
  s.spin_count = 3;
  s.constant_mode = "paper";
  s.seed = 42;
  s.test_function = "band_limited";
  s.stages = {"algebra"};
  s.theorems = {"commutator_bound"};
  s.tol.isometry = 0.25;
  s.tol.algebra = 1e-11;

  const Scenario back = scenario_from_json(scenario_to_json(s));
  CHECK(back.name == s.name);
  CHECK(back.dim == s.dim);
  CHECK(back.grid_n == s.grid_n);
  CHECK(back.box == s.box);
  CHECK(back.wavelet == s.wavelet);
  CHECK(back.scale_min == s.scale_min);
  CHECK(back.scale_max == s.scale_max);
  CHECK(back.scale_count == s.scale_count);
  CHECK(back.spin_count == s.spin_count);
  CHECK(back.constant_mode == s.constant_mode);
  CHECK(back.seed == s.seed);
  CHECK(back.test_function == s.test_function);
  CHECK(back.stages == s.stages);
  CHECK(back.theorems == s.theorems);
  CHECK(back.tol.isometry == s.tol.isometry);
  CHECK(back.tol.algebra == s.tol.algebra);
}

TEST_CASE("defaults survive an empty object") {
  const Scenario s = scenario_from_json("{}");
  CHECK(s.dim == 2);
  CHECK(s.grid_n == 128);
  CHECK(s.wavelet == "mexican_hat");
  CHECK(s.constant_mode == "calibrated");
  CHECK(s.stages.empty());
  CHECK(s.theorems.empty());
}

TEST_CASE("validation rejects each malformed field") {
  CHECK_THROWS_AS(scenario_from_json("{\"schema\": 2}"), ScenarioError);
  CHECK_THROWS_AS(scenario_from_json("{\"dim\": 4}"), ScenarioError);
  CHECK_THROWS_AS(scenario_from_json("{\"grid_n\": 31}"), ScenarioError);
  CHECK_THROWS_AS(scenario_from_json("{\"grid_n\": 4}"), ScenarioError);
  CHECK_THROWS_AS(scenario_from_json("{\"box\": 0}"), ScenarioError);
  CHECK_THROWS_AS(scenario_from_json("{\"wavelet\": \"sombrero\"}"), ScenarioError);
  CHECK_THROWS_AS(scenario_from_json("{\"scale_min\": 0}"), ScenarioError);
  CHECK_THROWS_AS(scenario_from_json("{\"scale_min\": 2, \"scale_max\": 1}"), ScenarioError);
  CHECK_THROWS_AS(scenario_from_json("{\"scale_count\": 0}"), ScenarioError);
  CHECK_THROWS_AS(scenario_from_json("{\"spin_count\": 0}"), ScenarioError);
  CHECK_THROWS_AS(scenario_from_json("{\"constant_mode\": \"mixed\"}"), ScenarioError);
  CHECK_THROWS_AS(scenario_from_json("{\"test_function\": \"delta\"}"), ScenarioError);
  CHECK_THROWS_AS(scenario_from_json("{\"stages\": [\"warp\"]}"), ScenarioError);
  CHECK_THROWS_AS(scenario_from_json("{\"theorems\": [\"fermat\"]}"), ScenarioError);
  CHECK_THROWS_AS(scenario_from_json("{\"tolerances\": {\"algebra\": -1}}"), ScenarioError);
  CHECK_THROWS_AS(scenario_from_json("{\"tolerances\": {\"spin\": 1}}"), ScenarioError);
  CHECK_THROWS_AS(scenario_from_json("{\"surprise\": 1}"), ScenarioError);
  CHECK_THROWS_AS(scenario_from_json("{\"dim\": \"two\"}"), ScenarioError);
  CHECK_THROWS_AS(scenario_from_json("not json at all"), ScenarioError);
}

TEST_CASE("stage and theorem registries are canonical") {
  CHECK(known_stages() ==
        std::vector<std::string>{"algebra", "fourier", "admissibility", "cwt_roundtrip",
                                 "uncertainty"});
  CHECK(known_theorems() ==
        std::vector<std::string>{"commutator_bound", "heisenberg_fourier",
                                 "base_inequality_probe", "wavelet_heisenberg",
                                 "energy_identities", "wavelet_heisenberg_sharp"});
}

TEST_CASE("minimal run passes and reports structured records") {
  const RunResult res = run_scenario(fast_scenario());
  CHECK(res.ok);
  const json doc = json::parse(res.report_json);
  CHECK(doc.at("schema").get<int>() == 1);
  CHECK(doc.at("scenario").at("name").get<std::string>() == "unit");
  CHECK(doc.at("summary").at("failed").get<int>() == 0);
  CHECK(doc.at("summary").at("pass").get<bool>());
  CHECK(doc.contains("timing"));
  bool saw_theorem = false;
  for (const auto& rec : doc.at("records")) {
    CHECK(rec.contains("record"));
    CHECK(rec.contains("kind"));
    if (rec.at("record").get<std::string>().find("heisenberg_fourier") != std::string::npos)
      saw_theorem = true;
  }
  CHECK(saw_theorem);
}

TEST_CASE("unsatisfiable tolerance fails the run and names the record") {
  Scenario s = fast_scenario();
  s.tol.equality_case = 0.0;
  const RunResult res = run_scenario(s);
  CHECK_FALSE(res.ok);
  const json doc = json::parse(res.report_json);
  CHECK(doc.at("summary").at("failed").get<int>() >= 1);
  bool named = false;
  for (const auto& rec : doc.at("records"))
    if (rec.value("status", "") == "fail") named = true;
  CHECK(named);
}

TEST_CASE("theorem selection filters the uncertainty stage") {
  Scenario s = fast_scenario();
  const RunResult res = run_scenario(s);
  const json doc = json::parse(res.report_json);
  for (const auto& rec : doc.at("records")) {
    const std::string name = rec.at("record").get<std::string>();
    CHECK(name.find("commutator_bound") == std::string::npos);
    CHECK(name.find("wavelet_heisenberg") == std::string::npos);
  }
}

TEST_CASE("reports are deterministic once timing is stripped") {
  const Scenario s = fast_scenario();
  const RunResult a = run_scenario(s);
  const RunResult b = run_scenario(s);
  CHECK(strip_timing(a.report_json) == strip_timing(b.report_json));
  CHECK_FALSE(json::parse(strip_timing(a.report_json)).contains("timing"));
}

TEST_CASE("csv export carries one row per record") {
  const RunResult res = run_scenario(fast_scenario());
  const std::string csv = report_to_csv(res.report_json);
  const json doc = json::parse(res.report_json);
  int lines = 0;
  for (char ch : csv)
    if (ch == '\n') ++lines;
  CHECK(lines == static_cast<int>(doc.at("records").size()) + 1);
  CHECK(csv.rfind("record,kind,status,", 0) == 0);
}

TEST_CASE("csv escapes embedded quotes and commas") {
  // craft a report document directly; extra fields become free-text details
  json doc;
  doc["schema"] = 1;
  doc["records"] = json::array();
  json rec;
  rec["record"] = "x/y";
  rec["kind"] = "check";
  rec["status"] = "pass";
  rec["note"] = "a \"quoted\" word, and a comma";
  doc["records"].push_back(rec);
  const std::string csv = report_to_csv(doc.dump());
  CHECK(csv.find("\"note=a \"\"quoted\"\" word, and a comma\"") != std::string::npos);
}

TEST_CASE("inadmissible wavelet fails wavelet theorems without running them") {
  Scenario s = fast_scenario();
  s.wavelet = "plain_gaussian";
  s.stages = {"uncertainty"};
  s.theorems = {"wavelet_heisenberg"};
  const RunResult res = run_scenario(s);
  CHECK_FALSE(res.ok);
  const json doc = json::parse(res.report_json);
  bool skipped = false;
  for (const auto& rec : doc.at("records"))
    if (rec.value("status", "") == "fail" &&
        rec.value("note", "").find("not admissible") != std::string::npos)
      skipped = true;
  CHECK(skipped);
}
