// cliffwave command line: scenario-driven verification runs plus standalone
// stage shortcuts, all emitting the same JSON record format.
#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "cliffwave/scenario.hpp"

namespace {

struct StageFlags {
  std::string name = "cli";
  int dim = 2;
  int grid_n = 128;
  double box = 8.0;
  std::string wavelet = "mexican_hat";
  std::string scales = "0.125:8:24";
  int spins = 8;
  std::string constant_mode = "calibrated";
  std::uint64_t seed = 1;
  std::string function = "gaussian";
  std::vector<std::string> theorems;
  std::string out;
};

void add_stage_flags(CLI::App* cmd, StageFlags& f) {
  cmd->add_option("--dim", f.dim, "space dimension (2 or 3)");
  cmd->add_option("--grid-n", f.grid_n, "grid points per axis");
  cmd->add_option("--box", f.box, "half-width L of the periodic box");
  cmd->add_option("--wavelet", f.wavelet, "analyzing wavelet name");
  cmd->add_option("--scales", f.scales, "scale quadrature as min:max:count");
  cmd->add_option("--spins", f.spins, "spin sample count");
  cmd->add_option("--constant-mode", f.constant_mode, "paper or calibrated");
  cmd->add_option("--seed", f.seed, "seed of the test-function suite");
  cmd->add_option("--out", f.out, "write the report here instead of stdout");
}

cw::Scenario to_scenario(const StageFlags& f, const std::string& stage) {
  cw::Scenario s;
  s.name = f.name + "/" + stage;
  s.dim = f.dim;
  s.grid_n = f.grid_n;
  s.box = f.box;
  s.wavelet = f.wavelet;
  const auto c1 = f.scales.find(':');
  const auto c2 = f.scales.find(':', c1 == std::string::npos ? c1 : c1 + 1);
  if (c1 == std::string::npos || c2 == std::string::npos)
    throw cw::ScenarioError("--scales expects min:max:count");
  try {
    s.scale_min = std::stod(f.scales.substr(0, c1));
    s.scale_max = std::stod(f.scales.substr(c1 + 1, c2 - c1 - 1));
    s.scale_count = std::stoi(f.scales.substr(c2 + 1));
  } catch (const std::exception&) {
    throw cw::ScenarioError("--scales expects numeric min:max:count");
  }
  s.spin_count = f.spins;
  s.constant_mode = f.constant_mode;
  s.seed = f.seed;
  s.test_function = f.function;
  s.stages = {stage};
  s.theorems = f.theorems;
  s.validate();
  return s;
}

void write_text(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path);
  if (!out) throw cw::ScenarioError("cannot write output file: " + out_path);
  out << text;
}

int emit_run(const cw::Scenario& s, const std::string& out_path) {
  const cw::RunResult res = cw::run_scenario(s);
  write_text(res.report_json, out_path);
  const auto doc = nlohmann::json::parse(res.report_json);
  for (const auto& r : doc["records"]) {
    if (r.value("status", "") != "fail") continue;
    std::cerr << "FAIL " << r.value("record", "?");
    if (r.contains("value") && r.contains("threshold"))
      std::cerr << "  value " << r["value"].dump() << " exceeds " << r["threshold"].dump();
    if (r.contains("ratio")) std::cerr << "  ratio " << r["ratio"].dump();
    std::cerr << "\n";
  }
  const auto& sum = doc["summary"];
  std::cerr << s.name << ": " << sum["checks"].dump() << " checks, " << sum["failed"].dump()
            << " failed\n";
  return res.ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Clifford algebra transform and uncertainty verification harness"};
  app.require_subcommand(1);

  std::string scenario_path;
  std::string run_out;
  CLI::App* run_cmd = app.add_subcommand("run", "execute a scenario file");
  run_cmd->add_option("scenario,--scenario", scenario_path, "scenario JSON file")->required();
  run_cmd->add_option("--out", run_out, "write the report here instead of stdout");

  StageFlags flags;
  CLI::App* algebra_cmd = app.add_subcommand("verify-algebra", "product and involution self-test");
  add_stage_flags(algebra_cmd, flags);
  CLI::App* fourier_cmd = app.add_subcommand("verify-fourier", "transform self-test");
  add_stage_flags(fourier_cmd, flags);
  CLI::App* adm_cmd = app.add_subcommand("admissibility", "wavelet admissibility report");
  add_stage_flags(adm_cmd, flags);
  CLI::App* rt_cmd = app.add_subcommand("cwt-roundtrip", "isometry and reconstruction check");
  add_stage_flags(rt_cmd, flags);
  CLI::App* unc_cmd = app.add_subcommand("uncertainty", "inequality evaluators");
  add_stage_flags(unc_cmd, flags);
  unc_cmd->add_option("--theorem", flags.theorems, "evaluators to run (default: all)");
  unc_cmd->add_option("--function", flags.function, "test function: gaussian or band_limited");

  std::string report_in, report_format = "json", report_out;
  bool report_strip = false;
  CLI::App* report_cmd = app.add_subcommand("report", "convert a report file");
  report_cmd->add_option("--in", report_in, "report JSON file")->required();
  report_cmd->add_option("--format", report_format, "json or csv");
  report_cmd->add_flag("--strip-timing", report_strip, "remove volatile timing fields");
  report_cmd->add_option("--out", report_out, "write here instead of stdout");

  try {
    app.parse(argc, argv);

    if (app.got_subcommand(run_cmd)) return emit_run(cw::scenario_from_file(scenario_path), run_out);
    if (app.got_subcommand(algebra_cmd)) return emit_run(to_scenario(flags, "algebra"), flags.out);
    if (app.got_subcommand(fourier_cmd)) return emit_run(to_scenario(flags, "fourier"), flags.out);
    if (app.got_subcommand(adm_cmd)) return emit_run(to_scenario(flags, "admissibility"), flags.out);
    if (app.got_subcommand(rt_cmd)) return emit_run(to_scenario(flags, "cwt_roundtrip"), flags.out);
    if (app.got_subcommand(unc_cmd)) return emit_run(to_scenario(flags, "uncertainty"), flags.out);
    if (app.got_subcommand(report_cmd)) {
      std::ifstream in(report_in);
      if (!in) throw cw::ScenarioError("cannot open report file: " + report_in);
      std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
      if (report_format == "csv") {
        write_text(cw::report_to_csv(text), report_out);
      } else if (report_format == "json") {
        write_text(report_strip ? cw::strip_timing(text) : text, report_out);
      } else {
        throw cw::ScenarioError("unknown report format: " + report_format);
      }
      return 0;
    }
    return 2;
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  } catch (const cw::ScenarioError& e) {
    std::cerr << "configuration error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
