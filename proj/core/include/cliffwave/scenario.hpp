#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace cw {

/// Bad configuration (unknown names, malformed file, negative tolerance).
/// The CLI maps this to exit code 2; assertion failures inside a valid run
/// map to exit code 1.
struct ScenarioError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Assertion thresholds. All must be >= 0; zero is legal and simply makes
/// the check unsatisfiable (a valid way to force a failing run).
struct Tolerances {
  double algebra = 1e-12;
  double fourier_gaussian = 1e-6;
  double fourier_roundtrip = 1e-10;
  double plancherel = 1e-6;
  double derivative_rule = 1e-8;
  double scalarness = 1e-10;
  double admissibility_match = 0.01;  // quadrature vs closed form, relative
  double isometry = 0.05;
  double reconstruction = 0.02;
  double equality_case = 1e-3;   // Gaussian ratio distance from 1
  double heisenberg_slack = 1e-6;
  double wavelet_bound_min = 0.95;
  double identities = 0.05;
  double bracket_cross = 0.02;  // field-side vs transform-side <f1,f2>
};

struct Scenario {
  int schema = 1;
  std::string name = "default";
  int dim = 2;
  int grid_n = 128;
  double box = 8.0;
  std::string wavelet = "mexican_hat";
  double scale_min = 0.125;
  double scale_max = 8.0;
  int scale_count = 24;
  int spin_count = 8;
  std::string constant_mode = "calibrated";  // "paper" | "calibrated"
  std::uint64_t seed = 1;
  std::string test_function = "gaussian";  // "gaussian" | "band_limited"
  std::vector<std::string> stages;    // empty = all, in canonical order
  std::vector<std::string> theorems;  // empty = all six
  Tolerances tol;

  void validate() const;  // throws ScenarioError
};

const std::vector<std::string>& known_stages();
const std::vector<std::string>& known_theorems();

Scenario scenario_from_json(const std::string& text);
Scenario scenario_from_file(const std::string& path);
std::string scenario_to_json(const Scenario& s);

struct RunResult {
  bool ok = true;           // every asserted check passed
  std::string report_json;  // full report document
};

/// Execute the scenario stages in order: algebra self-test, transform
/// self-test, admissibility, transform round-trip, selected theorem
/// evaluations. Report-only records never flip ok.
RunResult run_scenario(const Scenario& s);

/// One CSV row per check record. Input is a report document.
std::string report_to_csv(const std::string& report_json);

/// The same document with volatile timing fields removed; what determinism
/// comparisons are run against.
std::string strip_timing(const std::string& report_json);

}  // namespace cw
