#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "vancalc/fixtures.hpp"

namespace vancalc {

// A spectrum reference: a literal array, a fixture name, or one of
// {"fixture"}, {"bp": [...]}, {"cusp": [a,b,c]}, {"jk": k}, {"slc": type, "column": "sigma1"|"sigma2"},
// each optionally with "suspend": s.
WeightedSpectrum resolve_spectrum(const json& ref, const FixtureRegistry& reg);

// Builds a degeneration scenario from its JSON block (see docs/scenario_schema.md).
DegenerationScenario scenario_from_json(const json& j, const FixtureRegistry& reg);

struct ScenarioOutput {
  json report;
  std::string ascii;
};

// One scenario object; dispatches on "kind".
ScenarioOutput run_scenario(const json& scenario, const FixtureRegistry& reg);

// A scenario object, an array of them, or {"scenarios": [...]}; batches run in parallel and
// the report order follows the input order.
ScenarioOutput run_scenarios(const json& doc, const FixtureRegistry& reg);

json load_json_file(const std::filesystem::path& p);

// Subset comparison: every key of `expected` must be present in `actual` with an equal
// value (recursively); arrays compare element-wise and must have equal length.
std::vector<std::string> json_diff(const json& expected, const json& actual,
                                   const std::string& path = "");

struct GoldenOutcome {
  std::string name;
  std::string file;
  bool passed = false;
  std::vector<std::string> diffs;  // or the error message
};

// Every *.json under dir: {"name", "scenario": inline object or path relative to the data
// directory, "expect": subset of the report}.
std::vector<GoldenOutcome> run_golden(const std::filesystem::path& dir, const FixtureRegistry& reg);
GoldenOutcome run_golden_case(const json& golden, const FixtureRegistry& reg,
                              const std::filesystem::path& base);

}  // namespace vancalc
