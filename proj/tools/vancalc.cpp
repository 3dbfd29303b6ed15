#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "vancalc/render.hpp"
#include "vancalc/scenario.hpp"

namespace fs = std::filesystem;
using namespace vancalc;

namespace {

struct Output {
  std::string out;
  std::string format = "json";
};

void emit(const ScenarioOutput& r, const Output& o) {
  const std::string text = o.format == "ascii" ? r.ascii : r.report.dump(2) + "\n";
  if (o.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(o.out);
  if (!f) throw InputError("cannot write " + o.out);
  f << text;
}

void add_output_flags(CLI::App* sub, Output& o) {
  sub->add_option("--out", o.out, "Write the report here instead of stdout");
  sub->add_option("--format", o.format, "Report format")
      ->check(CLI::IsMember({"json", "ascii"}))
      ->capture_default_str();
}

json load_scenario(const std::string& path, const std::string& kind) {
  json doc = load_json_file(path);
  if (kind.empty()) return doc;
  auto check = [&](const json& sc) {
    if (!sc.is_object() || sc.value("kind", std::string()) != kind)
      throw InputError(path + ": expected scenarios of kind '" + kind + "'");
  };
  if (doc.is_array()) {
    for (const auto& sc : doc) check(sc);
  } else if (doc.is_object() && doc.contains("scenarios")) {
    for (const auto& sc : doc["scenarios"]) check(sc);
  } else {
    check(doc);
  }
  return doc;
}

int run_golden_suite(const std::string& suite, const std::string& dir_opt) {
  if (suite != "golden") throw InputError("unknown suite '" + suite + "'");
  fs::path dir = dir_opt.empty() ? data_dir() / "golden" : fs::path(dir_opt);
  auto results = run_golden(dir, FixtureRegistry::global());
  long failed = 0;
  for (const auto& r : results) {
    std::cout << (r.passed ? "PASS " : "FAIL ") << r.name << "  (" << r.file << ")\n";
    for (const auto& d : r.diffs) std::cout << "    " << d << "\n";
    failed += !r.passed;
  }
  std::cout << results.size() - failed << "/" << results.size() << " golden cases passed\n";
  return failed ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"vancalc: weighted spectra and vanishing cohomology of degenerations"};
  app.require_subcommand(1);

  Output out;
  std::string scenario;

  auto* run = app.add_subcommand("run", "Run a scenario file (any kind, or a batch)");
  run->add_option("--scenario", scenario, "Scenario JSON")->required()->check(CLI::ExistingFile);
  add_output_flags(run, out);

  auto* sss = app.add_subcommand("sss", "Saito-Siersma-Steenbrink formula from a scenario file");
  sss->add_option("--scenario", scenario, "Scenario JSON of kind sss")->required()->check(CLI::ExistingFile);
  add_output_flags(sss, out);

  std::vector<std::string> types;
  auto* table = app.add_subcommand("slc-table", "Closed-form spectra of the slc surface catalog");
  table->add_option("--types", types, "Symbols such as T_3_4_inf (default: every catalog row)");
  table->add_option("--scenario", scenario, "Scenario JSON of kind slc or slc-table")->check(CLI::ExistingFile);
  add_output_flags(table, out);

  int kappa = 0;
  auto* jk = app.add_subcommand("jk", "Weighted spectrum of J_{kappa,inf}");
  auto* kopt = jk->add_option("--kappa", kappa, "kappa >= 1");
  jk->add_option("--scenario", scenario, "Scenario JSON of kind jk")->check(CLI::ExistingFile)->excludes(kopt);
  add_output_flags(jk, out);

  auto* assemble = app.add_subcommand("assemble", "Solve a degeneration scenario");
  assemble->add_option("--scenario", scenario, "Scenario JSON of kind assemble")->required()->check(CLI::ExistingFile);
  add_output_flags(assemble, out);

  long F = 0, E = 0, V = 0;
  auto* kul = app.add_subcommand("kulikov", "Type III Kulikov degeneration of K3 surfaces");
  kul->add_option("-F", F, "Components")->required();
  kul->add_option("-E", E, "Double curves")->required();
  kul->add_option("-V", V, "Triple points")->required();
  add_output_flags(kul, out);

  std::string db_case = "dgt4";
  long seed = 1;
  auto* db = app.add_subcommand("doublebox", "Double-box Symanzik degeneration report");
  db->add_option("--case", db_case, "Kinematic regime")->check(CLI::IsMember({"dgt4", "deq4"}))->capture_default_str();
  db->add_option("--seed", seed, "Sampling seed")->check(CLI::NonNegativeNumber)->capture_default_str();
  add_output_flags(db, out);

  std::string suite = "golden", golden_dir;
  auto* golden = app.add_subcommand("golden", "Run the embedded golden suite");
  golden->add_option("--suite", suite, "Suite name")->capture_default_str();
  golden->add_option("--dir", golden_dir, "Golden directory (default: <data>/golden)");

  auto* fixtures = app.add_subcommand("fixtures", "List the fixture registry");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    const auto& reg = FixtureRegistry::global();
    if (run->parsed()) {
      emit(run_scenarios(load_json_file(scenario), reg), out);
    } else if (sss->parsed()) {
      emit(run_scenarios(load_scenario(scenario, "sss"), reg), out);
    } else if (table->parsed()) {
      json sc = {{"name", "slc-table"}, {"kind", "slc-table"}};
      if (!types.empty()) sc["types"] = types;
      emit(run_scenarios(scenario.empty() ? sc : load_json_file(scenario), reg), out);
    } else if (jk->parsed()) {
      json sc = scenario.empty() ? json{{"name", "jk"}, {"kind", "jk"}, {"kappa", kappa}}
                                 : load_scenario(scenario, "jk");
      emit(run_scenarios(sc, reg), out);
    } else if (assemble->parsed()) {
      emit(run_scenarios(load_scenario(scenario, "assemble"), reg), out);
    } else if (kul->parsed()) {
      emit(run_scenario({{"name", "kulikov"}, {"kind", "kulikov"}, {"F", F}, {"E", E}, {"V", V}}, reg), out);
    } else if (db->parsed()) {
      emit(run_scenario({{"name", "doublebox"}, {"kind", "doublebox"}, {"case", db_case}, {"seed", seed}}, reg), out);
    } else if (golden->parsed()) {
      return run_golden_suite(suite, golden_dir);
    } else if (fixtures->parsed()) {
      for (const auto& name : reg.names()) {
        const auto& f = reg.get(name);
        std::cout << name << "  [" << f.kind << ", " << f.file << "]  " << f.source << "\n";
      }
    }
  } catch (const InconsistencyError& e) {
    std::cerr << "inconsistency: " << e.what() << "\n";
    return 1;
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const json::exception& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
