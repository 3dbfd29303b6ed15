#include "vancalc/scenario.hpp"

#include <algorithm>
#include <fstream>
#include <future>
#include <sstream>

#include "vancalc/render.hpp"

namespace vancalc {

namespace fs = std::filesystem;

namespace {

const json& need(const json& j, const char* key, const std::string& where) {
  if (!j.is_object() || !j.contains(key))
    throw InputError(where + ": missing field '" + key + "'");
  return j.at(key);
}

long get_long(const json& j, const char* key, long dflt) {
  if (!j.contains(key)) return dflt;
  if (!j.at(key).is_number_integer()) throw InputError(std::string("field '") + key + "' must be an integer");
  return j.at(key).get<long>();
}

long need_long(const json& j, const char* key, const std::string& where) {
  const json& v = need(j, key, where);
  if (!v.is_number_integer()) throw InputError(where + ": field '" + key + "' must be an integer");
  return v.get<long>();
}

std::vector<int> int_list(const json& j, const char* what) {
  if (!j.is_array()) throw InputError(std::string(what) + " must be an array of integers");
  std::vector<int> v;
  for (const auto& x : j) {
    if (!x.is_number_integer()) throw InputError(std::string(what) + " must be an array of integers");
    v.push_back(x.get<int>());
  }
  return v;
}

json f_level_json(const WeightedSpectrum& s) {
  long f = f_level(s);
  return f == kFLevelInfinity ? json(nullptr) : json(f);
}

json spectrum_summary(const WeightedSpectrum& s) {
  HodgeDeligneDiagram d = to_hodge_deligne(s, EigConvention::e_alpha);
  return {{"spectrum", to_json(s)},
          {"plain", to_json(forget_weights(s))},
          {"diagram", to_json(d)},
          {"total", s.total()},
          {"effective", s.effective()},
          {"pq_symmetric", check_pq_symmetry(d)},
          {"f_level", f_level_json(s)}};
}

const std::vector<std::string>& table1_symbols() {
  static const std::vector<std::string> v = {
      "A_inf",         "D_inf",     "T_2_inf_inf", "T_2_3_inf", "T_2_4_inf",  "T_2_5_inf",
      "T_inf_inf_inf", "T_3_inf_inf", "T_4_inf_inf", "T_3_3_inf", "T_3_4_inf", "T_4_5_inf"};
  return v;
}

ScenarioOutput run_spectrum(const json& sc, const FixtureRegistry& reg) {
  WeightedSpectrum s = resolve_spectrum(need(sc, "spectrum", "spectrum scenario"), reg);
  ScenarioOutput out;
  out.report = spectrum_summary(s);
  out.ascii = render_spectrum(s, "spectrum") +
              render_diagram(to_hodge_deligne(s, EigConvention::e_alpha), "diagram");
  if (sc.contains("convolve")) {
    WeightedSpectrum t = resolve_spectrum(sc["convolve"], reg);
    WeightedSpectrum c = convolve(s, t);
    out.report["convolution"] = to_json(c);
    out.ascii += render_spectrum(c, "convolution");
  }
  return out;
}

std::vector<EigenEntry> resolve_entries(const json& j, const FixtureRegistry& reg) {
  if (j.is_string()) return reg.eigen_entries(j.get<std::string>());
  if (j.is_object() && j.contains("fixture")) return reg.eigen_entries(j["fixture"].get<std::string>());
  return eigen_entries_from_json(j);
}

ScenarioOutput run_sss(const json& sc, const FixtureRegistry& reg) {
  SssProblem pb;
  pb.n = int(get_long(sc, "n", 2));
  pb.r = int(need_long(sc, "r", "sss scenario"));
  pb.r_threshold = sc.contains("r_threshold") ? rational_from_json(sc["r_threshold"]) : Rational(0);
  for (const auto& b : need(sc, "branches", "sss scenario")) {
    BranchData bd;
    bd.mu = int(get_long(b, "mu", 1));
    bd.eigen_entries = resolve_entries(need(b, "entries", "sss branch"), reg);
    pb.branches.push_back(bd);
  }
  pb.yomdin = resolve_spectrum(need(sc, "yomdin", "sss scenario"), reg);
  if (sc.contains("sigma_lower")) pb.sigma_lower = resolve_spectrum(sc["sigma_lower"], reg);
  std::string mode = sc.value("mode", "weighted");
  ScenarioOutput out;
  json extra = json::object();
  SssResult res;
  if (mode == "weighted") {
    res = sss_weighted(pb, SssMode::weighted);
  } else if (mode == "plain") {
    res = sss_weighted(pb, SssMode::plain);
  } else if (mode == "infer") {
    WeightedSpectrum low = infer_sigma_lower(pb);
    pb.sigma_lower = low;
    res = sss_weighted(pb, SssMode::weighted);
    extra["inferred_sigma_lower"] = to_json(low);
  } else {
    throw InputError("unknown sss mode '" + mode + "'");
  }
  WeightedSpectrum lim = sss_limit_term(pb.branches, pb.r);
  out.report = to_json(res);
  out.report["limit_term"] = to_json(lim);
  for (auto& [k, v] : extra.items()) out.report[k] = v;
  out.ascii = render_spectrum(lim, "limit term") + render_spectrum(res.difference, "difference");
  if (res.sigma) out.ascii += render_spectrum(*res.sigma, "sigma^n");
  for (const auto& f : res.flags) out.ascii += "flag: " + f + "\n";
  return out;
}

ScenarioOutput run_slc(const json& in, const FixtureRegistry& reg) {
  json sc = in;
  if (in.contains("row")) {
    const Fixture& f = reg.get(in["row"].get<std::string>());
    if (f.kind != "slc_row") throw InputError("fixture '" + f.name + "' is not an slc_row");
    sc = f.value;
    for (auto& [k, v] : in.items())
      if (k != "row") sc[k] = v;
  }
  SlcType t = parse_slc_type(need(sc, "type", "slc scenario").get<std::string>());
  SlcCatalogEntry cat = slc_catalog(t);
  int r = int(get_long(sc, "r", 0));
  if (r < 1) throw InputError("slc scenario needs r >= 1");
  WeightedSpectrum sigma1 = sc.contains("sigma1") ? resolve_spectrum(sc["sigma1"], reg) : cat.sigma1;
  WeightedSpectrum yomdin = resolve_spectrum(need(sc, "yomdin", "slc scenario"), reg);
  std::vector<Rational> betas;
  if (sc.contains("betas")) {
    for (const auto& b : sc["betas"]) betas.push_back(rational_from_json(b));
  } else {
    betas.assign(cat.branch_count, slc_branch_beta(t));
  }
  SssResult res = sss_slc(sigma1, yomdin, r, betas);
  ScenarioOutput out;
  out.report = to_json(res);
  out.report["type"] = cat.symbol;
  out.report["r"] = r;
  out.report["r_above_threshold"] = Rational(r) > cat.r_threshold;
  out.report["catalog"] = to_json(cat);
  out.report["matches_catalog"] = res.sigma && *res.sigma == cat.sigma2;
  if (sc.contains("expected")) {
    WeightedSpectrum want = resolve_spectrum(sc["expected"], reg);
    out.report["matches_expected"] = res.sigma && *res.sigma == want;
  }
  out.ascii = "type " + cat.symbol + ", r = " + std::to_string(r) + "\n" +
              render_spectrum(yomdin, "yomdin") + render_spectrum(*res.sigma, "sigma^2") +
              render_diagram(to_hodge_deligne(*res.sigma, EigConvention::e_alpha), "diagram");
  return out;
}

ScenarioOutput run_slc_table(const json& sc) {
  std::vector<std::string> types = table1_symbols();
  if (sc.contains("types")) {
    types.clear();
    for (const auto& t : sc["types"]) types.push_back(t.get<std::string>());
  }
  ScenarioOutput out;
  out.report = json::array();
  for (const auto& s : types) {
    SlcCatalogEntry e = slc_catalog(parse_slc_type(s));
    json row = to_json(e);
    row["pq_symmetric"] = check_pq_symmetry(to_hodge_deligne(e.sigma2, EigConvention::e_alpha));
    out.report.push_back(row);
    out.ascii += e.symbol + "  (" + e.local_form + ", g = " + e.g_choice +
                 ", threshold " + to_string(e.r_threshold) + ", N = " + std::to_string(e.branch_count) + ")\n";
    out.ascii += "  sigma1: " + describe(e.sigma1) + "\n  sigma2: " + describe(e.sigma2) + "\n";
  }
  return out;
}

ScenarioOutput run_jk_one(int kappa) {
  WeightedSpectrum s = jk_spectrum(kappa);
  ScenarioOutput out;
  out.report = spectrum_summary(s);
  out.report["kappa"] = kappa;
  out.report["summary"] = to_json(jk_summary(kappa));
  out.ascii = "J_" + std::to_string(kappa) + "_inf\n" + render_spectrum(s, "sigma^2") +
              render_diagram(to_hodge_deligne(s, EigConvention::e_alpha), "V^2");
  return out;
}

ScenarioOutput run_jk(const json& sc) {
  if (sc.contains("kappas")) {
    ScenarioOutput out;
    out.report = json::array();
    for (int k : int_list(sc["kappas"], "kappas")) {
      ScenarioOutput one = run_jk_one(k);
      out.report.push_back(one.report);
      out.ascii += one.ascii;
    }
    return out;
  }
  return run_jk_one(int(need_long(sc, "kappa", "jk scenario")));
}

ScenarioOutput run_assemble(const json& sc, const FixtureRegistry& reg) {
  DegenerationScenario d = scenario_from_json(sc, reg);
  ScenarioReport rep = solve_scenario(d);
  ScenarioOutput out;
  out.report = to_json(rep);
  std::ostringstream os;
  os << render_e2(rep.e2);
  os << "solutions: " << rep.solutions.size();
  if (!rep.free_params.empty()) {
    os << " (free:";
    for (const auto& p : rep.free_params) os << " " << p;
    os << ")";
  }
  os << "\n";
  for (const auto& r : rep.relations) os << "  " << r.str() << "\n";
  for (const auto& s : rep.solutions) {
    os << "-- d2 rank " << s.d2.rank << ", rho_a = " << s.discrepancy.rho_a
       << ", rho_b = " << s.discrepancy.rho_b << "\n";
    os << render_solution(s.vs);
  }
  out.ascii = os.str();
  return out;
}

ScenarioOutput run_kulikov(const json& sc) {
  const std::string where = "kulikov scenario";
  KulikovReport r = kulikov_e2(need_long(sc, "F", where), need_long(sc, "E", where), need_long(sc, "V", where));
  ScenarioOutput out;
  out.report = to_json(r);
  out.ascii = render_e2(r.e2) + "h2(X0) = " + std::to_string(r.h2_x0) + "\n" + render_solution(r.vs);
  return out;
}

ScenarioOutput run_doublebox(const json& sc) {
  DbCase c = parse_db_case(sc.value("case", std::string("dgt4")));
  long seed = get_long(sc, "seed", 1);
  if (seed < 0) throw InputError("seed must be non-negative");
  DoubleboxReport r = doublebox_report(c, uint64_t(seed));
  ScenarioOutput out;
  out.report = to_json(r);
  std::ostringstream os;
  os << "double box, case " << db_case_name(c) << ", seed " << r.seed_used << "\n";
  os << "  dim ker(ev) = " << r.ev.dim_ker_ev << ", a = " << r.ev.a << ", rho_d = " << r.rho_d
     << ", b = " << r.b << ", rank V = " << r.rank_V << ", f-level = " << r.f_level << "\n";
  os << "  verification flags: " << (r.sing.flags.empty() ? "none" : "") << "\n";
  for (const auto& f : r.sing.flags) os << "    " << f << "\n";
  os << render_e2(r.scenario.e2) << render_solution(r.scenario.solutions.at(0).vs);
  out.ascii = os.str();
  return out;
}

}  // namespace

WeightedSpectrum resolve_spectrum(const json& ref, const FixtureRegistry& reg) {
  if (ref.is_array()) return weighted_spectrum_from_json(ref);
  if (ref.is_string()) return reg.weighted_spectrum(ref.get<std::string>());
  if (!ref.is_object()) throw InputError("cannot read a spectrum from " + ref.dump());
  WeightedSpectrum s;
  if (ref.contains("fixture")) {
    s = reg.weighted_spectrum(ref["fixture"].get<std::string>());
  } else if (ref.contains("spectrum")) {
    s = resolve_spectrum(ref["spectrum"], reg);
  } else if (ref.contains("bp")) {
    s = brieskorn_pham(int_list(ref["bp"], "bp"));
  } else if (ref.contains("cusp")) {
    auto v = int_list(ref["cusp"], "cusp");
    if (v.size() != 3) throw InputError("cusp needs three exponents");
    s = cusp_spectrum(v[0], v[1], v[2]);
  } else if (ref.contains("jk")) {
    s = jk_spectrum(ref["jk"].get<int>());
  } else if (ref.contains("slc")) {
    SlcCatalogEntry e = slc_catalog(parse_slc_type(ref["slc"].get<std::string>()));
    std::string col = ref.value("column", std::string("sigma2"));
    if (col == "sigma2") s = e.sigma2;
    else if (col == "sigma1") s = e.sigma1;
    else throw InputError("slc column must be sigma1 or sigma2");
  } else {
    throw InputError("spectrum reference needs one of fixture/spectrum/bp/cusp/jk/slc");
  }
  for (long i = 0, n = get_long(ref, "suspend", 0); i < n; ++i) s = suspend(s);
  return s;
}

DegenerationScenario scenario_from_json(const json& j, const FixtureRegistry& reg) {
  DegenerationScenario sc;
  sc.name = j.value("name", std::string("scenario"));
  sc.n = int(get_long(j, "n", 2));
  if (sc.n < 1) throw InputError("n must be >= 1");
  if (j.contains("kulikov")) {
    auto v = j["kulikov"];
    if (!v.is_array() || v.size() != 3) throw InputError("kulikov must be [F, E, V]");
    sc.kulikov = std::array<long, 3>{v[0].get<long>(), v[1].get<long>(), v[2].get<long>()};
  }
  sc.fiber = fiber_from_json(need(j, "fiber_hodge", "scenario '" + sc.name + "'"));
  long node_sum = 0;
  if (j.contains("strata")) {
    for (const auto& s : j["strata"]) {
      CurveStratumConfig c;
      c.name = s.value("name", std::string("Z") + std::to_string(sc.strata.size()));
      c.component_genus = int(get_long(s, "genus", 0));
      c.twist = int(get_long(s, "twist", sc.n / 2));
      c.tss_sign = int(get_long(s, "tss_sign", sc.n % 2 ? -1 : 1));
      if (s.contains("punctures")) {
        for (const auto& p : s["punctures"]) {
          Puncture q;
          q.kind = parse_puncture_kind(need(p, "kind", "puncture").get<std::string>());
          q.local_monodromy = int(get_long(p, "monodromy", 0));
          q.kappa = int(get_long(p, "kappa", 0));
          long count = get_long(p, "count", 1);
          if (count < 0) throw InputError("puncture count must be >= 0");
          for (long i = 0; i < count; ++i) c.punctures.push_back(q);
        }
      }
      long nodes = get_long(s, "nodes", 0);
      if (nodes < 0) throw InputError("node count must be >= 0");
      node_sum += nodes;
      sc.strata.push_back(c);
      sc.stratum_nodes.push_back(nodes);
    }
  }
  if (j.contains("s0_points")) {
    for (const auto& p : j["s0_points"]) {
      S0Point pt;
      pt.label = p.value("label", std::string("p"));
      pt.vn = resolve_spectrum(p, reg);
      if (p.contains("vn_1")) pt.vn_1 = resolve_spectrum(p["vn_1"], reg);
      if (p.contains("slc")) {
        SlcType t = parse_slc_type(p["slc"].get<std::string>());
        if (t.family == SlcFamily::J_kappa_inf) pt.kappa = t.kappa;
      }
      if (p.contains("jk")) pt.kappa = p["jk"].get<int>();
      long count = get_long(p, "count", 1);
      if (count < 0) throw InputError("point count must be >= 0");
      for (long i = 0; i < count; ++i) {
        S0Point q = pt;
        if (count > 1) q.label += " " + std::to_string(i + 1);
        sc.s0_points.push_back(q);
      }
    }
  }
  sc.total_space_nodes = get_long(j, "total_space_nodes", node_sum);
  if (sc.total_space_nodes < 0) throw InputError("total_space_nodes must be >= 0");
  sc.components = get_long(j, "components", 1);
  if (sc.components < 1) throw InputError("components must be >= 1");
  if (j.contains("constraints"))
    for (const auto& c : j["constraints"]) sc.constraints.push_back(constraint_from_json(c));
  return sc;
}

ScenarioOutput run_scenario(const json& sc, const FixtureRegistry& reg) {
  if (!sc.is_object()) throw InputError("a scenario must be a JSON object");
  const std::string kind = need(sc, "kind", "scenario").get<std::string>();
  ScenarioOutput out;
  if (kind == "spectrum") out = run_spectrum(sc, reg);
  else if (kind == "sss") out = run_sss(sc, reg);
  else if (kind == "slc") out = run_slc(sc, reg);
  else if (kind == "slc-table") out = run_slc_table(sc);
  else if (kind == "jk") out = run_jk(sc);
  else if (kind == "assemble") out = run_assemble(sc, reg);
  else if (kind == "kulikov") out = run_kulikov(sc);
  else if (kind == "doublebox") out = run_doublebox(sc);
  else throw InputError("unknown scenario kind '" + kind + "'");
  json wrapped = {{"name", sc.value("name", kind)}, {"kind", kind}, {"result", out.report}};
  out.report = std::move(wrapped);
  out.ascii = "== " + sc.value("name", kind) + " [" + kind + "]\n" + out.ascii;
  return out;
}

ScenarioOutput run_scenarios(const json& doc, const FixtureRegistry& reg) {
  const json* list = nullptr;
  if (doc.is_array()) list = &doc;
  else if (doc.is_object() && doc.contains("scenarios")) list = &doc["scenarios"];
  if (!list) return run_scenario(doc, reg);
  if (!list->is_array()) throw InputError("\"scenarios\" must be an array");
  std::vector<std::future<ScenarioOutput>> jobs;
  for (const auto& sc : *list)
    jobs.push_back(std::async(std::launch::async, [&reg, &sc] { return run_scenario(sc, reg); }));
  ScenarioOutput out;
  out.report = json::array();
  for (auto& f : jobs) {
    ScenarioOutput one = f.get();
    out.report.push_back(std::move(one.report));
    out.ascii += one.ascii;
  }
  return out;
}

json load_json_file(const fs::path& p) {
  std::ifstream in(p);
  if (!in) throw InputError("cannot open " + p.string());
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw InputError(p.string() + ": " + e.what());
  }
}

std::vector<std::string> json_diff(const json& expected, const json& actual, const std::string& path) {
  std::vector<std::string> out;
  const std::string here = path.empty() ? "/" : path;
  if (expected.is_object()) {
    if (!actual.is_object()) return {here + ": expected an object, got " + actual.dump()};
    for (const auto& [k, v] : expected.items()) {
      if (!actual.contains(k)) {
        out.push_back(path + "/" + k + ": missing");
        continue;
      }
      auto sub = json_diff(v, actual.at(k), path + "/" + k);
      out.insert(out.end(), sub.begin(), sub.end());
    }
    return out;
  }
  if (expected.is_array()) {
    if (!actual.is_array()) return {here + ": expected an array, got " + actual.dump()};
    if (expected.size() != actual.size())
      return {here + ": expected " + std::to_string(expected.size()) + " elements, got " +
              std::to_string(actual.size()) + " (" + actual.dump() + ")"};
    for (size_t i = 0; i < expected.size(); ++i) {
      auto sub = json_diff(expected[i], actual[i], path + "/" + std::to_string(i));
      out.insert(out.end(), sub.begin(), sub.end());
    }
    return out;
  }
  if (expected != actual) out.push_back(here + ": expected " + expected.dump() + ", got " + actual.dump());
  return out;
}

GoldenOutcome run_golden_case(const json& g, const FixtureRegistry& reg, const fs::path& base) {
  GoldenOutcome o;
  o.name = g.value("name", std::string("unnamed"));
  try {
    json sc = need(g, "scenario", "golden '" + o.name + "'");
    if (sc.is_string()) sc = load_json_file(base / sc.get<std::string>());
    if (g.contains("expect_error")) {
      const std::string want = g["expect_error"].get<std::string>();
      try {
        run_scenarios(sc, reg);
        o.diffs.push_back("expected a " + want + " error, but the scenario succeeded");
      } catch (const InconsistencyError& e) {
        if (want != "inconsistency") o.diffs.push_back("expected " + want + " error, got inconsistency: " + e.what());
      } catch (const InputError& e) {
        if (want != "input") o.diffs.push_back("expected " + want + " error, got input error: " + e.what());
      }
    } else {
      ScenarioOutput out = run_scenarios(sc, reg);
      o.diffs = json_diff(need(g, "expect", "golden '" + o.name + "'"), out.report);
    }
  } catch (const std::exception& e) {
    o.diffs.push_back(std::string("error: ") + e.what());
  }
  o.passed = o.diffs.empty();
  return o;
}

std::vector<GoldenOutcome> run_golden(const fs::path& dir, const FixtureRegistry& reg) {
  if (!fs::is_directory(dir)) throw InputError("golden directory not found: " + dir.string());
  std::vector<fs::path> files;
  for (const auto& e : fs::directory_iterator(dir))
    if (e.path().extension() == ".json") files.push_back(e.path());
  std::sort(files.begin(), files.end());
  const fs::path base = dir.parent_path();
  std::vector<GoldenOutcome> out;
  for (const auto& f : files) {
    json doc = load_json_file(f);
    json cases = doc.is_array() ? doc : json::array({doc});
    for (const auto& g : cases) {
      GoldenOutcome o = run_golden_case(g, reg, base);
      o.file = f.filename().string();
      out.push_back(std::move(o));
    }
  }
  return out;
}

}  // namespace vancalc
