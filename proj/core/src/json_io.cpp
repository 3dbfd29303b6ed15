#include "vancalc/json_io.hpp"

namespace vancalc {

json rational_to_json(const Rational& x) { return to_string(x); }

Rational rational_from_json(const json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long>());
  throw InputError("expected a rational as a \"p/q\" string, got " + j.dump());
}

static long get_long(const json& j, const char* key, long dflt) {
  if (!j.contains(key)) return dflt;
  if (!j.at(key).is_number_integer())
    throw InputError(std::string("field '") + key + "' must be an integer");
  return j.at(key).get<long>();
}

static const json& need(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key))
    throw InputError(std::string("missing field '") + key + "'");
  return j.at(key);
}

json to_json(const WeightedSpectrum& s) {
  json a = json::array();
  for (const auto& [k, m] : s.entries())
    a.push_back({{"alpha", rational_to_json(k.alpha)}, {"w", k.w}, {"mult", m}});
  return a;
}

json to_json(const Spectrum& s) {
  json a = json::array();
  for (const auto& [alpha, m] : s.entries())
    a.push_back({{"alpha", rational_to_json(alpha)}, {"mult", m}});
  return a;
}

json to_json(const HodgeDeligneDiagram& d) {
  json a = json::array();
  for (const auto& [k, m] : d.entries())
    a.push_back({{"p", k.p}, {"q", k.q}, {"eig", rational_to_json(k.eig)}, {"mult", m}});
  return a;
}

WeightedSpectrum weighted_spectrum_from_json(const json& j) {
  if (!j.is_array()) throw InputError("weighted spectrum must be an array");
  WeightedSpectrum s;
  for (const auto& e : j) {
    if (e.is_array()) {
      if (e.size() < 2 || e.size() > 3) throw InputError("spectrum triple must be [alpha, w, mult]");
      s.add(rational_from_json(e[0]), e[1].get<int>(), e.size() == 3 ? e[2].get<long>() : 1);
    } else {
      s.add(rational_from_json(need(e, "alpha")), int(get_long(e, "w", 0)),
            get_long(e, "mult", 1));
    }
  }
  return s;
}

Spectrum spectrum_from_json(const json& j) {
  if (!j.is_array()) throw InputError("spectrum must be an array");
  Spectrum s;
  for (const auto& e : j) {
    if (e.is_array()) {
      if (e.empty() || e.size() > 2) throw InputError("spectrum pair must be [alpha, mult]");
      s.add(rational_from_json(e[0]), e.size() == 2 ? e[1].get<long>() : 1);
    } else if (e.is_object()) {
      s.add(rational_from_json(need(e, "alpha")), get_long(e, "mult", 1));
    } else {
      s.add(rational_from_json(e), 1);
    }
  }
  return s;
}

HodgeDeligneDiagram diagram_from_json(const json& j) {
  if (!j.is_array()) throw InputError("diagram must be an array");
  HodgeDeligneDiagram d;
  for (const auto& e : j)
    d.add(int(get_long(e, "p", 0)), int(get_long(e, "q", 0)),
          e.contains("eig") ? rational_from_json(e.at("eig")) : Rational(0), get_long(e, "mult", 1));
  return d;
}

json to_json(const EigenEntry& e) {
  return {{"alpha", rational_to_json(e.alpha)},
          {"w", e.weight},
          {"beta", rational_to_json(e.beta)},
          {"mult", e.multiplicity}};
}

EigenEntry eigen_entry_from_json(const json& j) {
  EigenEntry e;
  if (j.is_array()) {
    if (j.size() < 3 || j.size() > 4) throw InputError("eigen entry must be [alpha, w, beta, mult]");
    e.alpha = rational_from_json(j[0]);
    e.weight = j[1].get<int>();
    e.beta = rational_from_json(j[2]);
    e.multiplicity = j.size() == 4 ? j[3].get<long>() : 1;
  } else {
    e.alpha = rational_from_json(need(j, "alpha"));
    e.weight = int(get_long(j, "w", 0));
    e.beta = j.contains("beta") ? rational_from_json(j.at("beta")) : Rational(0);
    e.multiplicity = get_long(j, "mult", 1);
  }
  if (e.beta < 0 || e.beta >= 1) throw InputError("eigen entry beta must lie in [0,1)");
  if (e.multiplicity < 1) throw InputError("eigen entry multiplicity must be positive");
  return e;
}

std::vector<EigenEntry> eigen_entries_from_json(const json& j) {
  if (!j.is_array()) throw InputError("eigen entries must be an array");
  std::vector<EigenEntry> out;
  for (const auto& e : j) out.push_back(eigen_entry_from_json(e));
  return out;
}

json to_json(const FiberHodge& f) {
  json a = json::array();
  for (const auto& [pq, h] : f.h) a.push_back({{"p", pq.first}, {"q", pq.second}, {"h", h}});
  return a;
}

FiberHodge fiber_from_json(const json& j) {
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    if (s == "k3") return FiberHodge::k3();
    if (s == "cubic_fivefold") return FiberHodge::cubic_fivefold();
    throw InputError("unknown fiber preset '" + s + "'");
  }
  if (!j.is_array()) throw InputError("fiber_hodge must be a preset name or an array");
  FiberHodge f;
  for (const auto& e : j) {
    long h = get_long(e, "h", 0);
    if (h < 0) throw InputError("negative Hodge number");
    if (h) f.h[{int(get_long(e, "p", 0)), int(get_long(e, "q", 0))}] = h;
  }
  return f;
}

json to_json(const Constraint& c) {
  json j = {{"kind", constraint_kind_name(c.kind)}, {"k", c.k}, {"p", c.p}, {"value", c.value}};
  if (c.slack) j["slack"] = c.slack;
  if (!c.note.empty()) j["note"] = c.note;
  return j;
}

Constraint constraint_from_json(const json& j) {
  Constraint c;
  c.kind = parse_constraint_kind(need(j, "kind").get<std::string>());
  c.k = int(get_long(j, "k", 0));
  c.p = int(get_long(j, "p", 0));
  c.value = get_long(j, "value", 0);
  c.slack = get_long(j, "slack", 0);
  if (j.contains("note")) c.note = j.at("note").get<std::string>();
  return c;
}

json to_json(const E2Table& t) {
  json cells = json::array();
  for (const auto& [ij, d] : t.cells)
    cells.push_back({{"i", ij.first}, {"j", ij.second}, {"rank", d.total()}, {"diagram", to_json(d)}});
  json j = {{"n", t.n}, {"cells", cells}, {"euler", t.euler()}};
  j["d2_rank"] = t.d2_rank ? json(*t.d2_rank) : json(nullptr);
  return j;
}

static json degree_to_json(const DegreeData& d) {
  json strings = json::array();
  for (const auto& s : d.lim_strings)
    strings.push_back({{"top_p", s.top.p},
                       {"top_q", s.top.q},
                       {"eig", rational_to_json(s.top.eig)},
                       {"length", s.length},
                       {"mult", s.mult}});
  return {{"k", d.k},
          {"van", to_json(d.van)},
          {"lim", to_json(d.lim)},
          {"x0", to_json(d.x0)},
          {"rank_van", d.van.total()},
          {"rank_lim", d.lim.total()},
          {"rank_x0", d.x0.total()},
          {"lim_strings", strings},
          {"delta_rank", d.delta_rank},
          {"rho_a", d.rho_a},
          {"rho_b", d.rho_b}};
}

json to_json(const VsSolution& s) {
  json degs = json::array();
  for (const auto& [k, d] : s.degrees) degs.push_back(degree_to_json(d));
  json params = json::object();
  for (const auto& [name, v] : s.params) params[name] = v;
  return {{"type", type_name(s.type)}, {"max_string", s.type}, {"params", params}, {"degrees", degs}};
}

json to_json(const AffineRelation& r) {
  return {{"quantity", r.quantity},
          {"param", r.param},
          {"slope", r.slope},
          {"intercept", r.intercept},
          {"text", r.str()}};
}

json to_json(const DiscrepancyReport& r) {
  return {{"rho_a", r.rho_a},
          {"rho_b", r.rho_b},
          {"bound", r.bound},
          {"equality_case", r.equality_case},
          {"ok", r.ok}};
}

static json shriek_to_json(const ShriekCohomology& c) {
  return {{"h0", c.h0}, {"h1", c.h1}, {"h2", c.h2},
          {"H0", to_json(c.H0)}, {"H1", to_json(c.H1)}, {"H2", to_json(c.H2)}};
}

json to_json(const SheafDescription& s) {
  json pieces = json::array();
  for (const auto& p : s.pieces) {
    json j = {{"support", p.support}, {"kind", p.kind}, {"description", p.description}};
    if (p.kind == "skyscraper") j["stalk"] = to_json(p.stalk);
    else j["cohomology"] = shriek_to_json(p.cohomology);
    pieces.push_back(j);
  }
  return {{"pieces", pieces}, {"total_h1", s.total_h1()}};
}

json to_json(const DegenerationScenario& sc) {
  json strata = json::array();
  for (const auto& c : sc.strata) {
    json punct = json::array();
    for (const auto& p : c.punctures) {
      json q = {{"kind", puncture_kind_name(p.kind)}, {"monodromy", p.local_monodromy}};
      if (p.kind == PunctureKind::j_kappa) q["kappa"] = p.kappa;
      punct.push_back(q);
    }
    strata.push_back({{"name", c.name},
                      {"genus", c.component_genus},
                      {"twist", c.twist},
                      {"tss_sign", c.tss_sign},
                      {"punctures", punct}});
  }
  json pts = json::array();
  for (const auto& p : sc.s0_points) {
    json q = {{"label", p.label}, {"vn", to_json(p.vn)}};
    if (p.kappa) q["kappa"] = p.kappa;
    pts.push_back(q);
  }
  json cons = json::array();
  for (const auto& c : sc.constraints) cons.push_back(to_json(c));
  json j = {{"name", sc.name},
            {"n", sc.n},
            {"strata", strata},
            {"stratum_nodes", sc.stratum_nodes},
            {"s0_points", pts},
            {"total_space_nodes", sc.total_space_nodes},
            {"components", sc.components},
            {"fiber_hodge", to_json(sc.fiber)},
            {"constraints", cons}};
  if (sc.kulikov) j["kulikov"] = {(*sc.kulikov)[0], (*sc.kulikov)[1], (*sc.kulikov)[2]};
  return j;
}

static json hvan_to_json(const std::map<int, HodgeDeligneDiagram>& h) {
  json a = json::array();
  for (const auto& [k, d] : h) a.push_back({{"k", k}, {"rank", d.total()}, {"diagram", to_json(d)}});
  return a;
}

json to_json(const ScenarioReport& r) {
  json sols = json::array();
  for (const auto& s : r.solutions) {
    json ranks = json::array();
    for (const auto& [k, v] : s.d2.cell_ranks)
      ranks.push_back({{"p", k.p}, {"q", k.q}, {"eig", rational_to_json(k.eig)}, {"rank", v}});
    sols.push_back({{"d2_rank", s.d2.rank},
                    {"d2_cells", ranks},
                    {"hvan", hvan_to_json(s.d2.hvan)},
                    {"sequence", to_json(s.vs)},
                    {"discrepancy", to_json(s.discrepancy)}});
  }
  json rels = json::array();
  for (const auto& x : r.relations) rels.push_back(to_json(x));
  return {{"scenario", to_json(r.scenario)},
          {"sheaf", to_json(r.sheaf)},
          {"e2", to_json(r.e2)},
          {"genus_ok", r.genus_ok},
          {"free_params", r.free_params},
          {"relations", rels},
          {"solution_count", r.solutions.size()},
          {"solutions", sols}};
}

json to_json(const KulikovReport& r) {
  return {{"e2", to_json(r.e2)},
          {"hvan", hvan_to_json(r.hvan)},
          {"h2_x0", r.h2_x0},
          {"h4_x0", r.h4_x0},
          {"sequence", to_json(r.vs)}};
}

json to_json(const SssResult& r) {
  json j = {{"difference", to_json(r.difference)}};
  j["sigma"] = r.sigma ? to_json(*r.sigma) : json(nullptr);
  j["r_at_threshold"] = r.r_at_threshold;
  j["consistent"] = r.consistent;
  j["flags"] = r.flags;
  return j;
}

json to_json(const JkSummary& s) {
  return {{"kappa", s.kappa},       {"h20", s.h20},
          {"h22", s.h22},           {"tss_order", s.tss_order},
          {"observed_order", s.observed_order}, {"n_trivial", s.n_trivial},
          {"total", s.total}};
}

json to_json(const SlcCatalogEntry& e) {
  return {{"symbol", e.symbol},
          {"local_form", e.local_form},
          {"g", e.g_choice},
          {"r_threshold", rational_to_json(e.r_threshold)},
          {"branch_count", e.branch_count},
          {"sigma1", to_json(e.sigma1)},
          {"sigma2", to_json(e.sigma2)}};
}

static json vec_to_json(const std::vector<Rational>& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(rational_to_json(x));
  return a;
}

json to_json(const KinematicData& k) {
  json p = json::object();
  for (int i = 1; i <= 6; ++i) p["p" + std::to_string(i)] = vec_to_json(k.p[i]);
  json m = json::array();
  for (const auto& x : k.m2) m.push_back(rational_to_json(x));
  json j = {{"case", db_case_name(k.which)}, {"dim", k.dim}, {"seed", k.seed}, {"momenta", p}, {"m2", m}};
  if (k.alphas) j["alphas"] = vec_to_json({(*k.alphas)[0], (*k.alphas)[1], (*k.alphas)[2], (*k.alphas)[3]});
  return j;
}

json to_json(const EvReport& r) {
  return {{"dim_S2", r.dim_S2},
          {"dim_0123sq", r.dim_0123sq},
          {"dim_3456sq", r.dim_3456sq},
          {"dim_overlap", r.dim_overlap},
          {"dim_JF", r.dim_JF},
          {"dim_A_J", r.dim_A_J},
          {"dim_B_J", r.dim_B_J},
          {"dim_A_B_J", r.dim_A_B_J},
          {"dim_intersection", r.dim_intersection},
          {"node_eval_rank", r.node_eval_rank},
          {"codomain", r.codomain},
          {"dim_ker_ev", r.dim_ker_ev},
          {"a", r.a},
          {"delta_unique", r.delta_unique},
          {"g_ok", r.g_ok},
          {"gp_ok", r.gp_ok},
          {"delta_F", r.delta_F}};
}

static json pinch_to_json(const PinchCount& p) {
  return {{"points", p.points},
          {"resultant_degree", p.resultant_degree},
          {"squarefree", p.squarefree},
          {"none_at_infinity", p.none_at_infinity},
          {"hessian_rank_generic", p.hessian_rank_generic}};
}

json to_json(const SingularLocusReport& r) {
  json nodes = json::array();
  for (const auto& n : r.nodes) {
    json c = json::array();
    for (const auto& x : n.coords) c.push_back(x.str());
    nodes.push_back({{"coords", c},
                     {"partials_vanish", n.partials_vanish},
                     {"u_vanishes", n.u_vanishes},
                     {"z3_nonzero", n.z3_nonzero},
                     {"hessian_rank", n.hessian_rank}});
  }
  json hil = json::array();
  for (const auto& [d, v] : r.hilbert)
    hil.push_back({{"d", d}, {"dim", v}, {"expected", r.hilbert_expected.count(d) ? r.hilbert_expected.at(d) : -1}});
  return {{"partials_vanish_on_C", r.partials_vanish_on_C},
          {"partials_vanish_on_Cp", r.partials_vanish_on_Cp},
          {"euler_identity", r.euler_identity},
          {"pinch_C", pinch_to_json(r.pinch_C)},
          {"pinch_Cp", pinch_to_json(r.pinch_Cp)},
          {"nodes", nodes},
          {"hilbert", hil},
          {"hilbert_matches", r.hilbert_matches},
          {"flags", r.flags},
          {"ok", r.ok()}};
}

json to_json(const DoubleboxReport& r) {
  json rels = json::array();
  for (const auto& x : r.relations) rels.push_back(to_json(x));
  const auto& sol = r.scenario.solutions.at(0);
  return {{"case", db_case_name(r.which)},
          {"seed", r.seed},
          {"seed_used", r.seed_used},
          {"resamples", r.resamples},
          {"kinematics", to_json(r.kin)},
          {"ev", to_json(r.ev)},
          {"verification", to_json(r.sing)},
          {"hodge",
           {{"rho_d", r.rho_d},
            {"rank_V", r.rank_V},
            {"a", r.ev.a},
            {"b", r.b},
            {"h22_x0", r.h22_x0},
            {"h32_x0", r.h32_x0},
            {"h33_x6", r.h33_x6},
            {"f_level", r.f_level},
            {"type", type_name(sol.vs.type)}}},
          {"relations", rels},
          {"e2", to_json(r.scenario.e2)},
          {"sequence", to_json(sol.vs)},
          {"discrepancy", to_json(sol.discrepancy)}};
}

}  // namespace vancalc
