#include "vancalc/assembler.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "vancalc/sss.hpp"

namespace vancalc {

long FiberHodge::get(int p, int q) const {
  auto it = h.find({p, q});
  return it == h.end() ? 0 : it->second;
}

long FiberHodge::betti(int k) const {
  long b = 0;
  for (int p = 0; p <= k; ++p) b += get(p, k - p);
  return b;
}

FiberHodge FiberHodge::k3() {
  FiberHodge f;
  f.h = {{{0, 0}, 1}, {{2, 0}, 1}, {{0, 2}, 1}, {{1, 1}, 20}, {{2, 2}, 1}};
  return f;
}

FiberHodge FiberHodge::cubic_fivefold() {
  FiberHodge f;
  for (int k = 0; k <= 5; ++k) f.h[{k, k}] = 1;
  f.h[{3, 2}] = 21;
  f.h[{2, 3}] = 21;
  return f;
}

const HodgeDeligneDiagram& E2Table::cell(int i, int j) const {
  static const HodgeDeligneDiagram empty;
  auto it = cells.find({i, j});
  return it == cells.end() ? empty : it->second;
}

long E2Table::euler() const {
  long e = 0;
  for (const auto& [ij, d] : cells) e += ((ij.first + ij.second) % 2 ? -1 : 1) * d.total();
  return e;
}

std::string constraint_kind_name(ConstraintKind k) {
  switch (k) {
    case ConstraintKind::d2_rank: return "d2_rank";
    case ConstraintKind::hodge_cap: return "hodge_cap";
    case ConstraintKind::x0_rank: return "x0_rank";
    case ConstraintKind::delta_rank: return "delta_rank";
    case ConstraintKind::rho_b: return "rho_b";
    case ConstraintKind::lim_type: return "lim_type";
  }
  return "?";
}

ConstraintKind parse_constraint_kind(const std::string& s) {
  for (auto k : {ConstraintKind::d2_rank, ConstraintKind::hodge_cap, ConstraintKind::x0_rank,
                 ConstraintKind::delta_rank, ConstraintKind::rho_b, ConstraintKind::lim_type})
    if (constraint_kind_name(k) == s) return k;
  throw InputError("unknown constraint kind '" + s + "'");
}

DegenerationScenario node_puncture_enrichment(const DegenerationScenario& sc) {
  DegenerationScenario out = sc;
  if (out.stratum_nodes.empty()) return out;
  if (out.stratum_nodes.size() != out.strata.size())
    throw InputError("stratum_nodes must list one count per stratum");
  for (size_t i = 0; i < out.strata.size(); ++i) {
    long c = out.stratum_nodes[i];
    if (c < 0) throw InputError("negative node count on '" + out.strata[i].name + "'");
    for (long j = 0; j < c; ++j)
      out.strata[i].punctures.push_back({PunctureKind::total_space_node, 0, 0});
  }
  out.stratum_nodes.clear();
  return out;
}

E2Table assemble_e2(const DegenerationScenario& input) {
  if (input.n < 1) throw InputError("n must be >= 1");
  E2Table t;
  t.n = input.n;
  const int j0 = input.n - 1, j1 = input.n;
  if (input.kulikov) {
    auto [F, E, V] = *input.kulikov;
    SheafDescription d = kulikov_sheaf(F, E, V);
    t.cells[{0, j0}] = d.pieces[0].cohomology.H0;
    t.cells[{1, j0}] = d.pieces[0].cohomology.H1;
    t.cells[{2, j0}] = d.pieces[0].cohomology.H2;
    t.cells[{0, j1}] = to_hodge_deligne(d.pieces[1].stalk, EigConvention::e_alpha);
  } else {
    DegenerationScenario sc = node_puncture_enrichment(input);
    SheafDescription d = assemble_h_sheaf(sc.strata, sc.s0_points, sc.n);
    for (const auto& piece : d.pieces) {
      if (piece.kind == "skyscraper") {
        t.cells[{0, j1}] += to_hodge_deligne(piece.stalk, EigConvention::e_alpha);
      } else {
        t.cells[{0, j0}] += piece.cohomology.H0;
        t.cells[{1, j0}] += piece.cohomology.H1;
        t.cells[{2, j0}] += piece.cohomology.H2;
      }
    }
  }
  for (auto it = t.cells.begin(); it != t.cells.end();)
    it = it->second.empty() ? t.cells.erase(it) : std::next(it);
  return t;
}

static HdKey conj_key(const HdKey& k) { return {k.q, k.p, conjugate_eig(k.eig)}; }

std::map<int, HodgeDeligneDiagram> hvan_from_d2(const E2Table& t,
                                                const std::map<HdKey, long>& ranks) {
  const int n = t.n;
  HodgeDeligneDiagram lo = t.cell(0, n - 1), mid = t.cell(1, n - 1), top = t.cell(0, n),
                      hi = t.cell(2, n - 1);
  for (const auto& [k, r] : ranks) {
    if (r == 0) continue;
    top.remove(k, r);
    hi.remove(k, r);
  }
  std::map<int, HodgeDeligneDiagram> out;
  if (!lo.empty()) out[n - 1] = lo;
  HodgeDeligneDiagram hn = mid + top;
  if (!hn.empty()) out[n] = hn;
  if (!hi.empty()) out[n + 1] = hi;
  return out;
}

std::vector<D2Solution> solve_d2(const E2Table& t, const std::vector<Constraint>& constraints,
                                 const FiberHodge& fiber) {
  const HodgeDeligneDiagram& src = t.cell(0, t.n);
  const HodgeDeligneDiagram& dst = t.cell(2, t.n - 1);
  std::vector<std::pair<HdKey, long>> slots;
  for (const auto& [k, m] : src.entries()) {
    long cap = std::min(m, dst.mult(k));
    if (cap > 0) slots.push_back({k, cap});
  }
  std::vector<D2Solution> out;
  std::map<HdKey, long> cur;
  std::function<void(size_t)> rec = [&](size_t i) {
    if (i == slots.size()) {
      for (const auto& [k, r] : cur)
        if (r != (cur.count(conj_key(k)) ? cur.at(conj_key(k)) : 0)) return;
      D2Solution s;
      for (const auto& [k, r] : cur) {
        s.rank += r;
        if (r) s.cell_ranks[k] = r;
      }
      s.hvan = hvan_from_d2(t, s.cell_ranks);
      for (const auto& c : constraints) {
        if (c.kind == ConstraintKind::d2_rank && s.rank != c.value) return;
        if (c.kind == ConstraintKind::hodge_cap) {
          auto it = s.hvan.find(c.k);
          long got = it == s.hvan.end() ? 0 : it->second.count_F(c.p);
          if (got > fiber.get(c.p, c.k - c.p) + c.slack) return;
        }
      }
      out.push_back(std::move(s));
      return;
    }
    for (long r = 0; r <= slots[i].second; ++r) {
      cur[slots[i].first] = r;
      rec(i + 1);
    }
    cur.erase(slots[i].first);
  };
  rec(0);
  if (out.empty()) throw InconsistencyError("no d2 rank satisfies the constraints");
  return out;
}

namespace {

struct DegreeOption {
  DegreeData data;
  HodgeDeligneDiagram x0_partial;
  HodgeDeligneDiagram pushed;  // lands in H^{k+1}(X_0)
  std::map<std::string, long> params;
};

}  // namespace

static std::vector<DegreeOption> degree_options(const VsInput& in, int k, std::string& why) {
  const HodgeDeligneDiagram van = in.hvan.count(k) ? in.hvan.at(k) : HodgeDeligneDiagram{};
  std::vector<DegreeOption> opts;
  // unipotent strings are centered at weight k+1: length L means top weight k+L
  HodgeDeligneDiagram vu = van.unipotent_part(), vn = van.non_unipotent_part();
  if (!check_pq_symmetry(van)) {
    why = "H^" + std::to_string(k) + "_van is not p<->q symmetric";
    return opts;
  }
  std::vector<LimString> ustr;
  HodgeDeligneDiagram uleft;
  {
    std::map<HdKey, long> rem(vu.entries().begin(), vu.entries().end());
    while (true) {
      int wmax = -1;
      for (const auto& [key, m] : rem)
        if (m > 0) wmax = std::max(wmax, key.p + key.q);
      if (wmax <= k) break;
      const int len = wmax - k;  // cells at weights wmax, wmax-2, ..., 2k+2-wmax
      for (auto& [key, m] : rem) {
        if (m <= 0 || key.p + key.q != wmax) continue;
        long t = m;
        for (int j = 0; j < len; ++j) {
          auto it = rem.find({key.p - j, key.q - j, key.eig});
          if (it == rem.end() || it->second < t) {
            why = "H^" + std::to_string(k) + "_van has a broken unipotent N-string at (" +
                  std::to_string(key.p) + "," + std::to_string(key.q) + ")";
            return opts;
          }
          it->second -= t;
        }
        ustr.push_back({key, len, t});
      }
    }
    for (const auto& [key, m] : rem)
      if (m > 0) uleft.add(key, m);
  }
  long c = 0;
  int mid = -1;
  for (const auto& [key, m] : uleft.entries()) {
    if (key.p != key.q || 2 * key.p != k || k != in.n || in.n % 2) {
      why = "H^" + std::to_string(k) + "_van has an unpaired class (" + std::to_string(key.p) +
            "," + std::to_string(key.q) + ")";
      return opts;
    }
    c += m;
    mid = key.p;
  }
  if (c > in.total_space_nodes) {
    why = "invariant phantom classes exceed the number of total-space nodes";
    return opts;
  }
  const bool equality = in.n == 2 && k == 2 && in.components == 1;
  if (equality && c != in.total_space_nodes) {
    why = "rho_a + rho_b must equal the number of total-space nodes";
    return opts;
  }
  // Non-unipotent: centered at weight k.
  std::vector<LimString> nstr;
  {
    std::map<HdKey, long> rem(vn.entries().begin(), vn.entries().end());
    while (true) {
      int wmax = -1;
      for (const auto& [key, m] : rem)
        if (m > 0) wmax = std::max(wmax, key.p + key.q);
      if (wmax < 0) break;
      if (wmax < k) {
        why = "H^" + std::to_string(k) + "_van has non-unipotent classes below the center";
        return opts;
      }
      const int len = wmax - k + 1;
      for (auto& [key, m] : rem) {
        if (m <= 0 || key.p + key.q != wmax) continue;
        long t = m;
        for (int j = 0; j < len; ++j) {
          auto it = rem.find({key.p - j, key.q - j, key.eig});
          if (it == rem.end() || it->second < t) {
            why = "H^" + std::to_string(k) + "_van has a broken non-unipotent N-string";
            return opts;
          }
          it->second -= t;
        }
        nstr.push_back({key, len, t});
      }
    }
  }
  // delta candidates: length-1 unipotent strings (pure weight k+1), one unknown per conjugate class
  std::vector<std::pair<HdKey, long>> classes;
  for (const auto& s : ustr) {
    if (s.length != 1) continue;
    HdKey cj = conj_key(s.top);
    if (cj < s.top) continue;
    if (!(cj == s.top)) {
      long other = 0;
      for (const auto& o : ustr)
        if (o.length == 1 && o.top == cj) other = o.mult;
      if (other != s.mult) {
        why = "asymmetric delta candidates in degree " + std::to_string(k);
        return opts;
      }
    }
    classes.push_back({s.top, s.mult});
  }

  std::vector<long> choice(classes.size(), 0);
  std::function<void(size_t)> rec = [&](size_t i) {
    if (i < classes.size()) {
      for (long d = 0; d <= classes[i].second; ++d) {
        choice[i] = d;
        rec(i + 1);
      }
      return;
    }
    for (long rb = 0; rb <= c; ++rb) {
      DegreeOption o;
      DegreeData& dd = o.data;
      dd.k = k;
      dd.van = van;
      dd.leftover = c;
      dd.rho_b = rb;
      dd.rho_a = c - rb;
      HodgeDeligneDiagram bottoms;
      for (size_t j = 0; j < classes.size(); ++j) {
        if (!choice[j]) continue;
        dd.delta_ranks[classes[j].first] = choice[j];
        const HdKey& key = classes[j].first;
        o.pushed.add(key, choice[j]);
        dd.delta_rank += choice[j];
        if (!(conj_key(key) == key)) {
          o.pushed.add(conj_key(key), choice[j]);
          dd.delta_rank += choice[j];
        }
      }
      for (const auto& s : ustr) {
        long t = s.mult;
        if (s.length == 1) {
          HdKey rep = std::min(s.top, conj_key(s.top));
          auto it = dd.delta_ranks.find(rep);
          if (it != dd.delta_ranks.end()) t -= it->second;
        }
        if (t <= 0) continue;
        LimString ls{s.top, s.length + 1, t};
        dd.lim_strings.push_back(ls);
        for (int j = 0; j <= s.length; ++j) dd.lim.add(s.top.p - j, s.top.q - j, s.top.eig, t);
        bottoms.add(s.top.p - s.length, s.top.q - s.length, s.top.eig, t);
      }
      for (const auto& s : nstr) {
        dd.lim_strings.push_back(s);
        for (int j = 0; j < s.length; ++j) dd.lim.add(s.top.p - j, s.top.q - j, s.top.eig, s.mult);
      }
      std::set<int> ps;
      for (const auto& [pq, h] : in.fiber.h)
        if (pq.first + pq.second == k) ps.insert(pq.first);
      for (const auto& [key, m] : dd.lim.entries()) ps.insert(key.p);
      std::map<int, long> pure;
      bool bad = false;
      for (int p : ps) {
        long v = in.fiber.get(p, k - p) - dd.lim.count_F(p);
        if (v < 0) bad = true;
        pure[p] = v;
      }
      if (bad) continue;
      for (const auto& [p, v] : pure)
        if ((pure.count(k - p) ? pure.at(k - p) : 0) != v) bad = true;
      if (bad) continue;
      if (c > 0 && dd.rho_a > (pure.count(mid) ? pure.at(mid) : 0)) continue;
      HodgeDeligneDiagram x0 = bottoms;
      for (const auto& [p, v] : pure)
        if (v > 0) {
          dd.lim.add(p, k - p, 0, v);
          x0.add(p, k - p, 0, v);
        }
      if (dd.rho_a) x0.remove({mid, mid, 0}, dd.rho_a);
      if (rb) o.pushed.add(mid, mid, 0, rb);
      int longest = 0;
      for (const auto& s : dd.lim_strings) longest = std::max(longest, s.length);
      if (longest == 0 && !dd.lim.empty()) longest = 1;
      dd.max_lim_string = longest;
      o.x0_partial = x0;
      if (!classes.empty()) o.params["rk_delta_" + std::to_string(k)] = dd.delta_rank;
      if (c > 0) o.params["rho_b"] = rb;
      opts.push_back(std::move(o));
    }
  };
  rec(0);
  if (opts.empty()) why = "no consistent limit structure in degree " + std::to_string(k);
  return opts;
}

std::string AffineRelation::str() const {
  std::string s = quantity + " = ";
  if (slope == 1) s += param;
  else if (slope == -1) s += "-" + param;
  else s += std::to_string(slope) + "*" + param;
  if (intercept > 0) s += " + " + std::to_string(intercept);
  if (intercept < 0) s += " - " + std::to_string(-intercept);
  return s;
}

static std::map<std::string, long> quantities(const VsSolution& s) {
  std::map<std::string, long> q;
  for (const auto& [k, d] : s.degrees) {
    const std::string ks = std::to_string(k);
    for (const auto& [key, m] : d.x0.entries())
      q["h^{" + std::to_string(key.p) + "," + std::to_string(key.q) + "}(H^" + ks + "(X0))"] += m;
    for (const auto& [key, m] : d.lim.entries())
      q["h^{" + std::to_string(key.p) + "," + std::to_string(key.q) + "}(H^" + ks + "_lim)"] += m;
  }
  return q;
}

static std::vector<AffineRelation> fit_relations(
    const std::vector<std::map<std::string, long>>& rows, const std::vector<std::string>& free) {
  std::vector<AffineRelation> out;
  if (free.size() != 1 || rows.size() < 2) return out;
  const std::string& param = free[0];
  std::set<std::string> names;
  for (const auto& r : rows)
    for (const auto& [k, v] : r) names.insert(k);
  auto get = [](const std::map<std::string, long>& r, const std::string& k) {
    auto it = r.find(k);
    return it == r.end() ? 0L : it->second;
  };
  for (const auto& name : names) {
    if (name == param) continue;
    const auto& r0 = rows[0];
    const auto* r1 = &rows[0];
    for (const auto& r : rows)
      if (get(r, param) != get(r0, param)) r1 = &r;
    long dx = get(*r1, param) - get(r0, param);
    long dy = get(*r1, name) - get(r0, name);
    if (dx == 0 || dy == 0 || dy % dx) continue;
    long slope = dy / dx;
    long icpt = get(r0, name) - slope * get(r0, param);
    bool all = std::all_of(rows.begin(), rows.end(), [&](const auto& r) {
      return get(r, name) == slope * get(r, param) + icpt;
    });
    if (all) out.push_back({name, param, slope, icpt});
  }
  return out;
}

static std::vector<std::string> free_params_of(const std::vector<std::map<std::string, long>>& ps) {
  std::set<std::string> names;
  for (const auto& p : ps)
    for (const auto& [k, v] : p) names.insert(k);
  std::vector<std::string> out;
  for (const auto& n : names) {
    std::set<long> vals;
    for (const auto& p : ps) vals.insert(p.count(n) ? p.at(n) : 0);
    if (vals.size() > 1) out.push_back(n);
  }
  return out;
}

VsFamily vanishing_sequence_solve(const VsInput& in) {
  if (in.n < 1) throw InputError("n must be >= 1");
  if (in.total_space_nodes < 0) throw InputError("total_space_nodes must be >= 0");
  int kmax = 2 * in.n;
  for (const auto& [k, d] : in.hvan) {
    if (k < 0) throw InputError("negative degree in H_van");
    kmax = std::max(kmax, k + 1);
  }
  std::vector<std::vector<DegreeOption>> per(kmax + 1);
  for (int k = 0; k <= kmax; ++k) {
    std::string why;
    per[k] = degree_options(in, k, why);
    if (per[k].empty()) throw InconsistencyError(why);
  }
  VsFamily fam;
  std::vector<size_t> idx(per.size(), 0);
  std::function<void(size_t)> rec = [&](size_t k) {
    if (k < per.size()) {
      for (size_t i = 0; i < per[k].size(); ++i) {
        idx[k] = i;
        rec(k + 1);
      }
      return;
    }
    VsSolution s;
    for (size_t j = 0; j < per.size(); ++j) {
      const DegreeOption& o = per[j][idx[j]];
      DegreeData d = o.data;
      d.x0 = o.x0_partial;
      if (j > 0) d.x0 += per[j - 1][idx[j - 1]].pushed;
      if (!d.van.empty() || !d.lim.empty() || !d.x0.empty()) s.degrees[int(j)] = d;
      for (const auto& [name, v] : o.params) s.params[name] = v;
    }
    if (s.degrees.count(in.n)) s.type = s.degrees.at(in.n).max_lim_string;
    for (const auto& c : in.constraints) {
      auto deg = s.degrees.find(c.k);
      switch (c.kind) {
        case ConstraintKind::x0_rank:
          if ((deg == s.degrees.end() ? 0 : deg->second.x0.total()) != c.value) return;
          break;
        case ConstraintKind::delta_rank:
          if ((deg == s.degrees.end() ? 0 : deg->second.delta_rank) != c.value) return;
          break;
        case ConstraintKind::rho_b:
          if ((s.params.count("rho_b") ? s.params.at("rho_b") : 0) != c.value) return;
          break;
        case ConstraintKind::lim_type:
          if (s.type != c.value) return;
          break;
        default: break;
      }
    }
    fam.members.push_back(std::move(s));
  };
  rec(0);
  if (fam.members.empty())
    throw InconsistencyError("no vanishing-sequence solution satisfies the constraints");
  std::vector<std::map<std::string, long>> ps, rows;
  for (const auto& m : fam.members) {
    ps.push_back(m.params);
    auto q = quantities(m);
    for (const auto& [k, v] : m.params) q[k] = v;
    rows.push_back(q);
  }
  fam.free_params = free_params_of(ps);
  fam.relations = fit_relations(rows, fam.free_params);
  return fam;
}

DiscrepancyReport cs_discrepancy(const DegenerationScenario& sc, const VsSolution& sol) {
  DiscrepancyReport r;
  r.bound = sc.total_space_nodes;
  if (sc.n % 2 == 0) {
    auto it = sol.degrees.find(sc.n);
    if (it != sol.degrees.end()) {
      r.rho_a = it->second.rho_a;
      r.rho_b = it->second.rho_b;
    }
    r.equality_case = sc.n == 2 && sc.components == 1;
  }
  r.ok = r.rho_a >= 0 && r.rho_b >= 0 && r.rho_a + r.rho_b <= r.bound;
  if (sc.n % 2) r.ok = r.ok && r.rho_a == 0 && r.rho_b == 0;
  if (r.equality_case) r.ok = r.ok && r.rho_a + r.rho_b == r.bound;
  return r;
}

bool genus_bound_check(const DegenerationScenario& sc) {
  std::vector<int> kappas;
  for (const auto& p : sc.s0_points)
    if (p.kappa > 0) kappas.push_back(p.kappa);
  return genus_bound(kappas) <= sc.fiber.get(sc.n, 0);
}

ScenarioReport solve_scenario(const DegenerationScenario& input) {
  if (input.total_space_nodes < 0) throw InputError("total_space_nodes must be >= 0");
  if (input.components < 1) throw InputError("components must be >= 1");
  ScenarioReport rep;
  rep.scenario = node_puncture_enrichment(input);
  const DegenerationScenario& sc = rep.scenario;
  if (sc.kulikov) {
    auto [F, E, V] = *sc.kulikov;
    rep.sheaf = kulikov_sheaf(F, E, V);
  } else {
    rep.sheaf = assemble_h_sheaf(sc.strata, sc.s0_points, sc.n);
  }
  rep.e2 = assemble_e2(sc);
  rep.genus_ok = genus_bound_check(sc);
  std::string last_error;
  for (const auto& d2 : solve_d2(rep.e2, sc.constraints, sc.fiber)) {
    VsInput in{sc.n, d2.hvan, sc.fiber, sc.total_space_nodes, sc.components, sc.constraints};
    VsFamily fam;
    try {
      fam = vanishing_sequence_solve(in);
    } catch (const InconsistencyError& e) {
      last_error = e.what();
      continue;
    }
    for (auto& m : fam.members) {
      ScenarioSolution s{d2, m, cs_discrepancy(sc, m)};
      if (!s.discrepancy.ok) {
        last_error = "Clemens-Schmid discrepancy bound violated";
        continue;
      }
      rep.solutions.push_back(std::move(s));
    }
  }
  if (rep.solutions.empty())
    throw InconsistencyError("scenario '" + sc.name + "' has no solution: " + last_error);
  if (rep.solutions.size() > 1) {
    rep.e2.d2_rank.reset();
    std::set<long> ranks;
    for (const auto& s : rep.solutions) ranks.insert(s.d2.rank);
    if (ranks.size() == 1) rep.e2.d2_rank = *ranks.begin();
  } else {
    rep.e2.d2_rank = rep.solutions[0].d2.rank;
  }
  std::vector<std::map<std::string, long>> ps, rows;
  for (const auto& s : rep.solutions) {
    auto p = s.vs.params;
    p["rk_d2"] = s.d2.rank;
    ps.push_back(p);
    auto q = quantities(s.vs);
    for (const auto& [k, v] : p) q[k] = v;
    q["rho_a"] = s.discrepancy.rho_a;
    rows.push_back(q);
  }
  rep.free_params = free_params_of(ps);
  rep.relations = fit_relations(rows, rep.free_params);
  return rep;
}

KulikovReport kulikov_e2(long F, long E, long V) {
  DegenerationScenario sc;
  sc.name = "kulikov";
  sc.n = 2;
  sc.kulikov = std::array<long, 3>{F, E, V};
  sc.fiber = FiberHodge::k3();
  sc.constraints.push_back({ConstraintKind::d2_rank, 0, 0, V - 1, 0, "topological"});
  ScenarioReport rep = solve_scenario(sc);
  if (rep.solutions.size() != 1)
    throw InconsistencyError("Kulikov scenario is not uniquely determined");
  KulikovReport k;
  k.e2 = rep.e2;
  k.hvan = rep.solutions[0].d2.hvan;
  k.vs = rep.solutions[0].vs;
  auto it2 = k.vs.degrees.find(2), it4 = k.vs.degrees.find(4);
  k.h2_x0 = it2 == k.vs.degrees.end() ? 0 : it2->second.x0.total();
  k.h4_x0 = it4 == k.vs.degrees.end() ? 0 : it4->second.x0.total();
  return k;
}

std::string type_name(int len) {
  switch (len) {
    case 0:
    case 1: return "I";
    case 2: return "II";
    case 3: return "III";
  }
  return "length-" + std::to_string(len);
}

}  // namespace vancalc
