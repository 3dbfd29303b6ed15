#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "vancalc/curve_sheaves.hpp"
#include "vancalc/spectrum.hpp"

namespace vancalc {

struct FiberHodge {
  std::map<std::pair<int, int>, long> h;
  long get(int p, int q) const;
  long betti(int k) const;
  static FiberHodge k3();
  static FiberHodge cubic_fivefold();
};

// E_2^{i,j} for j in {n-1, n}; only (0,n-1), (1,n-1), (2,n-1), (0,n) can be nonzero.
struct E2Table {
  int n = 2;
  std::map<std::pair<int, int>, HodgeDeligneDiagram> cells;
  std::optional<long> d2_rank;
  const HodgeDeligneDiagram& cell(int i, int j) const;
  long euler() const;  // sum (-1)^{i+j} rk E_2^{i,j}
};

enum class ConstraintKind { d2_rank, hodge_cap, x0_rank, delta_rank, rho_b, lim_type };

struct Constraint {
  ConstraintKind kind = ConstraintKind::d2_rank;
  int k = 0;
  int p = 0;
  long value = 0;
  long slack = 0;
  std::string note;
};

std::string constraint_kind_name(ConstraintKind k);
ConstraintKind parse_constraint_kind(const std::string& s);

struct DegenerationScenario {
  std::string name;
  int n = 2;
  std::vector<CurveStratumConfig> strata;
  std::vector<long> stratum_nodes;  // total-space nodes on each stratum, before enrichment
  std::vector<S0Point> s0_points;
  long total_space_nodes = 0;
  long components = 1;
  FiberHodge fiber;
  std::vector<Constraint> constraints;
  std::optional<std::array<long, 3>> kulikov;  // (F, E, V)
};

E2Table assemble_e2(const DegenerationScenario& sc);

struct D2Solution {
  long rank = 0;
  std::map<HdKey, long> cell_ranks;
  std::map<int, HodgeDeligneDiagram> hvan;  // degree -> H^k_van
};

std::map<int, HodgeDeligneDiagram> hvan_from_d2(const E2Table& t, const std::map<HdKey, long>& ranks);

// All eigenvalue-compatible, p<->q symmetric d2 ranks passing the constraints.
std::vector<D2Solution> solve_d2(const E2Table& t, const std::vector<Constraint>& constraints,
                                 const FiberHodge& fiber);

struct LimString {
  HdKey top;
  int length = 1;  // number of cells
  long mult = 1;
};

struct DegreeData {
  int k = 0;
  HodgeDeligneDiagram van, lim, x0;
  std::vector<LimString> lim_strings;
  std::map<HdKey, long> delta_ranks;  // on length-1 van strings (one representative per conjugate pair)
  long delta_rank = 0;
  long rho_a = 0, rho_b = 0;
  long leftover = 0;  // invariant (m,m) classes outside the N-string structure
  int max_lim_string = 0;
};

struct VsSolution {
  std::map<int, DegreeData> degrees;
  std::map<std::string, long> params;  // rk_delta_k, rho_b
  int type = 0;                        // longest limit N-string in degree n
};

struct AffineRelation {
  std::string quantity;
  std::string param;
  long slope = 0;
  long intercept = 0;
  std::string str() const;
};

struct VsFamily {
  std::vector<VsSolution> members;
  std::vector<std::string> free_params;
  std::vector<AffineRelation> relations;
};

struct VsInput {
  int n = 2;
  std::map<int, HodgeDeligneDiagram> hvan;
  FiberHodge fiber;
  long total_space_nodes = 0;
  long components = 1;
  std::vector<Constraint> constraints;
};

VsFamily vanishing_sequence_solve(const VsInput& in);

struct DiscrepancyReport {
  long rho_a = 0, rho_b = 0;
  long bound = 0;
  bool equality_case = false;
  bool ok = true;
};

DiscrepancyReport cs_discrepancy(const DegenerationScenario& sc, const VsSolution& sol);

// Turns stratum_nodes into total-space-node punctures (monodromy (-1)^n).
DegenerationScenario node_puncture_enrichment(const DegenerationScenario& sc);

bool genus_bound_check(const DegenerationScenario& sc);

struct ScenarioSolution {
  D2Solution d2;
  VsSolution vs;
  DiscrepancyReport discrepancy;
};

struct ScenarioReport {
  DegenerationScenario scenario;  // after enrichment
  SheafDescription sheaf;
  E2Table e2;
  std::vector<ScenarioSolution> solutions;
  std::vector<std::string> free_params;
  std::vector<AffineRelation> relations;
  bool genus_ok = true;
};

ScenarioReport solve_scenario(const DegenerationScenario& sc);

struct KulikovReport {
  E2Table e2;
  std::map<int, HodgeDeligneDiagram> hvan;
  long h2_x0 = 0;
  long h4_x0 = 0;
  VsSolution vs;
};

KulikovReport kulikov_e2(long F, long E, long V);

std::string type_name(int max_string_length);

}  // namespace vancalc
