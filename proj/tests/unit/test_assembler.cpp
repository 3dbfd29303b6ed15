#include <gtest/gtest.h>

#include "test_support.hpp"
#include "vancalc/assembler.hpp"
#include "vancalc/doublebox.hpp"
#include "vancalc/scenario.hpp"

using namespace vancalc;
using vancalc::testing::registry;
using vancalc::testing::scenario_file;

namespace {

ScenarioReport solve_file(const std::string& name) {
  return solve_scenario(scenario_from_json(scenario_file(name), registry()));
}

DegenerationScenario line_with(const std::vector<int>& kappas, long nodes = 0) {
  json sc = {{"n", 2}, {"fiber_hodge", "k3"}, {"s0_points", json::array()}};
  json punct = json::array();
  for (int k : kappas) {
    punct.push_back({{"kind", "J_kappa"}, {"kappa", k}});
    sc["s0_points"].push_back({{"jk", k}});
  }
  sc["strata"] = json::array({json{{"punctures", punct}, {"nodes", nodes}}});
  return scenario_from_json(sc, registry());
}

}  // namespace

TEST(FiberHodge, Presets) {
  EXPECT_EQ(FiberHodge::k3().get(1, 1), 20);
  EXPECT_EQ(FiberHodge::k3().betti(2), 22);
  EXPECT_EQ(FiberHodge::cubic_fivefold().get(2, 3), 21);
}

TEST(AssembleE2, PinchPointK3) {
  ScenarioReport rep = solve_file("k3_pinch_points");
  HodgeDeligneDiagram e02;
  e02.add(1, 1, rat(1, 2), 4);
  HodgeDeligneDiagram e11;
  e11.add(1, 2, rat(0));
  e11.add(2, 1, rat(0));
  EXPECT_EQ(rep.e2.cell(0, 2), e02);
  EXPECT_EQ(rep.e2.cell(1, 1), e11);
  EXPECT_TRUE(rep.e2.cell(0, 1).empty());
  EXPECT_TRUE(rep.e2.cell(2, 1).empty());
}

TEST(AssembleE2, EmptySingularLocus) {
  DegenerationScenario sc;
  sc.fiber = FiberHodge::k3();
  E2Table t = assemble_e2(sc);
  for (const auto& [ij, d] : t.cells) EXPECT_TRUE(d.empty());
  EXPECT_EQ(t.euler(), 0);
}

TEST(SolveD2, ZeroTargetForcesZeroRank) {
  ScenarioReport rep = solve_scenario(line_with({1, 1, 3, 1}));
  ASSERT_FALSE(rep.solutions.empty());
  for (const auto& s : rep.solutions) EXPECT_EQ(s.d2.rank, 0);
}

TEST(SolveD2, CollisionCancellationMatchesHandCount) {
  const std::vector<std::pair<std::string, std::vector<int>>> cases{
      {"k3_collision_i", {1, 1, 1, 1}}, {"k3_collision_ii", {1, 1, 2}}, {"k3_collision_iii", {1, 3}},
      {"k3_collision_iii_prime", {2, 2}}, {"k3_collision_iv", {4}}};
  for (const auto& [name, kappas] : cases) {
    ScenarioReport rep = solve_file(name);
    ASSERT_FALSE(rep.solutions.empty()) << name;
    for (const auto& s : rep.solutions)
      EXPECT_EQ(s.d2.hvan.at(2), vancalc::testing::collision_hvan2(kappas)) << name;
  }
}

TEST(SolveD2, EigenvalueClassesNeverMix) {
  // Two J_2 points: the (2,2) cancellation uses invariant classes only.
  ScenarioReport rep = solve_file("k3_collision_iii_prime");
  ASSERT_EQ(rep.solutions.size(), 1u);
  for (const auto& [key, r] : rep.solutions[0].d2.cell_ranks)
    if (r > 0) EXPECT_EQ(key.eig, rat(0));
}

TEST(SolveD2, KulikovRank) {
  auto k = kulikov_e2(4, 6, 4);
  EXPECT_EQ(*k.e2.d2_rank, 3);
}

TEST(VanishingSequence, TypesAndFreeParameters) {
  ScenarioReport a = solve_file("k3_pinch_points");
  ASSERT_EQ(a.solutions.size(), 1u);
  EXPECT_EQ(type_name(a.solutions[0].vs.type), "II");
  const auto& x0 = a.solutions[0].vs.degrees.at(2).x0;
  EXPECT_EQ(x0.count_pq(1, 0), 1);
  EXPECT_EQ(x0.count_pq(0, 1), 1);
  ScenarioReport open = solve_file("k3_pinch_points_open");
  EXPECT_EQ(open.solutions.size(), 2u);
  EXPECT_FALSE(open.free_params.empty());
}

TEST(VanishingSequence, ZeroVanishingCohomology) {
  VsInput in;
  in.n = 2;
  in.fiber = FiberHodge::k3();
  VsFamily f = vanishing_sequence_solve(in);
  ASSERT_EQ(f.members.size(), 1u);
  for (const auto& [k, d] : f.members[0].degrees) EXPECT_EQ(d.x0, d.lim) << k;
}

TEST(VanishingSequence, DoubleBoxRelation) {
  for (auto [which, rho] : {std::pair{DbCase::dgt4, 0L}, std::pair{DbCase::deq4, 2L}}) {
    DoubleboxReport rep = doublebox_report(which, 1);
    EXPECT_EQ(rep.rho_d, rho);
    bool found = false;
    for (const auto& r : rep.relations)
      if (r.quantity == "b" && r.param == "a") {
        found = true;
        EXPECT_EQ(r.slope, 1);
        EXPECT_EQ(r.intercept, -rho - 1);
      }
    EXPECT_TRUE(found) << "rho_d " << rho;
  }
}

TEST(Discrepancy, NodalQuartic) {
  for (const char* name : {"k3_nodal_i", "k3_nodal_ii", "k3_nodal_iii", "k3_nodal_iii_prime", "k3_nodal_iv"}) {
    ScenarioReport rep = solve_file(name);
    ASSERT_EQ(rep.solutions.size(), 1u) << name;
    const auto& d = rep.solutions[0].discrepancy;
    EXPECT_EQ(d.rho_a + d.rho_b, 8) << name;
    EXPECT_EQ(d.rho_b, 0) << name;
    EXPECT_TRUE(d.equality_case);
  }
}

TEST(Discrepancy, SmoothTotalSpaceAndOddDimension) {
  ScenarioReport smooth = solve_file("k3_pinch_points");
  EXPECT_EQ(smooth.solutions[0].discrepancy.rho_a, 0);
  EXPECT_EQ(smooth.solutions[0].discrepancy.rho_b, 0);
  ScenarioReport db = solve_scenario(doublebox_scenario(2));
  for (const auto& s : db.solutions) {
    EXPECT_EQ(s.discrepancy.rho_a, 0);
    EXPECT_EQ(s.discrepancy.rho_b, 0);
  }
}

TEST(NodeEnrichment, AddsPunctures) {
  DegenerationScenario sc = line_with({1, 1, 1, 1}, 8);
  DegenerationScenario e = node_puncture_enrichment(sc);
  EXPECT_EQ(e.strata[0].punctures.size(), sc.strata[0].punctures.size() + 8);
  long before = assemble_h_sheaf(sc.strata, {}, 2).total_h1();
  long after = assemble_h_sheaf(e.strata, {}, 2).total_h1();
  EXPECT_EQ(after - before, 8);
  DegenerationScenario none = line_with({1, 1});
  EXPECT_EQ(node_puncture_enrichment(none).strata[0].punctures.size(), 2u);
}

TEST(GenusBoundCheck, Examples) {
  EXPECT_TRUE(genus_bound_check(line_with({4})));
  EXPECT_FALSE(genus_bound_check(line_with({5, 1})));
  DegenerationScenario pg0 = line_with({3, 1});
  pg0.fiber = FiberHodge{};
  pg0.fiber.h = {{{0, 0}, 1}, {{1, 1}, 10}, {{2, 2}, 1}};
  EXPECT_FALSE(genus_bound_check(pg0));
}

TEST(Constraints, Infeasible) {
  DegenerationScenario sc = line_with({2, 2});
  sc.constraints.push_back(Constraint{ConstraintKind::d2_rank, 0, 0, 5, 0, "impossible"});
  EXPECT_THROW(solve_scenario(sc), InconsistencyError);
}
