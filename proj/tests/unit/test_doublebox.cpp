#include <gtest/gtest.h>

#include "test_support.hpp"
#include "vancalc/doublebox.hpp"

using namespace vancalc;

namespace {

Monomial mono(std::initializer_list<std::pair<int, int>> powers) {
  Monomial m{};
  for (auto [v, e] : powers) m[v] += e;
  return m;
}

}  // namespace

TEST(Kinematics, MomentumConservation) {
  for (DbCase c : {DbCase::dgt4, DbCase::deq4}) {
    KinematicData k = sample_kinematics(1, c);
    EXPECT_EQ(k.dim, c == DbCase::dgt4 ? 5 : 4);
    for (int i = 0; i < k.dim; ++i) {
      Rational s = 0;
      for (int j = 1; j <= 6; ++j) s += k.p[j][i];
      EXPECT_EQ(s, 0);
    }
  }
}

TEST(Kinematics, FourDimensionalDependency) {
  KinematicData k = sample_kinematics(1, DbCase::deq4);
  ASSERT_TRUE(k.alphas.has_value());
  const auto& a = *k.alphas;
  for (int i = 0; i < k.dim; ++i)
    EXPECT_EQ(k.p[4][i], a[0] * k.p[2][i] + a[1] * k.p[3][i] + a[2] * k.p[5][i] + a[3] * k.p[6][i]);
}

TEST(Kinematics, Deterministic) {
  KinematicData a = sample_kinematics(5, DbCase::dgt4), b = sample_kinematics(5, DbCase::dgt4);
  EXPECT_EQ(a.p, b.p);
  EXPECT_EQ(a.m2, b.m2);
}

TEST(Symanzik, DisplayedCoefficients) {
  KinematicData k = sample_kinematics(2, DbCase::dgt4);
  SymanzikPolys s = build_symanzik(k);
  // p_2^2 plus the mass terms from Z_012 * sum m_i^2 Z_i
  EXPECT_EQ(s.Qp.coeff(mono({{0, 1}, {1, 1}})), dot(k.p[2], k.p[2]) + k.m2[0] + k.m2[1]);
  EXPECT_EQ(s.Qp.coeff(mono({{0, 2}})), k.m2[0]);
  EXPECT_EQ(s.U.terms().size(), 15u);
  EXPECT_EQ(s.P.coeff(mono({{3, 2}})), 0);
  EXPECT_TRUE(s.F.homogeneous());
  EXPECT_EQ(s.F.degree(), 3);
  Poly euler;
  for (int i = 0; i < kPolyVars; ++i) euler += Poly::var(i) * s.F.diff(i);
  EXPECT_EQ(euler, Rational(3) * s.F);
}

TEST(Symanzik, FactorStructure) {
  KinematicData k = sample_kinematics(3, DbCase::dgt4);
  SymanzikPolys s = build_symanzik(k);
  Poly z0123 = Poly::var(0) + Poly::var(1) + Poly::var(2) + Poly::var(3);
  Poly z3456 = Poly::var(3) + Poly::var(4) + Poly::var(5) + Poly::var(6);
  EXPECT_EQ(s.F, z0123 * s.Q + z3456 * s.Qp + Poly::var(3) * s.P);
  EXPECT_TRUE(s.Q.uses_only({4, 5, 6}));
  EXPECT_TRUE(s.Qp.uses_only({0, 1, 2}));
}

TEST(SingularLocus, BothCases) {
  for (DbCase c : {DbCase::dgt4, DbCase::deq4}) {
    KinematicData k = sample_kinematics(1, c);
    SingularLocusReport r = verify_singular_locus(k, build_symanzik(k));
    EXPECT_TRUE(r.partials_vanish_on_C);
    EXPECT_TRUE(r.partials_vanish_on_Cp);
    EXPECT_TRUE(r.euler_identity);
    EXPECT_EQ(r.pinch_C.points, 6);
    EXPECT_EQ(r.pinch_Cp.points, 6);
    if (c == DbCase::dgt4) {
      EXPECT_TRUE(r.nodes.empty());
    } else {
      ASSERT_EQ(r.nodes.size(), 2u);
      for (const auto& n : r.nodes) {
        EXPECT_TRUE(n.partials_vanish);
        EXPECT_TRUE(n.u_vanishes);
        EXPECT_TRUE(n.z3_nonzero);
      }
    }
  }
}

TEST(EvaluationMap, RanksAcrossSeeds) {
  for (uint64_t seed : {1, 2, 3}) {
    KinematicData g = sample_kinematics(seed, DbCase::dgt4);
    EvReport r = evaluation_map_rank(g, build_symanzik(g));
    EXPECT_EQ(r.dim_S2, 28);
    EXPECT_EQ(r.dim_0123sq, 10);
    EXPECT_EQ(r.dim_3456sq, 10);
    EXPECT_EQ(r.dim_overlap, 1);
    EXPECT_EQ(r.dim_JF, 7);
    EXPECT_EQ(r.dim_ker_ev, 9);
    EXPECT_EQ(r.dim_ker_ev, r.dim_JF + 2);
    EXPECT_EQ(r.a, 3);
    EXPECT_EQ(r.a, r.codomain - (28 - r.dim_ker_ev));
    EXPECT_TRUE(r.delta_unique);
    EXPECT_TRUE(r.g_ok);
    EXPECT_TRUE(r.gp_ok);
    KinematicData f = sample_kinematics(seed, DbCase::deq4);
    EXPECT_EQ(evaluation_map_rank(f, build_symanzik(f)).a, 4);
  }
}

TEST(DoubleboxReport, HodgeNumbers) {
  DoubleboxReport g = doublebox_report(DbCase::dgt4, 1);
  EXPECT_EQ(g.rank_V, 20);
  EXPECT_EQ(g.h22_x0, 9);
  EXPECT_EQ(g.h32_x0, 2);
  EXPECT_EQ(g.b, 2);
  EXPECT_EQ(g.f_level, 1);
  EXPECT_EQ(g.rho_d, 0);
  DoubleboxReport f = doublebox_report(DbCase::deq4, 1);
  EXPECT_EQ(f.rank_V, 20);
  EXPECT_EQ(f.h22_x0, 10);
  EXPECT_EQ(f.h32_x0, 1);
  EXPECT_EQ(f.b, 1);
  EXPECT_EQ(f.b, f.ev.a - f.rho_d - 1);
}

TEST(DoubleboxScenario, E2Table) {
  ScenarioReport rep = solve_scenario(doublebox_scenario(2));
  EXPECT_EQ(rep.e2.cell(1, 4).non_unipotent_part().total(), 20);
  EXPECT_EQ(rep.e2.cell(0, 5).total(), 14);
}

TEST(QuadExt, Arithmetic) {
  QuadExt x(rat(1), rat(2), rat(3));  // 1 + 2 sqrt 3
  QuadExt y = x * x.conj();
  EXPECT_TRUE((y - QuadExt(rat(-11), rat(0), rat(3))).is_zero());
  EXPECT_TRUE((x * x.inverse() - QuadExt(rat(1), rat(0), rat(3))).is_zero());
}

TEST(QuadraticRoots, Exact) {
  auto r = quadratic_roots(rat(1), rat(0), rat(-2));
  for (const auto& x : r) EXPECT_TRUE((x * x - QuadExt(rat(2), rat(0), rat(2))).is_zero());
}
