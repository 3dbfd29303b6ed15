#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "vancalc/assembler.hpp"
#include "vancalc/poly.hpp"

namespace vancalc {

enum class DbCase { dgt4, deq4 };
DbCase parse_db_case(const std::string& s);
std::string db_case_name(DbCase c);

struct KinematicData {
  DbCase which = DbCase::dgt4;
  int dim = 5;
  std::array<std::vector<Rational>, 7> p;  // p[1..6]; p[0] unused
  std::array<Rational, 7> m2;              // m_0^2 .. m_6^2
  uint64_t seed = 0;
  std::optional<std::array<Rational, 4>> alphas;  // (a2, a3, a5, a6) with p4 = sum a_k p_k
};

// Numerators uniform in [-9,9] (0 -> 1), denominators in [1,5], from mt19937_64(seed).
KinematicData sample_kinematics(uint64_t seed, DbCase which);

Rational dot(const std::vector<Rational>& a, const std::vector<Rational>& b);

struct SymanzikPolys {
  Poly F, U, Q, Qp, P;
};

SymanzikPolys build_symanzik(const KinematicData& k);

struct PinchCount {
  long points = 0;         // distinct intersections of the conic with the bordered-Hessian cubic
  long resultant_degree = -1;
  bool squarefree = false;
  bool none_at_infinity = false;
  long hessian_rank_generic = -1;  // at a point of the conic over Q(sqrt d)
};

struct NodeCheck {
  std::array<QuadExt, kPolyVars> coords;
  bool partials_vanish = false;
  bool u_vanishes = false;
  bool z3_nonzero = false;
  long hessian_rank = -1;
};

struct SingularLocusReport {
  bool partials_vanish_on_C = false;
  bool partials_vanish_on_Cp = false;
  bool euler_identity = false;  // sum Z_i dF/dZ_i = 3F
  PinchCount pinch_C, pinch_Cp;
  std::vector<NodeCheck> nodes;
  std::map<int, long> hilbert;  // dim (S/J_F)_d mod a large prime
  std::map<int, long> hilbert_expected;
  bool hilbert_matches = false;
  std::vector<std::string> flags;
  bool ok() const;
};

SingularLocusReport verify_singular_locus(const KinematicData& k, const SymanzikPolys& s);

// Nodes from the footnote quadratic, with the corrected mass combination.
std::vector<std::array<QuadExt, kPolyVars>> node_points(const KinematicData& k);

struct EvReport {
  long dim_S2 = 28;
  long dim_0123sq = 0;
  long dim_3456sq = 0;
  long dim_overlap = 0;  // (0123)^2 intersect (3456)^2
  long dim_JF = 0;
  long dim_A_J = 0;  // (0123)^2 + J_F
  long dim_B_J = 0;
  long dim_A_B_J = 0;
  long dim_intersection = 0;  // ((0123)^2 + J_F) intersect ((3456)^2 + J_F)
  long node_eval_rank = 0;
  long codomain = 0;
  long dim_ker_ev = 0;
  long a = 0;
  bool delta_unique = false;  // one cross-term-free combination of partials, equal to dF' - dF
  bool g_ok = false;          // dF' - U in (3456)^2
  bool gp_ok = false;         // dF - U in (0123)^2
  std::string delta_F;
};

EvReport evaluation_map_rank(const KinematicData& k, const SymanzikPolys& s);

struct DoubleboxReport {
  DbCase which = DbCase::dgt4;
  uint64_t seed = 0;
  uint64_t seed_used = 0;
  long resamples = 0;
  KinematicData kin;
  EvReport ev;
  SingularLocusReport sing;
  long rho_d = 0;
  long rank_V = 0;  // rank of the eigenvalue -1 part of H^5_van
  long h22_x0 = 0, h32_x0 = 0, h33_x6 = 0;
  long b = 0;
  long f_level = 0;
  std::vector<AffineRelation> relations;  // with a left free
  ScenarioReport scenario;                // with a fixed to the computed value
};

DegenerationScenario doublebox_scenario(long rho_d);

DoubleboxReport doublebox_report(DbCase which, uint64_t seed);

}  // namespace vancalc
