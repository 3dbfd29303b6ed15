#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "vancalc/fixtures.hpp"
#include "vancalc/json_io.hpp"

namespace vancalc::testing {

// Weighted spectrum from a JSON array of [alpha, w, mult] triples, e.g. R"([["3/2",2,1]])".
WeightedSpectrum W(const std::string& triples);

// Plain spectrum from a JSON array of [alpha, mult] pairs.
Spectrum S(const std::string& pairs);

const FixtureRegistry& registry();

// Plain spectrum of x_1^{a_1}+...+x_m^{a_m} by enumerating every index tuple.
Spectrum brute_force_bp(const std::vector<int>& exponents);

// Closed forms for the J_kappa series, written out term by term.
WeightedSpectrum jk_closed_form(int kappa);

// Sum over l=1..e-1 of [(1 + l/e, 2)].
WeightedSpectrum cusp_tail(int e);

// Hodge-Deligne diagram of a weighted spectrum under e(alpha), built entry by entry.
HodgeDeligneDiagram hd_by_hand(const WeightedSpectrum& s);

// H^2_van for pinch points collided into J_kappa points on a conic of A_inf points in a K3
// degeneration. E_2^{0,2} is the sum of the J_kappa stalks. The sheaf is j_! L(-1), extended by
// zero at every J point, with L of monodromy -1 exactly at odd kappa. With a punctures of
// monodromy -1 and b of monodromy +1: if a > 0, E_2^{1,1} is IH^1 of the double cover,
// (a/2-1)[(1,2)+(2,1)], plus b weight-zero classes (1,1); if a = 0, E_2^{1,1} = (b-1)(1,1),
// E_2^{2,1} = Q(-2), and the K3 constraint cancels one (2,2) class of E_2^{0,2}.
HodgeDeligneDiagram collision_hvan2(const std::vector<int>& kappas);

// Loads a scenario file from the data directory.
json scenario_file(const std::string& name);

struct Rng {
  std::mt19937_64 gen;
  explicit Rng(uint64_t seed) : gen(seed) {}
  long uniform(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(gen); }
  Rational rational(long max_num, long max_den);  // in [-max_num, max_num] / [1, max_den]
  Rational unit_fraction(long max_den);           // in [0, 1)
};

WeightedSpectrum random_weighted(Rng& rng, int terms);
std::vector<EigenEntry> random_eigen_entries(Rng& rng, int count);
// A spectrum obtained by pairing random eigen entries with their own vertical exponents.
WeightedSpectrum random_paired_family(Rng& rng);

struct SuiteResult {
  std::string name;
  long cases = 0;
  long failures = 0;
  std::string first_failure;
  bool ok() const { return failures == 0; }
};

SuiteResult prop_convolution_commutative(uint64_t seed, long cases);
SuiteResult prop_convolution_associative(uint64_t seed, long cases);
SuiteResult prop_forget_homomorphism(uint64_t seed, long cases);
SuiteResult prop_star_bounds(uint64_t seed, long cases);
SuiteResult prop_catalog_pq_symmetry(uint64_t seed, long cases);
SuiteResult prop_euler_conservation(uint64_t seed, long cases);
SuiteResult prop_a_inf_r_independence(uint64_t seed, long cases);
SuiteResult prop_torsion_d4();
SuiteResult prop_bp_multiplicity(uint64_t seed, long cases);

std::vector<SuiteResult> all_property_suites(uint64_t seed, long cases);

}  // namespace vancalc::testing
