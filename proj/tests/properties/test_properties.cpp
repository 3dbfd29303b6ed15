#include <gtest/gtest.h>

#include "test_support.hpp"

using namespace vancalc::testing;

namespace {

constexpr long kCases = 1000;
constexpr uint64_t kSeed = 20240611;

void expect_ok(const SuiteResult& r) {
  EXPECT_GE(r.cases, r.name == "torsion exponents of D4" ? 1 : kCases);
  EXPECT_TRUE(r.ok()) << r.name << ": " << r.failures << " failures, first: " << r.first_failure;
}

}  // namespace

TEST(Properties, ConvolutionCommutative) { expect_ok(prop_convolution_commutative(kSeed, kCases)); }
TEST(Properties, ConvolutionAssociative) { expect_ok(prop_convolution_associative(kSeed, kCases)); }
TEST(Properties, ForgetWeightsHomomorphism) { expect_ok(prop_forget_homomorphism(kSeed, kCases)); }
TEST(Properties, StarPairingBounds) { expect_ok(prop_star_bounds(kSeed, kCases)); }
TEST(Properties, CatalogPqSymmetry) { expect_ok(prop_catalog_pq_symmetry(kSeed, kCases)); }
TEST(Properties, EulerConservation) { expect_ok(prop_euler_conservation(kSeed, kCases)); }
TEST(Properties, AInfinityRIndependence) { expect_ok(prop_a_inf_r_independence(kSeed, kCases)); }
TEST(Properties, TorsionD4) { expect_ok(prop_torsion_d4()); }
TEST(Properties, BrieskornPhamMultiplicity) { expect_ok(prop_bp_multiplicity(kSeed, kCases)); }
