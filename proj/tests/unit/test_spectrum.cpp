#include <gtest/gtest.h>

#include "test_support.hpp"
#include "vancalc/spectrum.hpp"
#include "vancalc/sss.hpp"

using namespace vancalc;
using vancalc::testing::S;
using vancalc::testing::W;

TEST(Rational, CanonicalFormAndParsing) {
  EXPECT_EQ(to_string(rat(6, 4)), "3/2");
  EXPECT_EQ(to_string(rat(-4, 2)), "-2");
  EXPECT_EQ(parse_rational("10/4"), rat(5, 2));
  EXPECT_EQ(floor_int(rat(-1, 2)), -1);
  EXPECT_EQ(frac(rat(-1, 3)), rat(2, 3));
  EXPECT_THROW(parse_rational("1/0"), InputError);
  EXPECT_THROW(parse_rational("abc"), InputError);
}

TEST(Combine, SumAndCancellation) {
  EXPECT_EQ(S(R"([["1/2",1]])") + S(R"([["1/2",1]])"), S(R"([["1/2",2]])"));
  EXPECT_TRUE((S(R"([["1",1]])") - S(R"([["1",1]])")).empty());
  WeightedSpectrum virt = W(R"([["1/2",0,1]])") - W(R"([["1/2",0,3],["1",2,1]])");
  EXPECT_EQ(virt.mult(rat(1, 2), 0), -2);
  EXPECT_FALSE(virt.effective());
  EXPECT_EQ(virt.negative_part(), W(R"([["1/2",0,2],["1",2,1]])"));
}

TEST(Pairing, Table) {
  EXPECT_EQ(pairing_index(rat(1), rat(1, 2)), 0);
  EXPECT_EQ(pairing_index(rat(1, 2), rat(1, 7)), 1);
  EXPECT_EQ(pairing_index(rat(5, 4), rat(3, 4)), 2);
}

TEST(Star, Examples) {
  EXPECT_EQ(star({rat(5, 4), 1}, {rat(3, 4), 0}), (WKey{rat(2), 3}));
  EXPECT_EQ(star({rat(1), 2}, {rat(1, 2), 0}), (WKey{rat(3, 2), 2}));
  EXPECT_EQ(star({rat(1, 2), 0}, {rat(1, 7), 0}), (WKey{rat(9, 14), 1}));
}

TEST(Convolve, IdentityAndZero) {
  EXPECT_TRUE(convolve(WeightedSpectrum{}, W(R"([["1",2,1]])")).empty());
  EXPECT_EQ(convolve(W(R"([["1",2,3]])"), W(R"([["0",0,1]])")), W(R"([["1",2,3]])"));
}

TEST(VerticalSpectrum, SingleEntries) {
  auto terms = vertical_spectrum({EigenEntry{rat(1), 2, rat(0), 1}}, 1, 4);
  ASSERT_EQ(terms.size(), 4u);
  std::vector<Rational> exps;
  for (const auto& t : terms) {
    EXPECT_EQ(t.alpha, rat(1));
    exps.push_back(t.exponent);
  }
  EXPECT_EQ(exps, (std::vector<Rational>{rat(0), rat(1, 4), rat(1, 2), rat(3, 4)}));
  // Exponents shifted by the entry's own alpha.
  WeightedSpectrum conv = convolve_paired(terms);
  EXPECT_EQ(conv, W(R"([["1",2,1],["5/4",2,1],["3/2",2,1],["7/4",2,1]])"));

  auto half = vertical_spectrum({EigenEntry{rat(1), 2, rat(1, 2), 1}}, 1, 4);
  WeightedSpectrum conv_half = convolve_paired(half);
  EXPECT_EQ(conv_half, W(R"([["9/8",2,1],["11/8",2,1],["13/8",2,1],["15/8",2,1]])"));
}

TEST(VerticalSpectrum, EachAlphaUsesItsOwnBeta) {
  std::vector<EigenEntry> entries{{rat(1, 2), 0, rat(0), 1}, {rat(1), 2, rat(1, 2), 1}};
  auto terms = vertical_spectrum(entries, 1, 2);
  ASSERT_EQ(terms.size(), 4u);
  WeightedSpectrum conv = convolve_paired(terms);
  // (1/2,0) with {0, 1/2}, (1,2) with {1/4, 3/4}; never crossed.
  EXPECT_EQ(conv, W(R"([["1/2",0,1],["1",2,1],["5/4",2,1],["7/4",2,1]])"));
  EXPECT_EQ(conv.total(), 4);
}

TEST(VerticalSpectrum, MultiplicityScalesTermCount) {
  auto terms = vertical_spectrum({EigenEntry{rat(3, 4), 1, rat(3, 4), 2}}, 2, 3);
  long total = 0;
  for (const auto& t : terms) total += t.mult;
  EXPECT_EQ(total, 2 * 2 * 3);
}

TEST(ForgetWeights, Examples) {
  EXPECT_EQ(forget_weights(W(R"([["3/2",2,1],["3/2",1,1]])")), S(R"([["3/2",2]])"));
  const auto& reg = vancalc::testing::registry();
  EXPECT_EQ(forget_weights(reg.weighted_spectrum("table1/sigma2/D_inf")), S(R"([["3/2",1]])"));
}

TEST(HodgeDeligne, Placement) {
  auto d = to_hodge_deligne(W(R"([["3/2",2,1]])"), EigConvention::e_alpha);
  EXPECT_EQ(d.mult(1, 1, rat(1, 2)), 1);
  d = to_hodge_deligne(W(R"([["1",2,1]])"), EigConvention::e_alpha);
  EXPECT_EQ(d.mult(1, 1, rat(0)), 1);
  d = to_hodge_deligne(W(R"([["37/18",2,1]])"), EigConvention::e_alpha);
  EXPECT_EQ(d.mult(2, 0, rat(1, 18)), 1);
  // The opposite convention records the conjugate class.
  d = to_hodge_deligne(W(R"([["37/18",2,1]])"), EigConvention::e_minus_alpha);
  EXPECT_EQ(d.mult(2, 0, rat(17, 18)), 1);
}

TEST(HodgeDeligne, RoundTripPreservesEverything) {
  vancalc::testing::Rng rng(7);
  for (int i = 0; i < 200; ++i) {
    WeightedSpectrum s;
    for (int j = 0; j < 5; ++j) s.add(rat(rng.uniform(0, 24), rng.uniform(1, 6)), int(rng.uniform(0, 6)), rng.uniform(1, 3));
    for (auto conv : {EigConvention::e_alpha, EigConvention::e_minus_alpha}) {
      auto d = to_hodge_deligne(s, conv);
      EXPECT_EQ(d.total(), s.total());
      EXPECT_EQ(from_hodge_deligne(d, conv), s);
    }
    EXPECT_TRUE(eigen_coherent(s, to_hodge_deligne(s, EigConvention::e_alpha)));
  }
}

TEST(PqSymmetry, Examples) {
  HodgeDeligneDiagram single;
  single.add(2, 0, rat(0));
  EXPECT_FALSE(check_pq_symmetry(single));
  EXPECT_TRUE(check_pq_symmetry(to_hodge_deligne(jk_spectrum(5), EigConvention::e_alpha)));
  SlcType t{SlcFamily::T_p_q_inf, 3, 5, 0};
  EXPECT_TRUE(check_pq_symmetry(to_hodge_deligne(slc_catalog(t).sigma2, EigConvention::e_alpha)));
}

TEST(RangeCheck, Examples) {
  HodgeDeligneDiagram db;
  db.add(2, 3, rat(0));
  db.add(3, 2, rat(0));
  db.add(3, 3, rat(0));
  EXPECT_TRUE(range_check(db, 5, 5, SingClass::rational, MonodromyPart::u));
  HodgeDeligneDiagram origin;
  origin.add(0, 0, rat(0));
  EXPECT_FALSE(range_check(origin, 2, 2, SingClass::du_bois, MonodromyPart::u));
  HodgeDeligneDiagram kulikov;
  kulikov.add(1, 1, rat(0));
  kulikov.add(2, 2, rat(0));
  EXPECT_TRUE(range_check(kulikov, 2, 2, SingClass::du_bois, MonodromyPart::u));
  EXPECT_THROW(range_check(kulikov, 2, 0, SingClass::du_bois, MonodromyPart::u), InputError);
}

TEST(FLevel, Examples) {
  EXPECT_EQ(f_level(W(R"([["1",2,1]])")), 0);
  EXPECT_EQ(f_level(jk_spectrum(3)), -1);
  EXPECT_EQ(f_level(WeightedSpectrum{}), kFLevelInfinity);
}

TEST(Diagram, RemoveAndTwist) {
  HodgeDeligneDiagram d;
  d.add(1, 1, rat(1, 2), 2);
  d.remove({1, 1, rat(1, 2)}, 1);
  EXPECT_EQ(d.total(), 1);
  EXPECT_THROW(d.remove({1, 1, rat(1, 2)}, 2), InconsistencyError);
  EXPECT_EQ(d.tate_twist(1).mult(2, 2, rat(1, 2)), 1);
}
