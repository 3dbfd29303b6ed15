#include <gtest/gtest.h>

#include "test_support.hpp"
#include "vancalc/local_models.hpp"

using namespace vancalc;
using vancalc::testing::S;
using vancalc::testing::W;

TEST(BrieskornPham, Examples) {
  EXPECT_EQ(brieskorn_pham({2, 3}), W(R"([["5/6",1,1],["7/6",1,1]])"));
  EXPECT_EQ(brieskorn_pham({2, 2}), W(R"([["1",2,1]])"));
  EXPECT_EQ(brieskorn_pham({2, 3, 18}).mult(rat(3, 2), 2), 2);
  EXPECT_THROW(brieskorn_pham({0, 3}), InputError);
}

TEST(BrieskornPham, MatchesEnumeration) {
  for (const std::vector<int>& a : {std::vector<int>{2, 3, 9}, {3, 4, 5}, {2, 2, 2, 2}, {5, 7}}) {
    EXPECT_EQ(forget_weights(brieskorn_pham(a)), vancalc::testing::brute_force_bp(a));
    EXPECT_EQ(brieskorn_pham_plain(a), vancalc::testing::brute_force_bp(a));
  }
}

TEST(BrieskornPham, ExponentOneGivesEmptyFactor) {
  EXPECT_TRUE(brieskorn_pham({2, 2, 1}).empty());
}

TEST(Join, Examples) {
  EXPECT_EQ(join(S(R"([["1/2",1]])"), S(R"([["1/3",1],["2/3",1]])")), S(R"([["5/6",1],["7/6",1]])"));
  EXPECT_TRUE(join(S(R"([["1/2",1]])"), Spectrum{}).empty());
  EXPECT_EQ(join(S(R"([["1/2",1]])"), S(R"([["1/2",1]])")), S(R"([["1",1]])"));
  Spectrum a = S(R"([["1/3",2],["1/2",1]])"), b = S(R"([["1/4",1],["3/4",3]])");
  EXPECT_EQ(join(a, b).total(), a.total() * b.total());
}

TEST(Suspend, AddsHalf) {
  EXPECT_EQ(suspend(W(R"([["1",2,1]])")), W(R"([["3/2",2,1]])"));
}

TEST(CuspSpectrum, MatchesHandCount) {
  for (auto [a, b, c] : {std::tuple{2, 3, 7}, {3, 4, 5}, {4, 4, 4}, {2, 5, 5}}) {
    WeightedSpectrum expected = W(R"([["1",2,1],["2",4,1]])") + vancalc::testing::cusp_tail(a) +
                                vancalc::testing::cusp_tail(b) + vancalc::testing::cusp_tail(c);
    EXPECT_EQ(cusp_spectrum(a, b, c), expected);
    EXPECT_EQ(cusp_spectrum(a, b, c).total(), a + b + c - 1);
  }
  // The simple elliptic member agrees with its Brieskorn-Pham model.
  EXPECT_EQ(cusp_spectrum(3, 3, 3), brieskorn_pham({3, 3, 3}));
  EXPECT_THROW(cusp_spectrum(1, 3, 3), InputError);
}

TEST(NcMilnor, Examples) {
  auto r = nc_milnor({2, {1, 1, 1}});
  EXPECT_EQ(r.components, 1);
  EXPECT_EQ(r.h.at(1), 2);
  EXPECT_EQ(r.sigma.at(1), W(R"([["1",2,2]])"));
  r = nc_milnor({2, {1, 1}});
  EXPECT_EQ(r.h.at(1), 1);
  EXPECT_EQ(r.sigma.at(1), W(R"([["1",2,1]])"));
  EXPECT_EQ(nc_milnor({2, {2, 2}}).components, 2);
  EXPECT_THROW(nc_milnor({1, {1, 1, 1}}), InputError);
}

TEST(MonodromyOrder, Examples) {
  EXPECT_EQ(monodromy_order_bound({1, 1, 1}), 1);
  EXPECT_EQ(monodromy_order_bound({3, 1}), 3);
  EXPECT_EQ(monodromy_order_bound({4, 6}), 12);
}

TEST(Torsion, Examples) {
  EXPECT_EQ(torsion_exponents_isolated(S(R"([["2/3",1],["1",2],["4/3",1]])"), 1, 3).exponents,
            std::vector<long>{2});
  EXPECT_TRUE(torsion_exponents_isolated(S(R"([["1",3],["2",1]])"), 1, 5).exponents.empty());
  EXPECT_EQ(torsion_exponents({{rat(1, 2), 3}}, 2).exponents, (std::vector<long>{1, 1, 1}));
  EXPECT_THROW(torsion_exponents({{rat(1, 2), 1}}, 0), InputError);
}

TEST(Torsion, IntegralMultiplesGiveExactExponents) {
  std::vector<std::pair<Rational, long>> data{{rat(1, 6), 1}, {rat(1, 2), 2}, {rat(5, 6), 1}};
  EXPECT_EQ(torsion_exponents(data, 6).exponents, (std::vector<long>{1, 3, 3, 5}));
}
