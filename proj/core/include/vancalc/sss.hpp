#pragma once

#include <optional>
#include <string>
#include <vector>

#include "vancalc/spectrum.hpp"

namespace vancalc {

struct BranchData {
  int mu = 1;
  std::vector<EigenEntry> eigen_entries;
};

struct SssProblem {
  int n = 2;
  std::vector<BranchData> branches;
  WeightedSpectrum yomdin;  // spectrum of f + g^r at the bad point
  int r = 1;
  Rational r_threshold = 0;
  std::optional<WeightedSpectrum> sigma_lower;
};

struct SssResult {
  WeightedSpectrum difference;            // sigma^n - sigma^{n-1}
  std::optional<WeightedSpectrum> sigma;  // sigma^n, when sigma^{n-1} is known
  bool r_at_threshold = false;            // plain mode with r equal to the threshold
  bool consistent = true;
  std::vector<std::string> flags;
};

enum class SssMode { weighted, plain };

// The subtracted term: sum over branches of the paired convolution.
WeightedSpectrum sss_limit_term(const std::vector<BranchData>& branches, int r);

SssResult sss_weighted(const SssProblem& problem, SssMode mode = SssMode::weighted);

// Smallest sigma^{n-1} that makes sigma^n effective.
WeightedSpectrum infer_sigma_lower(const SssProblem& problem);

// Surface case with A_infinity branches: sigma2 = sigma1 + yomdin - sum_i sum_k [(1+(b_i+k)/r, 2)].
SssResult sss_slc(const WeightedSpectrum& sigma1, const WeightedSpectrum& yomdin, int r,
                  const std::vector<Rational>& betas);

WeightedSpectrum jk_spectrum(int kappa);

struct JkSummary {
  int kappa = 0;
  long h20 = 0;
  long h22 = 0;
  long tss_order = 0;       // 6k for k odd, 3k for k even
  long observed_order = 0;  // lcm of denominators actually present
  bool n_trivial = true;
  long total = 0;
};

JkSummary jk_summary(int kappa);

enum class SlcFamily { A_inf, D_inf, T_2_inf_inf, T_2_q_inf, T_inf_inf_inf, T_p_inf_inf, T_p_q_inf, J_kappa_inf };

struct SlcType {
  SlcFamily family = SlcFamily::A_inf;
  int p = 0;
  int q = 0;
  int kappa = 0;
};

struct SlcCatalogEntry {
  std::string symbol;
  std::string local_form;
  WeightedSpectrum sigma1;
  WeightedSpectrum sigma2;
  std::string g_choice;
  Rational r_threshold;
  int branch_count = 1;
};

SlcCatalogEntry slc_catalog(const SlcType& t);
std::string slc_symbol(const SlcType& t);
SlcType parse_slc_type(const std::string& s);  // "A_inf", "T_3_4_inf", "J_3_inf", ...

// Default A_infinity branch vertical exponent at the point: 1/2 when the branches are exchanged.
Rational slc_branch_beta(const SlcType& t);

long genus_bound(const std::vector<int>& kappas);

}  // namespace vancalc
