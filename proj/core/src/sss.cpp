#include "vancalc/sss.hpp"

#include <numeric>
#include <regex>

namespace vancalc {

WeightedSpectrum sss_limit_term(const std::vector<BranchData>& branches, int r) {
  WeightedSpectrum acc;
  for (const auto& b : branches) {
    if (b.mu < 1) throw InputError("branch degree mu must be >= 1");
    acc = acc + convolve_paired(vertical_spectrum(b.eigen_entries, b.mu, r));
  }
  return acc;
}

SssResult sss_weighted(const SssProblem& pb, SssMode mode) {
  if (pb.r < 1) throw InputError("r must be >= 1");
  if (pb.r_threshold < 0) throw InputError("threshold must be >= 0");
  SssResult res;
  Rational r(pb.r);
  if (mode == SssMode::weighted && r <= pb.r_threshold)
    throw InputError("weighted SSS needs r > threshold (r=" + std::to_string(pb.r) +
                     ", threshold=" + to_string(pb.r_threshold) + ")");
  if (mode == SssMode::plain) {
    if (r < pb.r_threshold) throw InputError("plain SSS needs r >= threshold");
    if (r == pb.r_threshold) {
      res.r_at_threshold = true;
      res.flags.push_back("r equals the threshold; plain spectrum only");
    }
  }
  res.difference = pb.yomdin - sss_limit_term(pb.branches, pb.r);
  if (mode == SssMode::plain) {
    WeightedSpectrum flat;
    for (const auto& [k, m] : res.difference.entries()) flat.add(k.alpha, 0, m);
    res.difference = flat;
  }
  if (pb.sigma_lower) {
    WeightedSpectrum lower = *pb.sigma_lower;
    if (mode == SssMode::plain) {
      WeightedSpectrum flat;
      for (const auto& [k, m] : lower.entries()) flat.add(k.alpha, 0, m);
      lower = flat;
    }
    res.sigma = res.difference + lower;
    if (!res.sigma->effective()) {
      res.consistent = false;
      res.flags.push_back("uncancelled negative terms: " + describe(res.sigma->negative_part()));
    }
  }
  return res;
}

WeightedSpectrum infer_sigma_lower(const SssProblem& pb) {
  SssProblem q = pb;
  q.sigma_lower.reset();
  return sss_weighted(q).difference.negative_part();
}

SssResult sss_slc(const WeightedSpectrum& sigma1, const WeightedSpectrum& yomdin, int r,
                  const std::vector<Rational>& betas) {
  if (r < 1) throw InputError("r must be >= 1");
  WeightedSpectrum sub;
  for (const auto& b : betas) {
    if (b != 0 && b != rat(1, 2)) throw InputError("branch beta must be 0 or 1/2");
    for (int k = 0; k < r; ++k) sub.add(1 + (b + k) / Rational(r), 2, 1);
  }
  SssResult res;
  res.difference = yomdin - sub;
  res.sigma = sigma1 + res.difference;
  if (!res.sigma->effective()) {
    res.consistent = false;
    res.flags.push_back("uncancelled negative terms: " + describe(res.sigma->negative_part()));
  }
  return res;
}

WeightedSpectrum jk_spectrum(int kappa) {
  if (kappa < 1) throw InputError("kappa must be >= 1");
  WeightedSpectrum s;
  const long k = kappa;
  if (k % 2 == 1) {
    for (long m = 1; m <= (k - 1) / 2; ++m) {
      s.add(rat(5 * k + 2 * m, 6 * k), 2);
      s.add(rat(13 * k - 2 * m, 6 * k), 2);
    }
    for (long m = 1; m <= 2 * k - 1; ++m) s.add(rat(7 * k + 2 * m, 6 * k), 2);
  } else {
    // (5k/2 + m)/3k etc., written over 6k to stay integral
    for (long m = 1; m <= k / 2 - 1; ++m) {
      s.add(rat(5 * k + 2 * m, 6 * k), 2);
      s.add(rat(13 * k - 2 * m, 6 * k), 2);
    }
    for (long m = 1; m <= 2 * k - 1; ++m) s.add(rat(7 * k + 2 * m, 6 * k), 2);
    s.add(Rational(2), 4);
  }
  return s;
}

JkSummary jk_summary(int kappa) {
  WeightedSpectrum s = jk_spectrum(kappa);
  HodgeDeligneDiagram d = to_hodge_deligne(s, EigConvention::e_alpha);
  JkSummary j;
  j.kappa = kappa;
  j.h20 = d.count_pq(2, 0);
  j.h22 = d.count_pq(2, 2);
  j.tss_order = kappa % 2 ? 6L * kappa : 3L * kappa;
  long l = 1;
  for (const auto& [k, m] : s.entries()) l = std::lcm(l, k.alpha.get_den().get_si());
  j.observed_order = l;
  j.n_trivial = true;
  // a nontrivial N would put non-unipotent classes off the middle weight
  for (const auto& [k, m] : s.entries())
    if (!is_integer(k.alpha) && k.w != 2) j.n_trivial = false;
  j.total = s.total();
  return j;
}

static WeightedSpectrum cusp_sum(int a) {
  WeightedSpectrum s;
  for (int l = 1; l < a; ++l) s.add(1 + rat(l, a), 2);
  return s;
}

SlcCatalogEntry slc_catalog(const SlcType& t) {
  SlcCatalogEntry e;
  e.symbol = slc_symbol(t);
  WeightedSpectrum one{{WKey{Rational(1), 2}, 1}};
  WeightedSpectrum two{{WKey{Rational(2), 4}, 1}};
  WeightedSpectrum half{{WKey{rat(3, 2), 2}, 1}};
  switch (t.family) {
    case SlcFamily::A_inf:
      e.local_form = "x^2+y^2";
      e.sigma1 = one;
      e.g_choice = "z";
      e.r_threshold = 0;
      e.branch_count = 1;
      break;
    case SlcFamily::D_inf:
      e.local_form = "x^2+y^2z";
      e.sigma2 = half;
      e.g_choice = "z-y";
      e.r_threshold = 3;
      e.branch_count = 1;
      break;
    case SlcFamily::T_2_inf_inf:
      e.local_form = "x^2+y^2z^2";
      e.sigma1 = one;
      e.sigma2 = half + two;
      e.g_choice = "z-y";
      e.r_threshold = 4;
      e.branch_count = 2;
      break;
    case SlcFamily::T_2_q_inf:
      if (t.q < 3) throw InputError("T_{2,q,inf} needs q >= 3");
      e.local_form = "x^2+y^2z^2+y^" + std::to_string(t.q);
      e.sigma2 = half + two + cusp_sum(t.q);
      e.g_choice = "z";
      e.r_threshold = rat(2 * t.q, t.q - 2);
      e.branch_count = 1;
      break;
    case SlcFamily::T_inf_inf_inf:
      e.local_form = "xyz";
      e.sigma1 = scale(one, 2);
      e.sigma2 = two;
      e.g_choice = "x+y+z";
      e.r_threshold = 3;
      e.branch_count = 3;
      break;
    case SlcFamily::T_p_inf_inf:
      if (t.p < 3) throw InputError("T_{p,inf,inf} needs p >= 3");
      e.local_form = "xyz+x^" + std::to_string(t.p);
      e.sigma1 = one;
      e.sigma2 = cusp_sum(t.p) + two;
      e.g_choice = "y+z";
      e.r_threshold = rat(2 * t.p, t.p - 1);
      e.branch_count = 2;
      break;
    case SlcFamily::T_p_q_inf:
      if (t.p < 3 || t.q < t.p) throw InputError("T_{p,q,inf} needs q >= p >= 3");
      e.local_form = "xyz+x^" + std::to_string(t.p) + "+y^" + std::to_string(t.q);
      e.sigma2 = cusp_sum(t.p) + two + cusp_sum(t.q);
      e.g_choice = "z";
      e.r_threshold = rat(t.p * t.q, t.p * t.q - t.p - t.q);
      e.branch_count = 1;
      break;
    case SlcFamily::J_kappa_inf:
      if (t.kappa < 1) throw InputError("J_{kappa,inf} needs kappa >= 1");
      e.local_form = "x^2+y^3+y^2z^" + std::to_string(t.kappa);
      e.sigma2 = jk_spectrum(t.kappa);
      e.g_choice = "z";
      e.r_threshold = 3 * t.kappa;
      e.branch_count = 1;
      break;
  }
  return e;
}

std::string slc_symbol(const SlcType& t) {
  switch (t.family) {
    case SlcFamily::A_inf: return "A_inf";
    case SlcFamily::D_inf: return "D_inf";
    case SlcFamily::T_2_inf_inf: return "T_2_inf_inf";
    case SlcFamily::T_2_q_inf: return "T_2_" + std::to_string(t.q) + "_inf";
    case SlcFamily::T_inf_inf_inf: return "T_inf_inf_inf";
    case SlcFamily::T_p_inf_inf: return "T_" + std::to_string(t.p) + "_inf_inf";
    case SlcFamily::T_p_q_inf:
      return "T_" + std::to_string(t.p) + "_" + std::to_string(t.q) + "_inf";
    case SlcFamily::J_kappa_inf: return "J_" + std::to_string(t.kappa) + "_inf";
  }
  return "?";
}

SlcType parse_slc_type(const std::string& s) {
  std::smatch m;
  SlcType t;
  if (s == "A_inf") t.family = SlcFamily::A_inf;
  else if (s == "D_inf") t.family = SlcFamily::D_inf;
  else if (s == "T_2_inf_inf") t.family = SlcFamily::T_2_inf_inf;
  else if (s == "T_inf_inf_inf") t.family = SlcFamily::T_inf_inf_inf;
  else if (std::regex_match(s, m, std::regex(R"(J_(\d+)_inf)"))) {
    t.family = SlcFamily::J_kappa_inf;
    t.kappa = std::stoi(m[1]);
  } else if (std::regex_match(s, m, std::regex(R"(T_2_(\d+)_inf)"))) {
    t.family = SlcFamily::T_2_q_inf;
    t.p = 2;
    t.q = std::stoi(m[1]);
  } else if (std::regex_match(s, m, std::regex(R"(T_(\d+)_inf_inf)"))) {
    t.family = SlcFamily::T_p_inf_inf;
    t.p = std::stoi(m[1]);
  } else if (std::regex_match(s, m, std::regex(R"(T_(\d+)_(\d+)_inf)"))) {
    t.family = SlcFamily::T_p_q_inf;
    t.p = std::stoi(m[1]);
    t.q = std::stoi(m[2]);
  } else {
    throw InputError("unknown singularity type '" + s + "'");
  }
  slc_catalog(t);  // range validation
  return t;
}

Rational slc_branch_beta(const SlcType& t) {
  if (t.family == SlcFamily::D_inf) return rat(1, 2);
  if (t.family == SlcFamily::J_kappa_inf && t.kappa % 2 == 1) return rat(1, 2);
  return 0;
}

long genus_bound(const std::vector<int>& kappas) {
  long s = 0;
  for (int k : kappas) {
    if (k < 1) throw InputError("kappa must be >= 1");
    s += (k - 1) / 2;
  }
  return s;
}

}  // namespace vancalc
