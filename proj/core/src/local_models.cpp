#include "vancalc/local_models.hpp"

#include <algorithm>
#include <numeric>

namespace vancalc {

Spectrum brieskorn_pham_plain(const std::vector<int>& exponents) {
  if (exponents.empty()) throw InputError("brieskorn_pham: empty exponent list");
  Spectrum acc;
  acc.add(Rational(0), 1);
  for (int a : exponents) {
    if (a < 1) throw InputError("brieskorn_pham: exponents must be >= 1");
    Spectrum f;
    for (int k = 1; k < a; ++k) f.add(rat(k, a), 1);
    acc = convolve(acc, f);
  }
  return acc;
}

WeightedSpectrum brieskorn_pham(const std::vector<int>& exponents) {
  Spectrum plain = brieskorn_pham_plain(exponents);
  const int n = static_cast<int>(exponents.size()) - 1;
  WeightedSpectrum out;
  for (const auto& [a, m] : plain.entries()) {
    int w = is_integer(a) ? static_cast<int>(2 * floor_int(a)) : n;
    out.add(a, w, m);
  }
  return out;
}

Spectrum join(const Spectrum& a, const Spectrum& b) { return convolve(a, b); }

WeightedSpectrum join(const WeightedSpectrum& a, const WeightedSpectrum& b) {
  return convolve(a, b);
}

WeightedSpectrum suspend(const WeightedSpectrum& s) {
  WeightedSpectrum a1;
  a1.add(rat(1, 2), 0, 1);
  return convolve(s, a1);
}

WeightedSpectrum cusp_spectrum(int a, int b, int c) {
  for (int e : {a, b, c})
    if (e < 2) throw InputError("cusp_spectrum: exponents must be >= 2");
  WeightedSpectrum out;
  out.add(Rational(1), 2);
  out.add(Rational(2), 4);
  for (int e : {a, b, c})
    for (int l = 1; l < e; ++l) out.add(1 + rat(l, e), 2);
  return out;
}

static long binom(long n, long k) {
  if (k < 0 || k > n) return 0;
  long r = 1;
  for (long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

NcMilnorReport nc_milnor(const NcLocalForm& form) {
  const auto& a = form.multiplicities;
  if (a.empty()) throw InputError("nc_milnor: need r >= 1");
  if (static_cast<int>(a.size()) > form.n + 1) throw InputError("nc_milnor: r exceeds n+1");
  long g = 0;
  for (int x : a) {
    if (x < 1) throw InputError("nc_milnor: multiplicities must be >= 1");
    g = std::gcd(g, static_cast<long>(x));
  }
  const long r = static_cast<long>(a.size());
  NcMilnorReport rep;
  rep.components = g;
  for (long k = 0; k < r; ++k) {
    rep.h.push_back(binom(r - 1, k));
    // components are permuted cyclically, so H^k carries e(j/g) for j = 0..g-1
    WeightedSpectrum s;
    for (long j = 0; j < g; ++j) {
      long m = rep.h.back();
      if (k == 0 && j == 0) m -= 1;  // reduced
      s.add(Rational(k) + rat(j, g), static_cast<int>(2 * k), m);
    }
    rep.sigma.push_back(s);
  }
  return rep;
}

long monodromy_order_bound(const std::vector<int>& multiplicities) {
  long l = 1;
  for (int x : multiplicities) {
    if (x < 1) throw InputError("monodromy_order_bound: multiplicities must be >= 1");
    l = std::lcm(l, static_cast<long>(x));
  }
  return l;
}

TorsionReport torsion_exponents(const std::vector<std::pair<Rational, long>>& limit_data, long ell) {
  if (ell < 1) throw InputError("torsion_exponents: ell must be >= 1");
  TorsionReport rep;
  for (const auto& [alpha, m] : limit_data) {
    if (alpha < 0 || alpha >= 1) throw InputError("torsion_exponents: alpha must lie in [0,1)");
    if (m < 0) throw InputError("torsion_exponents: negative multiplicity");
    long e = floor_int(alpha * ell);
    if (e == 0) continue;
    rep.exponents.insert(rep.exponents.end(), m, e);
  }
  std::sort(rep.exponents.begin(), rep.exponents.end());
  return rep;
}

TorsionReport torsion_exponents_isolated(const Spectrum& spectrum, int p, long ell) {
  if (ell < 1) throw InputError("torsion_exponents: ell must be >= 1");
  TorsionReport rep;
  for (const auto& [beta, m] : spectrum.entries()) {
    if (is_integer(beta) || floor_int(beta) != p) continue;
    if (m < 0) throw InputError("torsion_exponents: negative multiplicity");
    Rational e = frac(-beta) * ell;
    if (!is_integer(e))
      throw InputError("torsion_exponents: ell*{-beta} not integral for beta=" + to_string(beta));
    rep.exponents.insert(rep.exponents.end(), m, floor_int(e));
  }
  std::sort(rep.exponents.begin(), rep.exponents.end());
  return rep;
}

}  // namespace vancalc
