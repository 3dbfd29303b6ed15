#pragma once

#include <utility>
#include <vector>

#include "vancalc/spectrum.hpp"

namespace vancalc {

// Weighted spectrum of x_0^{a_0} + ... + x_n^{a_n}. Exponent 1 gives an empty join factor.
WeightedSpectrum brieskorn_pham(const std::vector<int>& exponents);
Spectrum brieskorn_pham_plain(const std::vector<int>& exponents);

Spectrum join(const Spectrum& a, const Spectrum& b);
WeightedSpectrum join(const WeightedSpectrum& a, const WeightedSpectrum& b);

// Surface T_{a,b,c}: x^a + y^b + z^c + xyz (cusp when 1/a+1/b+1/c < 1; the same list
// covers the simple elliptic cases). Integer entries carry the size-2 Jordan block.
WeightedSpectrum cusp_spectrum(int a, int b, int c);

// Join with the A_1 factor [(1/2,0)].
WeightedSpectrum suspend(const WeightedSpectrum& s);

struct NcLocalForm {
  int n = 0;
  std::vector<int> multiplicities;
};

struct NcMilnorReport {
  long components = 0;
  std::vector<long> h;                  // h[k] per component, k = 0..r-1
  std::vector<WeightedSpectrum> sigma;  // reduced weighted spectrum of H^k, k = 0..r-1
};

NcMilnorReport nc_milnor(const NcLocalForm& form);

long monodromy_order_bound(const std::vector<int>& multiplicities);

struct TorsionReport {
  std::vector<long> exponents;  // sorted ascending
};

// Base-change torsion from limit eigen-data (alpha in [0,1), multiplicity).
TorsionReport torsion_exponents(const std::vector<std::pair<Rational, long>>& limit_data, long ell);

// Isolated-singularity variant: spectrum entries in (p,p+1) give ell*{-beta}.
TorsionReport torsion_exponents_isolated(const Spectrum& spectrum, int p, long ell);

}  // namespace vancalc
