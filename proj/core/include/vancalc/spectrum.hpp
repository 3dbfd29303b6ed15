#pragma once

#include <limits>
#include <map>
#include <string>
#include <vector>

#include "vancalc/rational.hpp"

namespace vancalc {

// Plain spectrum: element of Z[Q], signed multiplicities, zeros never stored.
class Spectrum {
 public:
  using Map = std::map<Rational, long>;

  Spectrum() = default;
  void add(const Rational& alpha, long mult = 1);
  long mult(const Rational& alpha) const;
  const Map& entries() const { return m_; }
  bool empty() const { return m_.empty(); }
  long total() const;
  bool effective() const;

  friend bool operator==(const Spectrum&, const Spectrum&) = default;

 private:
  Map m_;
};

struct WKey {
  Rational alpha;
  int w = 0;
  friend bool operator<(const WKey& a, const WKey& b) {
    if (a.alpha != b.alpha) return a.alpha < b.alpha;
    return a.w < b.w;
  }
  friend bool operator==(const WKey& a, const WKey& b) {
    return a.alpha == b.alpha && a.w == b.w;
  }
};

// Weighted spectrum: element of Z[Q x Z].
class WeightedSpectrum {
 public:
  using Map = std::map<WKey, long>;

  WeightedSpectrum() = default;
  WeightedSpectrum(std::initializer_list<std::pair<WKey, long>> init);
  void add(const Rational& alpha, int w, long mult = 1);
  long mult(const Rational& alpha, int w) const;
  const Map& entries() const { return m_; }
  bool empty() const { return m_.empty(); }
  long total() const;
  bool effective() const;
  WeightedSpectrum positive_part() const;
  WeightedSpectrum negative_part() const;  // returned with positive multiplicities

  friend bool operator==(const WeightedSpectrum&, const WeightedSpectrum&) = default;

 private:
  Map m_;
};

// (alpha, w, beta) with multiplicity; beta in [0,1) is the vertical exponent.
struct EigenEntry {
  Rational alpha;
  int weight = 0;
  Rational beta;
  long multiplicity = 1;
};

// Eigenvalue bookkeeping. Spectra use e(alpha); limit lattices C^alpha use e(-alpha).
enum class EigConvention { e_alpha, e_minus_alpha };

struct HdKey {
  int p = 0;
  int q = 0;
  Rational eig;  // class in [0,1)
  friend bool operator<(const HdKey& a, const HdKey& b) {
    if (a.p != b.p) return a.p < b.p;
    if (a.q != b.q) return a.q < b.q;
    return a.eig < b.eig;
  }
  friend bool operator==(const HdKey& a, const HdKey& b) {
    return a.p == b.p && a.q == b.q && a.eig == b.eig;
  }
};

struct NArrow {
  HdKey from;
  HdKey to;
  long mult = 1;
  friend bool operator==(const NArrow&, const NArrow&) = default;
};

class HodgeDeligneDiagram {
 public:
  using Map = std::map<HdKey, long>;

  HodgeDeligneDiagram() = default;
  void add(int p, int q, const Rational& eig, long mult = 1);
  void add(const HdKey& k, long mult) { add(k.p, k.q, k.eig, mult); }
  // Removes mult copies; throws InconsistencyError if not enough.
  void remove(const HdKey& k, long mult);
  long mult(int p, int q, const Rational& eig) const;
  long mult(const HdKey& k) const { return mult(k.p, k.q, k.eig); }
  long total() const;
  long count_pq(int p, int q) const;  // summed over eigenvalue classes
  long count_F(int p) const;          // rank of Gr_F^p
  const Map& entries() const { return m_; }
  bool empty() const { return m_.empty(); }
  int max_weight() const;
  int min_weight() const;

  HodgeDeligneDiagram unipotent_part() const;
  HodgeDeligneDiagram non_unipotent_part() const;
  HodgeDeligneDiagram tate_twist(int t) const;
  HodgeDeligneDiagram& operator+=(const HodgeDeligneDiagram& o);

  void add_arrow(const NArrow& a);
  const std::vector<NArrow>& arrows() const { return arrows_; }

  friend bool operator==(const HodgeDeligneDiagram& a, const HodgeDeligneDiagram& b) {
    return a.m_ == b.m_;
  }

 private:
  Map m_;
  std::vector<NArrow> arrows_;
};

HodgeDeligneDiagram operator+(HodgeDeligneDiagram a, const HodgeDeligneDiagram& b);

// Group operations.
Spectrum combine(const Spectrum& a, const Spectrum& b, int sign);
WeightedSpectrum combine(const WeightedSpectrum& a, const WeightedSpectrum& b, int sign);
WeightedSpectrum operator+(const WeightedSpectrum& a, const WeightedSpectrum& b);
WeightedSpectrum operator-(const WeightedSpectrum& a, const WeightedSpectrum& b);
WeightedSpectrum scale(const WeightedSpectrum& a, long k);
Spectrum operator+(const Spectrum& a, const Spectrum& b);
Spectrum operator-(const Spectrum& a, const Spectrum& b);

int pairing_index(const Rational& alpha, const Rational& beta);
WKey star(const WKey& a, const WKey& b);

WeightedSpectrum convolve(const WeightedSpectrum& s, const WeightedSpectrum& t);
Spectrum convolve(const Spectrum& s, const Spectrum& t);

// One eigen-entry term (alpha_j, w_j) paired with its own exponent (beta_j+k)/(mu r).
struct PairedTerm {
  Rational alpha;
  int w = 0;
  Rational exponent;
  long mult = 1;
};

std::vector<PairedTerm> vertical_spectrum(const std::vector<EigenEntry>& entries, int mu, int r);
WeightedSpectrum convolve_paired(const std::vector<PairedTerm>& terms);
Spectrum convolve_paired_plain(const std::vector<PairedTerm>& terms);

Spectrum forget_weights(const WeightedSpectrum& s);

HodgeDeligneDiagram to_hodge_deligne(const WeightedSpectrum& s, EigConvention conv);
WeightedSpectrum from_hodge_deligne(const HodgeDeligneDiagram& d, EigConvention conv);

Rational conjugate_eig(const Rational& eig);
bool check_pq_symmetry(const HodgeDeligneDiagram& d);

enum class SingClass { du_bois, rational };
enum class MonodromyPart { u, n };
bool range_check(const HodgeDeligneDiagram& d, int k, int n, SingClass cls, MonodromyPart part);

constexpr long kFLevelInfinity = std::numeric_limits<long>::max();
long f_level(const WeightedSpectrum& s);

// Eigenvalue class of every entry equals frac(alpha) under e(alpha).
bool eigen_coherent(const WeightedSpectrum& s, const HodgeDeligneDiagram& d);

std::string describe(const WeightedSpectrum& s);
std::string describe(const Spectrum& s);

}  // namespace vancalc
