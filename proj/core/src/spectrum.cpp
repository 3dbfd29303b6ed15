#include "vancalc/spectrum.hpp"

#include <algorithm>
#include <sstream>

namespace vancalc {

namespace {

template <class M, class K>
void bump(M& m, const K& k, long d) {
  if (d == 0) return;
  auto it = m.find(k);
  if (it == m.end()) {
    m.emplace(k, d);
    return;
  }
  it->second += d;
  if (it->second == 0) m.erase(it);
}

}  // namespace

// ---- Spectrum

void Spectrum::add(const Rational& alpha, long mult) { bump(m_, alpha, mult); }

long Spectrum::mult(const Rational& alpha) const {
  auto it = m_.find(alpha);
  return it == m_.end() ? 0 : it->second;
}

long Spectrum::total() const {
  long t = 0;
  for (const auto& [a, m] : m_) t += m;
  return t;
}

bool Spectrum::effective() const {
  return std::all_of(m_.begin(), m_.end(), [](const auto& e) { return e.second > 0; });
}

// ---- WeightedSpectrum

WeightedSpectrum::WeightedSpectrum(std::initializer_list<std::pair<WKey, long>> init) {
  for (const auto& [k, m] : init) bump(m_, k, m);
}

void WeightedSpectrum::add(const Rational& alpha, int w, long mult) {
  bump(m_, WKey{alpha, w}, mult);
}

long WeightedSpectrum::mult(const Rational& alpha, int w) const {
  auto it = m_.find(WKey{alpha, w});
  return it == m_.end() ? 0 : it->second;
}

long WeightedSpectrum::total() const {
  long t = 0;
  for (const auto& [k, m] : m_) t += m;
  return t;
}

bool WeightedSpectrum::effective() const {
  return std::all_of(m_.begin(), m_.end(), [](const auto& e) { return e.second > 0; });
}

WeightedSpectrum WeightedSpectrum::positive_part() const {
  WeightedSpectrum r;
  for (const auto& [k, m] : m_)
    if (m > 0) r.m_.emplace(k, m);
  return r;
}

WeightedSpectrum WeightedSpectrum::negative_part() const {
  WeightedSpectrum r;
  for (const auto& [k, m] : m_)
    if (m < 0) r.m_.emplace(k, -m);
  return r;
}

// ---- HodgeDeligneDiagram

void HodgeDeligneDiagram::add(int p, int q, const Rational& eig, long mult) {
  HdKey k{p, q, frac(eig)};
  bump(m_, k, mult);
  auto it = m_.find(k);
  if (it != m_.end() && it->second < 0)
    throw InconsistencyError("negative Hodge-Deligne multiplicity at (" + std::to_string(p) + "," +
                             std::to_string(q) + ")");
}

void HodgeDeligneDiagram::remove(const HdKey& k, long mult) {
  if (mult < 0) throw InputError("negative removal");
  if (this->mult(k) < mult)
    throw InconsistencyError("cannot remove " + std::to_string(mult) + " copies of (" +
                             std::to_string(k.p) + "," + std::to_string(k.q) + ")");
  bump(m_, HdKey{k.p, k.q, frac(k.eig)}, -mult);
}

long HodgeDeligneDiagram::mult(int p, int q, const Rational& eig) const {
  auto it = m_.find(HdKey{p, q, frac(eig)});
  return it == m_.end() ? 0 : it->second;
}

long HodgeDeligneDiagram::total() const {
  long t = 0;
  for (const auto& [k, m] : m_) t += m;
  return t;
}

long HodgeDeligneDiagram::count_pq(int p, int q) const {
  long t = 0;
  for (const auto& [k, m] : m_)
    if (k.p == p && k.q == q) t += m;
  return t;
}

long HodgeDeligneDiagram::count_F(int p) const {
  long t = 0;
  for (const auto& [k, m] : m_)
    if (k.p == p) t += m;
  return t;
}

int HodgeDeligneDiagram::max_weight() const {
  int w = std::numeric_limits<int>::min();
  for (const auto& [k, m] : m_) w = std::max(w, k.p + k.q);
  return w;
}

int HodgeDeligneDiagram::min_weight() const {
  int w = std::numeric_limits<int>::max();
  for (const auto& [k, m] : m_) w = std::min(w, k.p + k.q);
  return w;
}

HodgeDeligneDiagram HodgeDeligneDiagram::unipotent_part() const {
  HodgeDeligneDiagram r;
  for (const auto& [k, m] : m_)
    if (k.eig == 0) r.m_.emplace(k, m);
  for (const auto& a : arrows_)
    if (a.from.eig == 0) r.arrows_.push_back(a);
  return r;
}

HodgeDeligneDiagram HodgeDeligneDiagram::non_unipotent_part() const {
  HodgeDeligneDiagram r;
  for (const auto& [k, m] : m_)
    if (k.eig != 0) r.m_.emplace(k, m);
  for (const auto& a : arrows_)
    if (a.from.eig != 0) r.arrows_.push_back(a);
  return r;
}

HodgeDeligneDiagram HodgeDeligneDiagram::tate_twist(int t) const {
  HodgeDeligneDiagram r;
  for (const auto& [k, m] : m_) r.m_.emplace(HdKey{k.p + t, k.q + t, k.eig}, m);
  for (auto a : arrows_) {
    a.from.p += t;
    a.from.q += t;
    a.to.p += t;
    a.to.q += t;
    r.arrows_.push_back(a);
  }
  return r;
}

HodgeDeligneDiagram& HodgeDeligneDiagram::operator+=(const HodgeDeligneDiagram& o) {
  for (const auto& [k, m] : o.m_) add(k, m);
  for (const auto& a : o.arrows_) add_arrow(a);
  return *this;
}

void HodgeDeligneDiagram::add_arrow(const NArrow& a) {
  int s = a.from.p - a.to.p;
  if (s < 1 || a.from.q - a.to.q != s || frac(a.from.eig) != frac(a.to.eig))
    throw InputError("N-arrow must lower (p,q) by (k,k), k>=1, and keep the eigenvalue");
  for (auto& b : arrows_)
    if (b.from == a.from && b.to == a.to) {
      b.mult += a.mult;
      return;
    }
  arrows_.push_back(a);
}

HodgeDeligneDiagram operator+(HodgeDeligneDiagram a, const HodgeDeligneDiagram& b) {
  a += b;
  return a;
}

// ---- group operations

Spectrum combine(const Spectrum& a, const Spectrum& b, int sign) {
  if (sign != 1 && sign != -1) throw InputError("combine sign must be +1 or -1");
  Spectrum r = a;
  for (const auto& [k, m] : b.entries()) r.add(k, sign * m);
  return r;
}

WeightedSpectrum combine(const WeightedSpectrum& a, const WeightedSpectrum& b, int sign) {
  if (sign != 1 && sign != -1) throw InputError("combine sign must be +1 or -1");
  WeightedSpectrum r = a;
  for (const auto& [k, m] : b.entries()) r.add(k.alpha, k.w, sign * m);
  return r;
}

WeightedSpectrum operator+(const WeightedSpectrum& a, const WeightedSpectrum& b) {
  return combine(a, b, 1);
}
WeightedSpectrum operator-(const WeightedSpectrum& a, const WeightedSpectrum& b) {
  return combine(a, b, -1);
}
Spectrum operator+(const Spectrum& a, const Spectrum& b) { return combine(a, b, 1); }
Spectrum operator-(const Spectrum& a, const Spectrum& b) { return combine(a, b, -1); }

WeightedSpectrum scale(const WeightedSpectrum& a, long k) {
  WeightedSpectrum r;
  for (const auto& [key, m] : a.entries()) r.add(key.alpha, key.w, k * m);
  return r;
}

// ---- star and convolution

int pairing_index(const Rational& alpha, const Rational& beta) {
  if (is_integer(alpha) || is_integer(beta)) return 0;
  return is_integer(alpha + beta) ? 2 : 1;
}

WKey star(const WKey& a, const WKey& b) {
  return WKey{a.alpha + b.alpha, a.w + b.w + pairing_index(a.alpha, b.alpha)};
}

WeightedSpectrum convolve(const WeightedSpectrum& s, const WeightedSpectrum& t) {
  WeightedSpectrum r;
  for (const auto& [a, m] : s.entries())
    for (const auto& [b, n] : t.entries()) {
      WKey c = star(a, b);
      r.add(c.alpha, c.w, m * n);
    }
  return r;
}

Spectrum convolve(const Spectrum& s, const Spectrum& t) {
  Spectrum r;
  for (const auto& [a, m] : s.entries())
    for (const auto& [b, n] : t.entries()) r.add(a + b, m * n);
  return r;
}

std::vector<PairedTerm> vertical_spectrum(const std::vector<EigenEntry>& entries, int mu, int r) {
  if (mu < 1 || r < 1) throw InputError("vertical_spectrum needs mu, r >= 1");
  std::vector<PairedTerm> out;
  const long N = static_cast<long>(mu) * r;
  for (const auto& e : entries) {
    if (e.beta < 0 || e.beta >= 1) throw InputError("beta must lie in [0,1)");
    if (e.multiplicity < 1) throw InputError("eigen-entry multiplicity must be positive");
    for (long k = 0; k < N; ++k) {
      Rational x = (e.beta + k) / Rational(N);
      x.canonicalize();
      out.push_back(PairedTerm{e.alpha, e.weight, x, e.multiplicity});
    }
  }
  return out;
}

WeightedSpectrum convolve_paired(const std::vector<PairedTerm>& terms) {
  WeightedSpectrum r;
  for (const auto& t : terms) {
    WKey c = star(WKey{t.alpha, t.w}, WKey{t.exponent, 0});
    r.add(c.alpha, c.w, t.mult);
  }
  return r;
}

Spectrum convolve_paired_plain(const std::vector<PairedTerm>& terms) {
  Spectrum r;
  for (const auto& t : terms) r.add(t.alpha + t.exponent, t.mult);
  return r;
}

Spectrum forget_weights(const WeightedSpectrum& s) {
  Spectrum r;
  for (const auto& [k, m] : s.entries()) r.add(k.alpha, m);
  return r;
}

// ---- Hodge-Deligne

static Rational eig_of(const Rational& alpha, EigConvention conv) {
  return conv == EigConvention::e_alpha ? frac(alpha) : frac(-alpha);
}

HodgeDeligneDiagram to_hodge_deligne(const WeightedSpectrum& s, EigConvention conv) {
  HodgeDeligneDiagram d;
  for (const auto& [k, m] : s.entries()) {
    if (m < 0) throw InconsistencyError("virtual spectrum has no Hodge-Deligne diagram");
    long p = floor_int(k.alpha);
    d.add(static_cast<int>(p), static_cast<int>(k.w - p), eig_of(k.alpha, conv), m);
  }
  return d;
}

WeightedSpectrum from_hodge_deligne(const HodgeDeligneDiagram& d, EigConvention conv) {
  WeightedSpectrum s;
  for (const auto& [k, m] : d.entries()) {
    Rational f = conv == EigConvention::e_alpha ? k.eig : frac(-k.eig);
    s.add(Rational(k.p) + f, k.p + k.q, m);
  }
  return s;
}

Rational conjugate_eig(const Rational& eig) { return frac(-eig); }

bool check_pq_symmetry(const HodgeDeligneDiagram& d) {
  for (const auto& [k, m] : d.entries())
    if (d.mult(k.q, k.p, conjugate_eig(k.eig)) != m) return false;
  return true;
}

bool range_check(const HodgeDeligneDiagram& d, int k, int n, SingClass cls, MonodromyPart part) {
  if (n < 1 || k < 0 || k > 2 * n + 2)
    throw InputError("range_check: invalid (k,n) = (" + std::to_string(k) + "," +
                     std::to_string(n) + ")");
  int lo, hi;
  if (part == MonodromyPart::n) {
    lo = std::max(1, k - n + 1);
    hi = std::min(k - 1, n - 1);
  } else if (cls == SingClass::du_bois) {
    lo = std::max(1, k - n + 1);
    hi = std::min(k, n);
  } else {
    lo = std::max(2, k - n + 2);
    hi = std::min(k - 1, n - 1);
  }
  for (const auto& [key, m] : d.entries()) {
    bool is_u = key.eig == 0;
    if (is_u != (part == MonodromyPart::u)) continue;
    if (key.p < lo || key.p > hi || key.q < lo || key.q > hi) return false;
  }
  return true;
}

long f_level(const WeightedSpectrum& s) {
  if (s.empty()) return kFLevelInfinity;
  long lo = std::numeric_limits<long>::max();
  for (const auto& [k, m] : s.entries()) lo = std::min(lo, floor_int(k.alpha));
  return lo - 1;
}

bool eigen_coherent(const WeightedSpectrum& s, const HodgeDeligneDiagram& d) {
  for (const auto& [k, m] : s.entries()) {
    long p = floor_int(k.alpha);
    if (d.mult(static_cast<int>(p), static_cast<int>(k.w - p), frac(k.alpha)) < m) return false;
  }
  return s.total() == d.total();
}

std::string describe(const WeightedSpectrum& s) {
  if (s.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, m] : s.entries()) {
    long a = m < 0 ? -m : m;
    if (!first) os << (m < 0 ? " - " : " + ");
    else if (m < 0) os << "-";
    if (a != 1) os << a;
    os << "[(" << to_string(k.alpha) << "," << k.w << ")]";
    first = false;
  }
  return os.str();
}

std::string describe(const Spectrum& s) {
  if (s.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, m] : s.entries()) {
    long a = m < 0 ? -m : m;
    if (!first) os << (m < 0 ? " - " : " + ");
    else if (m < 0) os << "-";
    if (a != 1) os << a;
    os << "[" << to_string(k) << "]";
    first = false;
  }
  return os.str();
}

}  // namespace vancalc
