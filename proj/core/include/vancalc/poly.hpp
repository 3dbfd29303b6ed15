#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "vancalc/rational.hpp"

namespace vancalc {

// a + b*sqrt(d). Elements with b == 0 mix freely with any d.
class QuadExt {
 public:
  QuadExt() = default;
  QuadExt(const Rational& a) : a_(a) {}  // NOLINT(implicit)
  QuadExt(long a) : a_(a) {}              // NOLINT(implicit)
  QuadExt(const Rational& a, const Rational& b, const Rational& d);

  const Rational& a() const { return a_; }
  const Rational& b() const { return b_; }
  const Rational& d() const { return d_; }
  bool is_zero() const { return a_ == 0 && b_ == 0; }
  QuadExt conj() const { return QuadExt(a_, -b_, d_); }
  QuadExt inverse() const;
  std::string str() const;

  friend QuadExt operator+(const QuadExt& x, const QuadExt& y);
  friend QuadExt operator-(const QuadExt& x, const QuadExt& y);
  friend QuadExt operator*(const QuadExt& x, const QuadExt& y);
  friend QuadExt operator/(const QuadExt& x, const QuadExt& y) { return x * y.inverse(); }
  QuadExt operator-() const { return QuadExt(-a_, -b_, d_); }
  QuadExt& operator+=(const QuadExt& y) { return *this = *this + y; }
  QuadExt& operator-=(const QuadExt& y) { return *this = *this - y; }
  QuadExt& operator*=(const QuadExt& y) { return *this = *this * y; }
  friend bool operator==(const QuadExt& x, const QuadExt& y) { return (x - y).is_zero(); }

 private:
  Rational a_, b_, d_;
};

inline bool is_zero(const Rational& x) { return x == 0; }
inline bool is_zero(const QuadExt& x) { return x.is_zero(); }
inline Rational inverse(const Rational& x) { return 1 / x; }
inline QuadExt inverse(const QuadExt& x) { return x.inverse(); }

bool is_rational_square(const Rational& x);

// Roots of a x^2 + b x + c over Q(sqrt(disc)); a != 0.
std::array<QuadExt, 2> quadratic_roots(const Rational& a, const Rational& b, const Rational& c);

constexpr int kPolyVars = 7;
using Monomial = std::array<int, kPolyVars>;

template <class K>
class SparsePoly {
 public:
  using Map = std::map<Monomial, K>;

  SparsePoly() = default;
  SparsePoly(const K& c) {  // NOLINT(implicit)
    if (!is_zero(c)) t_[Monomial{}] = c;
  }
  static SparsePoly var(int i) {
    Monomial m{};
    m[i] = 1;
    SparsePoly p;
    p.t_[m] = K(1);
    return p;
  }
  static SparsePoly monomial(const Monomial& m, const K& c = K(1)) {
    SparsePoly p;
    if (!is_zero(c)) p.t_[m] = c;
    return p;
  }

  const Map& terms() const { return t_; }
  bool is_zero_poly() const { return t_.empty(); }
  K coeff(const Monomial& m) const {
    auto it = t_.find(m);
    return it == t_.end() ? K(0) : it->second;
  }
  void add_term(const Monomial& m, const K& c) {
    K& v = t_[m];
    v += c;
    if (is_zero(v)) t_.erase(m);
  }

  int degree() const {
    int d = -1;
    for (const auto& [m, c] : t_) {
      int s = 0;
      for (int e : m) s += e;
      d = std::max(d, s);
    }
    return d;
  }

  bool homogeneous() const {
    int d = -2;
    for (const auto& [m, c] : t_) {
      int s = 0;
      for (int e : m) s += e;
      if (d == -2) d = s;
      else if (d != s) return false;
    }
    return true;
  }

  bool uses_only(const std::vector<int>& vars) const {
    for (const auto& [m, c] : t_)
      for (int i = 0; i < kPolyVars; ++i)
        if (m[i] && std::find(vars.begin(), vars.end(), i) == vars.end()) return false;
    return true;
  }

  SparsePoly diff(int i) const {
    SparsePoly r;
    for (const auto& [m, c] : t_) {
      if (!m[i]) continue;
      Monomial n = m;
      --n[i];
      r.add_term(n, c * K(m[i]));
    }
    return r;
  }

  // Sets the listed variables to zero.
  SparsePoly restrict_zero(const std::vector<int>& vars) const {
    SparsePoly r;
    for (const auto& [m, c] : t_) {
      bool keep = true;
      for (int v : vars)
        if (m[v]) keep = false;
      if (keep) r.t_[m] = c;
    }
    return r;
  }

  template <class L>
  L eval(const std::array<L, kPolyVars>& x) const {
    L s(0);
    for (const auto& [m, c] : t_) {
      L t = L(c);
      for (int i = 0; i < kPolyVars; ++i)
        for (int e = 0; e < m[i]; ++e) t *= x[i];
      s += t;
    }
    return s;
  }

  friend SparsePoly operator+(SparsePoly a, const SparsePoly& b) {
    for (const auto& [m, c] : b.t_) a.add_term(m, c);
    return a;
  }
  friend SparsePoly operator-(SparsePoly a, const SparsePoly& b) {
    for (const auto& [m, c] : b.t_) a.add_term(m, -c);
    return a;
  }
  friend SparsePoly operator*(const SparsePoly& a, const SparsePoly& b) {
    SparsePoly r;
    for (const auto& [m1, c1] : a.t_)
      for (const auto& [m2, c2] : b.t_) {
        Monomial m;
        for (int i = 0; i < kPolyVars; ++i) m[i] = m1[i] + m2[i];
        r.add_term(m, c1 * c2);
      }
    return r;
  }
  friend SparsePoly operator*(const K& k, const SparsePoly& a) { return SparsePoly(k) * a; }
  SparsePoly& operator+=(const SparsePoly& b) { return *this = *this + b; }
  friend bool operator==(const SparsePoly& a, const SparsePoly& b) { return a.t_ == b.t_; }

 private:
  Map t_;
};

using Poly = SparsePoly<Rational>;

std::string to_string(const Poly& p);

// All monomials of total degree d in kPolyVars variables, in a fixed order.
std::vector<Monomial> monomials_of_degree(int d);
// Restricted to the listed variables.
std::vector<Monomial> monomials_of_degree(int d, const std::vector<int>& vars);

// Coefficient vector of p in the given monomial basis; throws if p has other terms.
std::vector<Rational> coefficient_vector(const Poly& p, const std::vector<Monomial>& basis);

template <class K>
using Matrix = std::vector<std::vector<K>>;

// Row-reduces in place; returns the rank.
template <class K>
long row_reduce(Matrix<K>& a) {
  long rank = 0;
  const size_t rows = a.size(), cols = rows ? a[0].size() : 0;
  for (size_t c = 0; c < cols && size_t(rank) < rows; ++c) {
    size_t piv = rank;
    while (piv < rows && is_zero(a[piv][c])) ++piv;
    if (piv == rows) continue;
    std::swap(a[rank], a[piv]);
    K inv = inverse(a[rank][c]);
    for (size_t j = c; j < cols; ++j) a[rank][j] *= inv;
    for (size_t i = 0; i < rows; ++i) {
      if (i == size_t(rank) || is_zero(a[i][c])) continue;
      K f = a[i][c];
      for (size_t j = c; j < cols; ++j) a[i][j] -= f * a[rank][j];
    }
    ++rank;
  }
  return rank;
}

template <class K>
long rank(Matrix<K> a) {
  return row_reduce(a);
}

template <class K>
K determinant(Matrix<K> a) {
  const size_t n = a.size();
  K det(1);
  for (size_t c = 0; c < n; ++c) {
    size_t piv = c;
    while (piv < n && is_zero(a[piv][c])) ++piv;
    if (piv == n) return K(0);
    if (piv != c) {
      std::swap(a[piv], a[c]);
      det = -det;
    }
    det *= a[c][c];
    K inv = inverse(a[c][c]);
    for (size_t i = c + 1; i < n; ++i) {
      if (is_zero(a[i][c])) continue;
      K f = a[i][c] * inv;
      for (size_t j = c; j < n; ++j) a[i][j] -= f * a[c][j];
    }
  }
  return det;
}

// Basis of {x : x * A = 0} (left null space) over Q.
Matrix<Rational> left_null_space(const Matrix<Rational>& a);

// Rank of an integer-coefficient matrix reduced modulo the prime p.
long rank_mod_p(std::vector<std::vector<uint64_t>>& a, uint64_t p);
uint64_t reduce_mod_p(const Rational& x, uint64_t p);

// Dense univariate polynomial over Q, coefficients low to high, no trailing zeros.
class UPoly {
 public:
  UPoly() = default;
  explicit UPoly(std::vector<Rational> c);
  int degree() const { return int(c_.size()) - 1; }  // -1 for zero
  const std::vector<Rational>& coeffs() const { return c_; }
  Rational eval(const Rational& x) const;
  UPoly derivative() const;
  bool is_zero() const { return c_.empty(); }

  friend UPoly operator+(const UPoly& a, const UPoly& b);
  friend UPoly operator-(const UPoly& a, const UPoly& b);
  friend UPoly operator*(const UPoly& a, const UPoly& b);
  static void divmod(const UPoly& a, const UPoly& b, UPoly& q, UPoly& r);
  static UPoly gcd(UPoly a, UPoly b);  // monic
  // Unique polynomial of degree < xs.size() through the points.
  static UPoly interpolate(const std::vector<Rational>& xs, const std::vector<Rational>& ys);

 private:
  void trim();
  std::vector<Rational> c_;
};

}  // namespace vancalc
