#include "vancalc/poly.hpp"

#include <functional>
#include <sstream>

namespace vancalc {

QuadExt::QuadExt(const Rational& a, const Rational& b, const Rational& d) : a_(a), b_(b), d_(d) {
  if (b_ == 0) d_ = 0;
}

static Rational common_d(const QuadExt& x, const QuadExt& y) {
  if (x.b() == 0) return y.d();
  if (y.b() == 0) return x.d();
  if (x.d() != y.d()) throw InputError("QuadExt: mixing different square roots");
  return x.d();
}

QuadExt operator+(const QuadExt& x, const QuadExt& y) {
  return QuadExt(x.a_ + y.a_, x.b_ + y.b_, common_d(x, y));
}

QuadExt operator-(const QuadExt& x, const QuadExt& y) {
  return QuadExt(x.a_ - y.a_, x.b_ - y.b_, common_d(x, y));
}

QuadExt operator*(const QuadExt& x, const QuadExt& y) {
  Rational d = common_d(x, y);
  return QuadExt(x.a_ * y.a_ + d * x.b_ * y.b_, x.a_ * y.b_ + x.b_ * y.a_, d);
}

QuadExt QuadExt::inverse() const {
  Rational n = a_ * a_ - d_ * b_ * b_;
  if (n == 0) throw InconsistencyError("QuadExt: division by zero");
  return QuadExt(a_ / n, -b_ / n, d_);
}

std::string QuadExt::str() const {
  if (b_ == 0) return vancalc::to_string(a_);
  return vancalc::to_string(a_) + (b_ < 0 ? " - " : " + ") + vancalc::to_string(abs(b_)) +
         "*sqrt(" + vancalc::to_string(d_) + ")";
}

bool is_rational_square(const Rational& x) {
  if (x < 0) return false;
  return mpz_perfect_square_p(x.get_num_mpz_t()) && mpz_perfect_square_p(x.get_den_mpz_t());
}

std::array<QuadExt, 2> quadratic_roots(const Rational& a, const Rational& b, const Rational& c) {
  if (a == 0) throw InputError("quadratic_roots: leading coefficient is zero");
  Rational disc = b * b - 4 * a * c;
  Rational inv2a = 1 / (2 * a);
  if (is_rational_square(disc)) {
    mpz_class n, d;
    mpz_sqrt(n.get_mpz_t(), disc.get_num_mpz_t());
    mpz_sqrt(d.get_mpz_t(), disc.get_den_mpz_t());
    Rational s(n, d);
    s.canonicalize();
    return {QuadExt((-b + s) * inv2a), QuadExt((-b - s) * inv2a)};
  }
  return {QuadExt(-b * inv2a, inv2a, disc), QuadExt(-b * inv2a, -inv2a, disc)};
}

std::string to_string(const Poly& p) {
  if (p.is_zero_poly()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    const auto& [m, c] = *it;
    if (!first) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << "-";
    Rational a = abs(c);
    bool constant = true;
    for (int e : m)
      if (e) constant = false;
    if (a != 1 || constant) os << vancalc::to_string(a);
    bool star = a != 1;
    for (int i = 0; i < kPolyVars; ++i) {
      if (!m[i]) continue;
      if (star) os << "*";
      os << "Z" << i;
      if (m[i] > 1) os << "^" << m[i];
      star = true;
    }
    first = false;
  }
  return os.str();
}

std::vector<Monomial> monomials_of_degree(int d, const std::vector<int>& vars) {
  std::vector<Monomial> out;
  Monomial cur{};
  std::function<void(size_t, int)> rec = [&](size_t i, int left) {
    if (i + 1 == vars.size()) {
      cur[vars[i]] = left;
      out.push_back(cur);
      cur[vars[i]] = 0;
      return;
    }
    for (int e = left; e >= 0; --e) {
      cur[vars[i]] = e;
      rec(i + 1, left - e);
    }
    cur[vars[i]] = 0;
  };
  if (d < 0 || vars.empty()) return out;
  rec(0, d);
  return out;
}

std::vector<Monomial> monomials_of_degree(int d) {
  std::vector<int> all(kPolyVars);
  for (int i = 0; i < kPolyVars; ++i) all[i] = i;
  return monomials_of_degree(d, all);
}

std::vector<Rational> coefficient_vector(const Poly& p, const std::vector<Monomial>& basis) {
  std::vector<Rational> v(basis.size());
  std::map<Monomial, size_t> idx;
  for (size_t i = 0; i < basis.size(); ++i) idx[basis[i]] = i;
  for (const auto& [m, c] : p.terms()) {
    auto it = idx.find(m);
    if (it == idx.end()) throw InputError("coefficient_vector: monomial outside the basis");
    v[it->second] = c;
  }
  return v;
}

Matrix<Rational> left_null_space(const Matrix<Rational>& a) {
  // x A = 0  <=>  A^T x^T = 0; reduce [A | I] and read off zero rows.
  const size_t rows = a.size(), cols = rows ? a[0].size() : 0;
  Matrix<Rational> aug(rows, std::vector<Rational>(cols + rows));
  for (size_t i = 0; i < rows; ++i) {
    for (size_t j = 0; j < cols; ++j) aug[i][j] = a[i][j];
    aug[i][cols + i] = 1;
  }
  // eliminate only on the first `cols` columns
  size_t r = 0;
  for (size_t c = 0; c < cols && r < rows; ++c) {
    size_t piv = r;
    while (piv < rows && aug[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(aug[r], aug[piv]);
    for (size_t i = 0; i < rows; ++i) {
      if (i == r || aug[i][c] == 0) continue;
      Rational f = aug[i][c] / aug[r][c];
      for (size_t j = c; j < cols + rows; ++j) aug[i][j] -= f * aug[r][j];
    }
    ++r;
  }
  Matrix<Rational> out;
  for (size_t i = r; i < rows; ++i) out.emplace_back(aug[i].begin() + cols, aug[i].end());
  return out;
}

static uint64_t pow_mod(uint64_t b, uint64_t e, uint64_t p) {
  unsigned __int128 r = 1, x = b % p;
  while (e) {
    if (e & 1) r = r * x % p;
    x = x * x % p;
    e >>= 1;
  }
  return uint64_t(r);
}

uint64_t reduce_mod_p(const Rational& x, uint64_t p) {
  mpz_class n = x.get_num() % mpz_class(static_cast<unsigned long>(p));
  if (n < 0) n += static_cast<unsigned long>(p);
  mpz_class d = x.get_den() % mpz_class(static_cast<unsigned long>(p));
  if (d == 0) throw InputError("reduce_mod_p: denominator divisible by p");
  uint64_t nn = n.get_ui(), dd = d.get_ui();
  return uint64_t((unsigned __int128)nn * pow_mod(dd, p - 2, p) % p);
}

template <class Mod>
static long rank_mod_impl(std::vector<std::vector<uint64_t>>& a, uint64_t p, Mod mod) {
  long rank = 0;
  const size_t rows = a.size(), cols = rows ? a[0].size() : 0;
  for (size_t c = 0; c < cols && size_t(rank) < rows; ++c) {
    size_t piv = rank;
    while (piv < rows && a[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(a[rank], a[piv]);
    uint64_t inv = pow_mod(a[rank][c], p - 2, p);
    std::vector<size_t> nz;
    for (size_t j = c; j < cols; ++j) {
      a[rank][j] = mod(a[rank][j] * inv);
      if (a[rank][j]) nz.push_back(j);
    }
    for (size_t i = rank + 1; i < rows; ++i) {
      uint64_t f = a[i][c];
      if (!f) continue;
      f = p - f;
      for (size_t j : nz) a[i][j] = mod(a[i][j] + f * a[rank][j]);
    }
    ++rank;
  }
  return rank;
}

long rank_mod_p(std::vector<std::vector<uint64_t>>& a, uint64_t p) {
  if (p >= (1ULL << 31)) throw InputError("rank_mod_p: prime must be below 2^31");
  // entries < 2^31, so a + f*b < 2^63
  if (p == 2147483647ULL) return rank_mod_impl(a, p, [](uint64_t x) { return x % 2147483647ULL; });
  return rank_mod_impl(a, p, [p](uint64_t x) { return x % p; });
}

UPoly::UPoly(std::vector<Rational> c) : c_(std::move(c)) { trim(); }

void UPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Rational UPoly::eval(const Rational& x) const {
  Rational s = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) s = s * x + *it;
  return s;
}

UPoly UPoly::derivative() const {
  std::vector<Rational> d;
  for (size_t i = 1; i < c_.size(); ++i) d.push_back(c_[i] * long(i));
  return UPoly(d);
}

UPoly operator+(const UPoly& a, const UPoly& b) {
  std::vector<Rational> c(std::max(a.c_.size(), b.c_.size()));
  for (size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
  for (size_t i = 0; i < b.c_.size(); ++i) c[i] += b.c_[i];
  return UPoly(c);
}

UPoly operator-(const UPoly& a, const UPoly& b) {
  std::vector<Rational> c(std::max(a.c_.size(), b.c_.size()));
  for (size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
  for (size_t i = 0; i < b.c_.size(); ++i) c[i] -= b.c_[i];
  return UPoly(c);
}

UPoly operator*(const UPoly& a, const UPoly& b) {
  if (a.is_zero() || b.is_zero()) return UPoly();
  std::vector<Rational> c(a.c_.size() + b.c_.size() - 1);
  for (size_t i = 0; i < a.c_.size(); ++i)
    for (size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
  return UPoly(c);
}

void UPoly::divmod(const UPoly& a, const UPoly& b, UPoly& q, UPoly& r) {
  if (b.is_zero()) throw InputError("UPoly::divmod: division by zero");
  std::vector<Rational> rem = a.c_;
  std::vector<Rational> quo(a.c_.size() >= b.c_.size() ? a.c_.size() - b.c_.size() + 1 : 0);
  const Rational lead = b.c_.back();
  for (long i = long(rem.size()) - 1; i >= long(b.c_.size()) - 1; --i) {
    if (rem[i] == 0) continue;
    Rational f = rem[i] / lead;
    size_t shift = i - (b.c_.size() - 1);
    quo[shift] = f;
    for (size_t j = 0; j < b.c_.size(); ++j) rem[shift + j] -= f * b.c_[j];
  }
  q = UPoly(quo);
  r = UPoly(rem);
}

UPoly UPoly::gcd(UPoly a, UPoly b) {
  while (!b.is_zero()) {
    UPoly q, r;
    divmod(a, b, q, r);
    a = b;
    b = r;
  }
  if (a.is_zero()) return a;
  Rational lead = a.c_.back();
  for (auto& x : a.c_) x /= lead;
  return a;
}

UPoly UPoly::interpolate(const std::vector<Rational>& xs, const std::vector<Rational>& ys) {
  if (xs.size() != ys.size()) throw InputError("interpolate: size mismatch");
  UPoly acc;
  for (size_t i = 0; i < xs.size(); ++i) {
    UPoly basis(std::vector<Rational>{1});
    Rational denom = 1;
    for (size_t j = 0; j < xs.size(); ++j) {
      if (j == i) continue;
      basis = basis * UPoly(std::vector<Rational>{-xs[j], 1});
      denom *= xs[i] - xs[j];
    }
    if (denom == 0) throw InputError("interpolate: repeated nodes");
    std::vector<Rational> c = basis.c_;
    for (auto& x : c) x *= ys[i] / denom;
    acc = acc + UPoly(c);
  }
  return acc;
}

}  // namespace vancalc
