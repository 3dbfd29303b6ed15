#include "vancalc/rational.hpp"

#include <cctype>
#include <numeric>

namespace vancalc {

Rational rat(long num, long den) {
  if (den == 0) throw InputError("zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

long floor_int(const Rational& x) {
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  if (!q.fits_slong_p()) throw InputError("rational out of range");
  return q.get_si();
}

Rational frac(const Rational& x) { return x - Rational(floor_int(x)); }

bool is_integer(const Rational& x) { return x.get_den() == 1; }

std::string to_string(const Rational& x) {
  if (x.get_den() == 1) return x.get_num().get_str();
  return x.get_num().get_str() + "/" + x.get_den().get_str();
}

Rational parse_rational(const std::string& s) {
  std::string t;
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c))) t.push_back(c);
  if (t.empty()) throw InputError("empty rational");
  auto slash = t.find('/');
  auto valid_int = [](const std::string& u) {
    if (u.empty()) return false;
    size_t i = (u[0] == '-' || u[0] == '+') ? 1 : 0;
    if (i == u.size()) return false;
    for (; i < u.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(u[i]))) return false;
    return true;
  };
  std::string num = t.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : t.substr(slash + 1);
  if (!valid_int(num) || !valid_int(den)) throw InputError("bad rational '" + s + "'");
  if (num[0] == '+') num.erase(0, 1);
  if (den[0] == '+') den.erase(0, 1);
  mpz_class n(num), d(den);
  if (d == 0) throw InputError("zero denominator in '" + s + "'");
  Rational r(n, d);
  r.canonicalize();
  return r;
}

long gcd_long(long a, long b) { return std::gcd(a, b); }
long lcm_long(long a, long b) { return std::lcm(a, b); }

}  // namespace vancalc
