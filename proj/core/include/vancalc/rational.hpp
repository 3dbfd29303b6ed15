#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace vancalc {

// GMP rational, always kept canonical.
using Rational = mpq_class;

Rational rat(long num, long den = 1);

long floor_int(const Rational& x);
Rational frac(const Rational& x);  // x - floor(x), in [0,1)
bool is_integer(const Rational& x);

// "p/q", or "n" when the denominator is 1.
std::string to_string(const Rational& x);
Rational parse_rational(const std::string& s);

long lcm_long(long a, long b);
long gcd_long(long a, long b);

class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InconsistencyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace vancalc
