#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <limits>
#include <string>

#include "errors.hpp"

namespace morcoh {

// All arithmetic in the library is exact.  Int/Rat are the only numeric
// carriers; no floating point appears anywhere.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline long long to_ll(const Int& v, const char* what = "value") {
  if (v > std::numeric_limits<long long>::max() ||
      v < std::numeric_limits<long long>::min())
    throw math_error(std::string(what) + " exceeds 64-bit range");
  return static_cast<long long>(v);
}

inline Int pow_int(Int base, long long e) {
  if (e < 0) throw math_error("pow_int: negative exponent");
  Int r = 1;
  while (e > 0) {
    if (e & 1) r *= base;
    base *= base;
    e >>= 1;
  }
  return r;
}

// C(n, k) for arbitrary-precision n >= 0.  Computed by the multiplicative
// formula; each intermediate division is exact because every prefix product
// of the formula is itself a binomial coefficient.
inline Int binomial(const Int& n, long long k) {
  if (k < 0) return 0;
  if (n < 0) throw math_error("binomial: negative upper argument");
  Int r = 1;
  for (long long i = 1; i <= k; ++i) {
    r *= n - (i - 1);
    r /= i;
    if (r == 0) return 0;  // k > n
  }
  return r;
}

inline Int factorial(long long n) {
  Int r = 1;
  for (long long i = 2; i <= n; ++i) r *= i;
  return r;
}

// Largest s with s^k <= m.  m >= 0, k >= 1.
inline Int floor_kth_root(const Int& m, long long k) {
  if (m < 0) throw math_error("floor_kth_root: negative radicand");
  if (k < 1) throw math_error("floor_kth_root: order must be >= 1");
  if (k == 1 || m <= 1) return m;
  Int hi = 1;
  while (pow_int(hi, k) <= m) hi <<= 1;  // first power exceeding m
  Int lo = hi >> 1;                      // lo^k <= m < hi^k
  while (hi - lo > 1) {
    Int mid = (lo + hi) >> 1;
    if (pow_int(mid, k) <= m)
      lo = mid;
    else
      hi = mid;
  }
  return lo;
}

// Rationals travel through JSON as decimal-free strings: "p" or "p/q",
// q > 0, gcd(p, q) = 1 (boost keeps them canonical).
inline std::string rat_to_string(const Rat& r) {
  const Int num = boost::multiprecision::numerator(r);
  const Int den = boost::multiprecision::denominator(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

inline Rat rat_from_string(const std::string& s) {
  const auto slash = s.find('/');
  Int num, den = 1;
  try {
    if (slash == std::string::npos) {
      num = Int(s);
    } else {
      num = Int(s.substr(0, slash));
      den = Int(s.substr(slash + 1));
    }
  } catch (const std::runtime_error&) {
    throw input_error("malformed rational: " + s);
  }
  if (den == 0) throw input_error("rational with zero denominator: " + s);
  return Rat(num, den);
}

}  // namespace morcoh
