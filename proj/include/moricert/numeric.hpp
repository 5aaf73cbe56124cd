// Exact arithmetic primitives shared by every module.
//
// All certificate checks in this library are carried out over arbitrary
// precision integers and rationals; floating point only ever appears as a
// throwaway accelerator (power iteration) whose output is re-verified
// exactly before anything is reported.

#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <string>
#include <vector>

namespace moricert {

using Int = boost::multiprecision::mpz_int;
using Rat = boost::multiprecision::mpq_rational;

using IntVec = std::vector<Int>;
using RatVec = std::vector<Rat>;

inline Int num(const Rat& q) { return Int(boost::multiprecision::numerator(q)); }
inline Int den(const Rat& q) { return Int(boost::multiprecision::denominator(q)); }

inline bool is_integer(const Rat& q) { return den(q) == 1; }

// floor(p/q) for arbitrary sign of p; q > 0 by mpq canonical form.
inline Int rat_floor(const Rat& q) {
  Int n = num(q), d = den(q);
  Int f = n / d;
  if (n % d != 0 && n < 0) --f;
  return f;
}

inline Int rat_ceil(const Rat& q) { return -rat_floor(-q); }

inline Int isqrt(const Int& n) {
  return boost::multiprecision::sqrt(n);
}

// Largest integer m with m^2 <= r. Requires r >= 0.
inline Int floor_sqrt(const Rat& r) {
  Int m = isqrt(rat_floor(r));
  while (Rat((m + 1) * (m + 1)) <= r) ++m;
  while (Rat(m * m) > r) --m;  // only reachable if rat_floor rounded past r
  return m;
}

inline Int gcd(const Int& a, const Int& b) { return boost::multiprecision::gcd(a, b); }

inline Int vec_gcd(const IntVec& v) {
  Int g = 0;
  for (const auto& x : v) g = gcd(g, boost::multiprecision::abs(x));
  return g;
}

// Divides by the gcd and flips sign so the first nonzero entry is positive.
// Zero vectors pass through unchanged.
inline IntVec primitive(IntVec v) {
  Int g = vec_gcd(v);
  if (g == 0) return v;
  for (auto& x : v) x /= g;
  for (const auto& x : v) {
    if (x != 0) {
      if (x < 0)
        for (auto& y : v) y = -y;
      break;
    }
  }
  return v;
}

std::string to_string(const Int& x);
std::string to_string(const Rat& q);

}  // namespace moricert
