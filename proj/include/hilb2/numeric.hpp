// numeric.hpp -- arbitrary-precision integer/rational aliases and binomial
// coefficients in the polynomial (falling-factorial) convention.
//
// Part of hilb2, a library for exact projective invariants of Hilbert
// squares of K3 surfaces.  SPDX-License-Identifier: MIT
#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cassert>
#include <stdexcept>

namespace hilb2 {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

/// Binomial coefficient C(a, k) = a(a-1)...(a-k+1) / k! for any integer a
/// and k >= 0 (k < 0 yields 0).  This is the polynomial convention: for
/// fixed k the value is a degree-k polynomial in a, so negative upper
/// arguments are meaningful, e.g. C(-1, 2) = 1 and C(-2, 3) = -4.
inline Int binomial(const Int& a, long k) {
  if (k < 0) return 0;
  Int num = 1;
  for (long i = 0; i < k; ++i) num *= a - i;
  Int den = 1;
  for (long i = 2; i <= k; ++i) den *= i;
  // A product of k consecutive integers is divisible by k!.
  assert(num % den == 0);
  return num / den;
}

inline Int binomial(long a, long k) { return binomial(Int(a), k); }

inline Int factorial(long n) {
  if (n < 0) throw std::invalid_argument("factorial: negative argument");
  Int r = 1;
  for (long i = 2; i <= n; ++i) r *= i;
  return r;
}

/// Exact conversion of a rational known to be integral.
inline Int rat_to_int(const Rat& q) {
  assert(boost::multiprecision::denominator(q) == 1);
  return boost::multiprecision::numerator(q);
}

}  // namespace hilb2
