// hilbert_series.cpp -- Riemann-Roch counts (see hilbert_series.hpp).
//
// Part of hilb2.  SPDX-License-Identifier: MIT
#include "hilb2/hilbert_series.hpp"

#include <cassert>
#include <vector>

#include "hilb2/errors.hpp"

namespace hilb2::hilbert {

Int rr_polynomial(long m, const Int& q) {
  if (q % 2 != 0) {
    throw OddSquare("Beauville-Bogomolov square must be even, got " + q.str());
  }
  return binomial(q / 2 + m + 1, m);
}

Int h0_power(long d, long e) {
  if (d < 1) throw InvalidInput("polarization square parameter d must be >= 1");
  if (e < 0) throw InvalidInput("power must be nonnegative");
  if (e == 0) return 1;
  // chi of the e-th power of a square-2d polarization on a fourfold of
  // K3^[2] type: C(d e^2 + 3, 2); no higher cohomology for e >= 1.
  return binomial(Int(d) * e * e + 3, 2);
}

long embedding_dimension(long d) {
  const Int n = binomial(Int(d) + 3, 2) - 1;
  return static_cast<long>(n);
}

Int ideal_dimension(long d, long e) {
  if (e < 1) throw InvalidInput("ideal dimension requires degree >= 1");
  const long n = embedding_dimension(d);
  return binomial(Int(n) + e, e) - h0_power(d, e);
}

Int degree_from_hilbert(long d) {
  // Fourth finite differences of e -> h0_power(d, e) are constant and equal
  // to the degree of the image fourfold.
  std::vector<Int> values;
  for (long e = 1; e <= 9; ++e) values.push_back(h0_power(d, e));
  for (int step = 0; step < 4; ++step) {
    for (std::size_t i = 0; i + 1 < values.size(); ++i) {
      values[i] = values[i + 1] - values[i];
    }
    values.pop_back();
  }
  for (std::size_t i = 1; i < values.size(); ++i) {
    assert(values[i] == values[0]);
  }
  return values[0];
}

Int quadric_section_count(long g) {
  if (g < 3) throw InvalidInput("quadric section count requires g >= 3");
  return rr_polynomial(2, Int(2) * g - 10);
}

DeformationDims genus7_deformation_dims() {
  DeformationDims out{99, 1, 119, 0, 45, 2, 64, 0};
  // h^0 of T P^9 = dim PGL(10) = (9+1)^2 - 1.
  assert(out.h0_TP == 10 * 10 - 1);
  // Normal bundle sections in P^9: moduli of the polarized fourfold is
  // 20-dimensional (h^1 of the tangent bundle is 21, one condition from
  // keeping the polarization), and every deformation stays projective:
  // h^0(N) = h^0(T P^9) + 21 - 1.
  assert(out.h0_N_XP == out.h0_TP + 21 - 1);
  // h^0 of T Q^8 = dim SO(10) = 45; inside the quadric the normal bundle
  // sections biject with H^0(L) (x) W, an 8 x 8 block.
  assert(out.h0_N_XQ == 8 * 8);
  // Euler-characteristic consistency of the two ambient presentations:
  // chi(N_{X/P}) - chi(N_{X/Q}) counts the quadric direction.
  assert((out.h0_N_XP - out.h1_N_XP) - (out.h0_N_XQ - out.h1_N_XQ) == 55);
  return out;
}

}  // namespace hilb2::hilbert
