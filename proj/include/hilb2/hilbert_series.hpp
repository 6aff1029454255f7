// hilbert_series.hpp -- Riemann-Roch counts on Hilbert squares of K3
// surfaces: section dimensions of powers of the polarization, ideal sheaf
// dimensions in the natural embedding, and the degree extracted from the
// Hilbert polynomial.
//
// Part of hilb2.  SPDX-License-Identifier: MIT
#pragma once

#include "hilb2/numeric.hpp"

namespace hilb2::hilbert {

/// chi of a line bundle of Beauville-Bogomolov square q on a hyperkaehler
/// fourfold of K3^[2] type: C(q/2 + m + 1, m) with m = 2, in the polynomial
/// convention (valid for all even q, including negative values).
/// The rank parameter m is kept general for half-dimension m.
/// Throws OddSquare when q is odd.
Int rr_polynomial(long m, const Int& q);

/// h^0 of the e-th power of a polarization of square 2d on the Hilbert
/// square (e >= 0): 1 for e = 0, otherwise C(d e^2 + 3, 2).  All higher
/// cohomology vanishes for e >= 1, so this equals the Euler characteristic.
Int h0_power(long d, long e);

/// Dimension of the target projective space of the polarization embedding:
/// h^0(square 2d) - 1 = C(d + 3, 2) - 1.
long embedding_dimension(long d);

/// Dimension of the degree-e piece of the homogeneous ideal of the image in
/// P^n, n = embedding_dimension(d), assuming projective normality:
/// C(n + e, e) - h0_power(d, e).  May be negative when the embedding
/// assumption fails; no clamping is applied.
Int ideal_dimension(long d, long e);

/// Degree of the image variety: 4! times the leading coefficient of the
/// Hilbert polynomial, extracted by exact fourth finite differences of
/// h0_power(d, -).  Equals 12 d^2.
Int degree_from_hilbert(long d);

/// Number of quadric generators expected for the genus-g model:
/// C(g-2, 2) = rr_polynomial(2, 2g-10).
Int quadric_section_count(long g);

/// Cohomology dimensions controlling the genus-7 deformation argument:
/// tangent and normal bundle counts of the Hilbert square inside P^9 and
/// inside the 8-dimensional quadric.
struct DeformationDims {
  long h0_TP;    // h^0 of the tangent bundle of P^9
  long h1_TP;    // h^1 of the restriction to X of the tangent bundle of P^9
  long h0_N_XP;  // h^0 of the normal bundle of X in P^9
  long h1_N_XP;
  long h0_TQ;    // h^0 of the tangent bundle of the 8-dim quadric
  long h1_TQ;    // h^1 of its restriction to X
  long h0_N_XQ;  // h^0 of the normal bundle of X in the quadric
  long h1_N_XQ;
};

/// The fixed record {99, 1, 119, 0, 45, 2, 64, 0}, with the internal
/// consistency identities asserted: h0_TP = (n+1)^2 - 1 for n = 9,
/// h0_N_XP = h0_TP + 21 - 1 (21 = h^1 of the tangent bundle of X),
/// h0_N_XQ = 8 * 8.
DeformationDims genus7_deformation_dims();

}  // namespace hilb2::hilbert
