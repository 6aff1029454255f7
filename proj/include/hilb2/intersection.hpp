// intersection.hpp -- exact intersection theory on Grassmannians and even
// quadrics: Schubert calculus via the Littlewood-Richardson rule, the
// cohomology ring of an even quadric, Chern classes of Schur bundles by the
// splitting principle, Porteous degeneracy classes, Todd classes and
// Riemann-Roch on quadrics, and the closed degree formulas for quadric rank
// strata of Hilbert squares.
//
// Part of hilb2.  SPDX-License-Identifier: MIT
#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "hilb2/numeric.hpp"

namespace hilb2::intersect {

// ---------------------------------------------------------------------------
// Schubert calculus on Gr(k, n)

using Partition = std::vector<long>;  // weakly decreasing, positive parts

/// Conjugate (transpose) partition.
Partition conjugate(const Partition& p);

/// An integral cohomology class on Gr(k, n) in the Schubert basis; classes
/// whose partition leaves the k x (n-k) box are zero and never stored.
struct SchubertClass {
  int k = 0, n = 0;
  std::map<Partition, Int> coeffs;

  Int coeff(const Partition& p) const;
  bool is_zero() const { return coeffs.empty(); }
  bool operator==(const SchubertClass&) const = default;
};

SchubertClass schubert(int k, int n, const Partition& p);  // sigma_p (or 0)
SchubertClass sc_add(const SchubertClass& a, const SchubertClass& b);
SchubertClass sc_scale(const Int& c, const SchubertClass& a);

/// Littlewood-Richardson product; partitions overflowing the box drop out.
SchubertClass lr_multiply(const SchubertClass& a, const SchubertClass& b);

/// Coefficient of the point class (the full k x (n-k) box).
Int sc_integrate(const SchubertClass& a);

/// Degree of the Pluecker embedding of Gr(k, n): integral of sigma_1 to the
/// power k(n-k).  Requires k(n-k) <= 24.
Int grassmannian_degree(int k, int n);

// ---------------------------------------------------------------------------
// The cohomology ring of an even quadric Q^{2m}, m in {2, 3, 4}

/// A class on Q^{2m} with rational coefficients: powers h^0..h^{m-1} of the
/// hyperplane class, the two middle-dimensional ruling classes a, b (with
/// h^m = a + b), and the point-normalized generators of degrees m+1..2m
/// (the degree-(m+j) generator is the class of a linear P^{m-j} on Q).
struct QuadricClass {
  int m = 0;
  std::vector<Rat> low;   // coefficients of h^0..h^{m-1}
  Rat mid_a, mid_b;       // coefficients of a, b
  std::vector<Rat> high;  // coefficients of the degree m+1..2m generators

  bool operator==(const QuadricClass&) const = default;
};

QuadricClass qc_zero(int m);
QuadricClass qc_h_power(int m, int j);  // h^j as a class, 0 <= j <= 2m
QuadricClass qc_ruling_a(int m);
QuadricClass qc_ruling_b(int m);
QuadricClass qc_add(const QuadricClass& x, const QuadricClass& y);
QuadricClass qc_scale(const Rat& c, const QuadricClass& x);

/// Ring multiplication: h^m = a + b; for even m, a^2 = b^2 = pt, ab = 0;
/// for odd m, a^2 = b^2 = 0, ab = pt; h * a = h * b = [P^{m-1}].
QuadricClass qc_multiply(const QuadricClass& x, const QuadricClass& y);

/// Coefficient of the point class; the integral of h^{2m} is 2.
Rat qc_integrate_rat(const QuadricClass& x);
Int qc_integrate(const QuadricClass& x);  // throws NonIntegral if fractional

// ---------------------------------------------------------------------------
// Chern polynomials

/// A polynomial in the hyperplane class of Q^{2m} with rational
/// coefficients, truncated beyond degree 2m.  Sufficient for Todd classes,
/// Chern characters of spinor pulls, and Porteous inputs on quadrics.
struct HSeries {
  int m = 0;
  std::vector<Rat> coeff;  // index = power of h, size 2m+1

  Rat at(int j) const;
};

HSeries hs_constant(int m, const Rat& c);
HSeries hs_h_linear(int m, const Rat& c0, const Rat& c1);  // c0 + c1 h
HSeries hs_add(const HSeries& x, const HSeries& y);
HSeries hs_multiply(const HSeries& x, const HSeries& y);
HSeries hs_scale(const Rat& c, const HSeries& x);
/// Multiplicative inverse (constant term must be nonzero).
HSeries hs_invert(const HSeries& x);
/// exp(c h) truncated.
HSeries hs_exp_h(int m, const Rat& c);
/// Conversion h^j -> QuadricClass, splitting h^m evenly into a + b.
QuadricClass hs_to_quadric_class(const HSeries& x);

/// A Chern polynomial on Gr(k, n): graded pieces in the Schubert basis with
/// rational coefficients (integral for actual bundles; virtual differences
/// may be used as Porteous input).
struct GrChern {
  int k = 0, n = 0;
  std::vector<std::map<Partition, Rat>> graded;  // index = degree 0..k(n-k)
};

/// Total Chern class of Schur^pattern(Q^dual) (x) O(twist) resp. of
/// Schur^pattern(U^dual) (x) O(twist), computed by the splitting principle
/// with exact symmetric-function arithmetic.
enum class Side { QuotDual, SubDual };
GrChern chern_schur_bundle(int k, int n, const Partition& pattern, Side side,
                           long twist);

/// c(-F) for a bundle on the quadric given by its total Chern h-series.
HSeries hs_chern_inverse(const HSeries& total_chern);

// ---------------------------------------------------------------------------
// Porteous classes for the built-in determinantal models

/// The corank-r degeneracy class of a map F -> G between bundles of equal
/// rank f is det( c_{f-r+j-i}(G - F) )_{1 <= i,j <= f-r}.  For the built-in
/// cases f - r = 2, so the class is c_2^2 - c_1 c_3 of the virtual
/// difference.
///
/// Genus-7 model: expected class of the corank-2 locus on Q^8, as a
/// quadric class, and its degree against h^4 (equals 48 = 12 * 2^2).
QuadricClass porteous_class_genus7();
Int porteous_degree_genus7();

/// Genus-8 model: the analogous class on Gr(2, 6) and its degree against
/// sigma_1^4 (equals 108 = 12 * 3^2).
SchubertClass porteous_class_genus8();
Int porteous_degree_genus8();

/// Corank-0 sanity value: the empty determinant, identically 1.
Int porteous_corank0_is_one();

/// First degeneracy invariant c_1(G - F): 4h on the quadric resp.
/// 3 sigma_1 on the Grassmannian.
HSeries first_degeneracy_class_genus7();
SchubertClass first_degeneracy_class_genus8();

// ---------------------------------------------------------------------------
// Todd classes and Hirzebruch-Riemann-Roch on even quadrics

/// Todd class of Q^{2m} (m <= 6): td(T Q) = T(h)^{2m+2} / T(2h) with
/// T(x) = x / (1 - e^{-x}), truncated at h^{2m}.
HSeries todd_quadric(int m);

/// chi of a class with Chern character `ch` on Q^{2m}.
Rat hrr_euler(const HSeries& ch, const HSeries& todd);

/// Chern classes c_1, c_2, c_3 (coefficients of h, h^2, h^3) of the even
/// spinor bundle on Q^8, recovered from the four Euler characteristics
/// chi(S(t)), t = 0..3, via the self-dual half twist.  Requires c_1 = -4;
/// throws InconsistentHRR when the linear system is singular or the
/// solution is not integral.
struct SpinorChern {
  Int c1, c2, c3;
  std::vector<Rat> ch;  // Chern character coefficients ch_0..ch_8 (h-powers)
};

SpinorChern spinor_chern_via_hrr();

// ---------------------------------------------------------------------------
// Degree formulas for quadric rank strata

/// Degree of the symmetroid hypersurface stratum:
/// prod_{k=0}^{2} C(2g-5, g-2k) / C(2g-5, 2k); throws NonIntegral if the
/// product is fractional.
Int harris_tu_sigma_degree(long g);

/// Degree of the vertex locus stratum: (2g-9)! / (g-5)!.
Int deg_y0(long g);

/// Degree of the maximal isotropic stratum for even g:
/// 12 (2g-8)! / ((g/2-2)! (g/2-1)! (g/2)! (g/2+1)!), which equals
/// grassmannian_degree(4, g/2 + 2).
Int deg_y_top(long g);

/// sigma = y0 + y_top + residual (even g) or sigma = y0 + residual (odd g);
/// the residual is asserted nonnegative.
struct SigmaDecomposition {
  long g;
  Int total;     // harris_tu_sigma_degree
  Int y0;
  Int y_top;     // 0 for odd g
  Int residual;
};

SigmaDecomposition sigma_decomposition(long g);

}  // namespace hilb2::intersect
