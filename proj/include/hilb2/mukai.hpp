// mukai.hpp -- Mukai-lattice arithmetic for a polarized K3 surface of
// Picard rank one, moduli-space dimensions, and the induced classes on the
// Hilbert square.
//
// Part of hilb2.  SPDX-License-Identifier: MIT
#pragma once

#include <string>
#include <vector>

#include "hilb2/numeric.hpp"

namespace hilb2::mukai {

/// A Mukai vector (r, c, s) on a K3 surface with Pic = Z*L, written in the
/// basis (rank, multiple of L, degree-4 part).
struct MukaiVector {
  Int r, c, s;
};

/// Genus context: the K3 surface carries a primitive polarization L with
/// L^2 = 2g - 2.  Requires g >= 2.
struct GenusContext {
  long g;
};

GenusContext make_genus_context(long g);  // throws InvalidInput if g < 2

/// Mukai pairing <u, v> = u.c * v.c * (2g-2) - u.r * v.s - u.s * v.r.
Int pairing(const MukaiVector& u, const MukaiVector& v, const GenusContext& ctx);

/// Self-pairing <v, v>.
Int square(const MukaiVector& v, const GenusContext& ctx);

/// dim M(v) = <v,v> + 2.  Throws NonexistentModuli if <v,v> < -2.
Int moduli_dimension(const MukaiVector& v, const GenusContext& ctx);

/// Whether a 4-dimensional moduli space of the given Beauville-Bogomolov
/// square and polarization divisibility exists: gamma = 1 always, gamma = 2
/// exactly when square2d = 6 (mod 8).  Throws InvalidDivisibility for
/// gamma outside {1, 2} and InvalidInput for non-positive or odd squares.
bool moduli_space_nonempty(const Int& square2d, int gamma);

/// A class a*L2 - b*delta on the Hilbert square of the genus-g K3, where L2
/// is induced by L and 2*delta is the exceptional divisor.
struct Hilb2Class {
  Int a, b;
  Int square;        // a^2 (2g-2) - 2 b^2
  Int divisibility;  // gcd(a, 2b)
};

Hilb2Class hilb2_class(long g, const Int& a, const Int& b);

/// <v1 + v2, v1 + v2> -- the square of the extension class of two vectors.
Int extension_square(const MukaiVector& v1, const MukaiVector& v2,
                     const GenusContext& ctx);

/// One obstruction inequality: named quantity with its value at genus g and
/// whether it clears the threshold value >= -2 (i.e. the corresponding
/// extension vector still has nonempty moduli).
struct CatalogEntry {
  std::string name;
  Int value;
  bool satisfied;  // value >= -2
};

/// The obstruction catalog at genus g: destabilizing extension squares for
/// the rank-3 and rank-5 walls (parity of g selects the wall shape) plus
/// the square of the balanced rank-2 vector ("w_square" = 2g - 10).
/// Entries: even g -> even_T = -g+4, even_T_prime = -2g+12;
///          odd g  -> odd_T  = -g+7, odd_T_prime  = -2g+22;
///          always -> w_square = 2g-10.
std::vector<CatalogEntry> inequality_catalog(long g);

/// Dimension of the relative Grassmannian stratum over the moduli space of
/// rank-2 bundles with c1 = L and chi = ell + 4:
///   moduli_dimension((2, 1, ell+2)) + 4 * (chi - 4), always equal to 2g-8.
/// Throws StrataBound when ell > floor(g/2) - 2, InvalidInput when ell < 0.
Int relative_grassmannian_dim(long g, long ell);

/// Chern data of a sheaf with Mukai vector v: c1 = c1_mult * L and
/// c2 = v.c^2 (g-1) - (v.s - v.r).
struct ChernData {
  Int c1_mult;
  Int c2;
};

ChernData mukai_to_chern(const MukaiVector& v, const GenusContext& ctx);

}  // namespace hilb2::mukai
