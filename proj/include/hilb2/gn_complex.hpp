// gn_complex.hpp -- bookkeeping for the corank-2 determinantal resolution
// (Gulliksen-Negard shape) of the ideal sheaf of a Hilbert square inside
// its homogeneous ambient: the four-term complex, the first page of the
// hypercohomology spectral sequence, and the resulting ideal-sheaf
// cohomology and generator counts.
//
// Two built-in cases: the genus-7 model on the 8-dimensional quadric
// (F = even spinor bundle, r = 8) and the genus-8 model on Gr(2, 6)
// (F = second wedge of the dual quotient, r = 6).
//
// Part of hilb2.  SPDX-License-Identifier: MIT
#pragma once

#include <array>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "hilb2/bott.hpp"
#include "hilb2/numeric.hpp"

namespace hilb2::gn {

enum class Case { Genus7, Genus8 };

Case case_from_name(const std::string& name);  // throws UnknownFixture
std::string case_name(Case c);

/// Structural data of a case: the ambient, the common rank r of the input
/// bundle F and of the trivial bundle G = O^r it maps to, and the twist of
/// the determinant line F_3 = O(d + det_twist).
struct CaseData {
  bott::Ambient ambient;
  int r;
  long det_twist;
  std::string f_name;  // display name of the input bundle
};

CaseData case_data(Case c);

/// The four terms [F_3, F_2, F_1, F_0] of the twisted resolution
/// 0 -> F_3 -> F_2 -> F_1 -> F_0 -> I(d) -> 0, where
///   genus 7: [O(d-8), S(d-4)^8, Lambda(d) + O(d-4)^63, S(d-3)^8]
///   genus 8: [O(d-6), M(d-3)^6, Lambda(d) + O(d-3)^35, M(d-2)^6]
/// and Lambda is the rank-(r^2 - 1) kernel of the trace pairing, handled
/// through its two filtration pieces (sub piece first, quotient second).
std::array<bott::HomogBundle, 4> gn_terms(Case c, long d);

/// The two filtration pieces of Lambda(d), sub piece first.
std::pair<bott::HomogBundle, bott::HomogBundle> lambda_pieces(Case c, long d);

/// Ranks of [F_3, F_2, F_1, F_0]: (1, 64, 126, 64) resp. (1, 36, 70, 36).
std::array<Int, 4> term_ranks(Case c);

/// First page of the hypercohomology spectral sequence:
/// E_1^{p,q} = H^q(F_{-p}(d)) for p in [-3, 0], q in [0, dim ambient].
/// The Lambda term contributes the sum of its two filtration pieces.
struct E1Page {
  long d = 0;
  std::map<std::pair<int, int>, Int> entries;  // (p, q) -> dimension, nonzero only

  Int at(int p, int q) const;
};

E1Page e1_page(Case c, long d);

/// Cohomology of the twisted ideal sheaf, h^i(I(d)), derived from the E_1
/// page by conservative degeneration bookkeeping:
///  - if every entry with q > 0 vanishes, the section row is exact off the
///    edge and h^0 = the alternating sum of h^0(F_k); all higher vanish;
///  - otherwise every q > 0 entry must be isolated (all differentials on
///    all pages have zero source or target by support alone) and the q = 0
///    row must vanish; then h^i = sum of surviving entries of total degree i;
///  - in any other configuration, and whenever the two Lambda filtration
///    pieces have cohomology in adjacent degrees (connecting maps could be
///    nonzero), throws NotDegenerate.
/// The returned map always contains the key 0; other keys only if nonzero.
std::map<int, Int> ideal_cohomology(Case c, long d);

/// Generator counts of the homogeneous ideal in low degrees, with the
/// distinguished extension splitting of the top-degree generator space
/// (1 distinguished generator + a cokernel piece).
struct GeneratorReport {
  Case which;
  std::vector<std::pair<std::string, Int>> counts;
  std::pair<Int, Int> extension;  // (distinguished, complement)
  long extension_degree;
};

GeneratorReport generator_report(Case c);

/// Cross-module identities tying resolution output to section counts:
/// genus 7: 55 + 65 = 120 = dim I_X(4) in P^9 for the pair of models;
/// genus 8: (C(17,3) - 490) + 55 = 245 = dim I(3) for the square-6 model.
struct CrossCheck {
  std::string identity;
  Int lhs, rhs;
  bool pass;
};

std::vector<CrossCheck> cross_check_ideal(Case c);

/// Same checks with the resolution-derived generator count overridden, for
/// validating that the check catches wrong counts.
std::vector<CrossCheck> cross_check_with_count(Case c, const Int& generators);

}  // namespace hilb2::gn
