// bott.hpp -- Borel-Weil-Bott cohomology of homogeneous bundles on
// Grassmannians Gr(k, n) and even-dimensional smooth quadrics Q^{2m}.
// Bundles are direct sums of irreducible summands; each summand contributes
// its Weyl-module dimension in at most one cohomological degree.
//
// Part of hilb2.  SPDX-License-Identifier: MIT
#pragma once

#include <map>
#include <string>
#include <variant>
#include <vector>

#include "hilb2/numeric.hpp"
#include "hilb2/weyl.hpp"

namespace hilb2::bott {

/// The ambient homogeneous space.
struct Ambient {
  enum class Kind { Grassmannian, EvenQuadric } kind;
  int k = 0, n = 0;  // Gr(k, n), 0 < k < n
  int m = 0;         // Q^{2m}, the 2m-dimensional quadric, m >= 2

  static Ambient gr(int k, int n);
  static Ambient quadric(int m);
  int dim() const;
  std::string name() const;
};

/// Irreducible summand on a Grassmannian:
/// Schur^{quot_dual}(Q^dual) (x) Schur^{sub_dual}(U^dual) (x) O(twist),
/// where U is the rank-k tautological subbundle and Q the rank-(n-k)
/// quotient.  Patterns are weakly decreasing integer sequences of length at
/// most n-k resp. k (shorter patterns are zero-padded).
struct GrPattern {
  std::vector<long> quot_dual;
  std::vector<long> sub_dual;
};

/// Irreducible summand on an even quadric Q^{2m}: the full D_{m+1} weight
/// (first coordinate = the twisting coordinate; the remaining m must be
/// Levi-dominant: w_2 >= ... >= w_m >= |w_{m+1}|).
using QuadricWeight = weyl::Weight;

struct Summand {
  std::variant<GrPattern, QuadricWeight> descriptor;
  long twist = 0;
  Int mult = 1;
};

struct HomogBundle {
  Ambient ambient;
  std::vector<Summand> summands;
};

/// Convenience builders.
HomogBundle line_bundle(const Ambient& a, long twist, const Int& mult = 1);
HomogBundle schur_quot_dual(const Ambient& a, std::vector<long> pattern,
                            long twist, const Int& mult = 1);
HomogBundle schur_sub_dual(const Ambient& a, std::vector<long> pattern,
                           long twist, const Int& mult = 1);
HomogBundle quadric_bundle(const Ambient& a, std::vector<long long> twice_weight,
                           long twist, const Int& mult = 1);
/// The even half-spinor bundle S(d) on Q^{2m}: D_{m+1} weight
/// (d - 1/2, 1/2, ..., 1/2, -1/2).
HomogBundle spinor(const Ambient& a, long twist, const Int& mult = 1);
/// Direct sum.
HomogBundle direct_sum(const HomogBundle& a, const HomogBundle& b);

/// Cohomology dimensions by degree; degrees with zero dimension are not
/// stored.
struct CohomologyTable {
  std::map<int, Int> h;

  Int at(int degree) const;  // 0 when absent
  bool operator==(const CohomologyTable&) const = default;
};

std::string to_json(const CohomologyTable&);
CohomologyTable cohomology_table_from_json(const std::string&);

/// The weight whose Bott straightening controls a summand's cohomology.
weyl::Weight to_weight(const Ambient& a, const Summand& s);

/// Fiber dimension of a summand (independent of the twist).
Int summand_rank(const Ambient& a, const Summand& s);
Int bundle_rank(const HomogBundle& b);

/// Full cohomology of a homogeneous bundle: for each summand, straighten
/// weight + rho; singular weights contribute nothing; a regular weight of
/// straightening length l contributes its Weyl dimension in degree l.
/// Degrees always lie in [0, dim ambient].
CohomologyTable cohomology(const HomogBundle& b);

/// Alternating sum over degrees of the cohomology table.
Int euler_characteristic(const HomogBundle& b);

/// h^0 only.
Int global_sections_dim(const HomogBundle& b);

}  // namespace hilb2::bott
