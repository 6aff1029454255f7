// weyl.hpp -- Weyl-group combinatorics for type A and type D root systems:
// dominance, the dotted (rho-shifted) straightening underlying
// Borel-Weil-Bott, and the Weyl dimension formula.  Weights may be
// uniformly half-integral, so entries are stored doubled.
//
// Part of hilb2.  SPDX-License-Identifier: MIT
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hilb2/numeric.hpp"

namespace hilb2::weyl {

enum class System { TypeA, TypeD };

/// A weight in the standard coordinates e_1..e_n.  `twice[i]` stores twice
/// the i-th coordinate; all entries must share parity (uniformly integral
/// or uniformly half-integral), which is what spin weights of type D
/// require.  Type A weights are GL(n) weights (no determinant quotient).
struct Weight {
  System system;
  int rank;
  std::vector<long long> twice;
};

/// Build a weight from doubled entries; validates rank/parity.
Weight make_weight(System s, std::vector<long long> twice_entries);

/// Build a weight from plain integer entries.
Weight make_weight_int(System s, std::vector<long long> entries);

/// The half-sum of positive roots: type A_{n-1} on GL(n) coordinates is
/// normalized to (n-1, n-2, ..., 0); type D_n is (n-1, n-2, ..., 1, 0).
Weight rho(System s, int rank);

/// Dominance: type A weakly decreasing; type D
/// w_1 >= ... >= w_{n-1} >= |w_n|.
bool is_dominant(const Weight& w);

/// Result of straightening lambda + rho by simple reflections.
struct Straightened {
  bool singular = false;  // lambda + rho fixed by a reflection
  long length = 0;        // number of simple reflections used (if regular)
  Weight dominant;        // the dominant weight w.(lambda) = v_dom - rho
};

/// The dotted Weyl action: set v = lambda + rho; if v is singular
/// (repeated entries in type A; repeated absolute values, including two
/// zeros, in type D) report singular.  Otherwise apply simple reflections
/// (type A: swap adjacent out-of-order entries; type D: additionally
/// negate-and-swap the last two when their sum is negative), counting
/// steps, until v is strictly dominant; return the step count and
/// v_dominant - rho.
Straightened dotted_straighten(const Weight& lambda);

/// Weyl dimension formula for a dominant weight.  Type A (GL(n)):
/// prod_{i<j} (mu_i - mu_j + j - i)/(j - i).  Type D:
/// prod_{i<j} ((a_i)^2 - (a_j)^2) / ((r_i)^2 - (r_j)^2) with a = mu + rho,
/// r = rho.  Throws NotDominant if mu is not dominant.
Int weyl_dimension(const Weight& mu);

std::string to_string(const Weight& w);

}  // namespace hilb2::weyl
