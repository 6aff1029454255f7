// mukai.cpp -- Mukai-lattice arithmetic (see mukai.hpp).
//
// Part of hilb2.  SPDX-License-Identifier: MIT
#include "hilb2/mukai.hpp"

#include "hilb2/errors.hpp"

namespace hilb2::mukai {

GenusContext make_genus_context(long g) {
  if (g < 2) throw InvalidInput("genus context requires g >= 2");
  return GenusContext{g};
}

Int pairing(const MukaiVector& u, const MukaiVector& v, const GenusContext& ctx) {
  const Int deg = 2 * ctx.g - 2;  // L^2 on the K3
  return u.c * v.c * deg - u.r * v.s - u.s * v.r;
}

Int square(const MukaiVector& v, const GenusContext& ctx) {
  return pairing(v, v, ctx);
}

Int moduli_dimension(const MukaiVector& v, const GenusContext& ctx) {
  const Int sq = square(v, ctx);
  if (sq < -2) {
    throw NonexistentModuli("moduli space empty: Mukai square " + sq.str() +
                            " < -2");
  }
  return sq + 2;
}

bool moduli_space_nonempty(const Int& square2d, int gamma) {
  if (square2d <= 0 || square2d % 2 != 0) {
    throw InvalidInput("moduli_space_nonempty expects a positive even square");
  }
  if (gamma == 1) return true;
  if (gamma == 2) {
    // Divisibility 2 forces the square to be 6 mod 8.
    return square2d % 8 == 6;
  }
  throw InvalidDivisibility("polarization divisibility must be 1 or 2, got " +
                            std::to_string(gamma));
}

Hilb2Class hilb2_class(long g, const Int& a, const Int& b) {
  if (g < 2) throw InvalidInput("hilb2_class requires g >= 2");
  Hilb2Class out;
  out.a = a;
  out.b = b;
  out.square = a * a * (2 * g - 2) - 2 * b * b;
  out.divisibility = boost::multiprecision::gcd(abs(a), abs(Int(2) * b));
  return out;
}

Int extension_square(const MukaiVector& v1, const MukaiVector& v2,
                     const GenusContext& ctx) {
  const MukaiVector sum{v1.r + v2.r, v1.c + v2.c, v1.s + v2.s};
  return square(sum, ctx);
}

std::vector<CatalogEntry> inequality_catalog(long g) {
  if (g < 5) throw InvalidInput("inequality catalog requires g >= 5");
  const GenusContext ctx{g};
  const long half = g / 2;
  std::vector<CatalogEntry> out;
  const auto push = [&out](std::string name, Int value) {
    const bool ok = value >= -2;
    out.push_back(CatalogEntry{std::move(name), std::move(value), ok});
  };
  // Rank-3 wall: v1 = (2, -1, floor(g/2)), v2 = (1, 0, -1).
  const Int t3 = extension_square({2, -1, half}, {1, 0, -1}, ctx);
  // Rank-5 wall: v1 = (4, -2, 2 floor(g/2)), v2 = (1, 0, -2).
  const Int t5 = extension_square({4, -2, 2 * half}, {1, 0, -2}, ctx);
  if (g % 2 == 0) {
    push("even_T", t3);        // -g + 4
    push("even_T_prime", t5);  // -2g + 12
  } else {
    push("odd_T", t3);        // -g + 7
    push("odd_T_prime", t5);  // -2g + 22
  }
  // The balanced rank-2 vector w = (2, 1, 2): square 2g - 10.
  push("w_square", square({2, 1, 2}, ctx));
  return out;
}

Int relative_grassmannian_dim(long g, long ell) {
  if (g < 4) throw InvalidInput("relative stratum requires g >= 4");
  if (ell < 0) throw InvalidInput("stratum index must be nonnegative");
  if (ell > g / 2 - 2) {
    throw StrataBound("stratum index " + std::to_string(ell) +
                      " exceeds floor(g/2) - 2 = " + std::to_string(g / 2 - 2));
  }
  const GenusContext ctx{g};
  const Int base = moduli_dimension({2, 1, ell + 2}, ctx);
  const long chi = 2 + (ell + 2);
  return base + 4 * (Int(chi) - 4);
}

ChernData mukai_to_chern(const MukaiVector& v, const GenusContext& ctx) {
  ChernData out;
  out.c1_mult = v.c;
  out.c2 = v.c * v.c * (ctx.g - 1) - (v.s - v.r);
  return out;
}

}  // namespace hilb2::mukai
