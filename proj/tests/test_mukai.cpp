// Tests for the lattice module: pairings, moduli dimensions, divisibility
// obstructions, the wall-inequality catalog, and relative dimensions.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hilb2/errors.hpp"
#include "hilb2/mukai.hpp"

using namespace hilb2;
using namespace hilb2::mukai;

TEST_CASE("pairing is symmetric and matches the closed form of the square") {
  for (long g : {5L, 7L, 8L}) {
    const GenusContext ctx = make_genus_context(g);
    for (long r = -2; r <= 2; ++r)
      for (long c = -2; c <= 2; ++c)
        for (long s = -2; s <= 2; ++s) {
          const MukaiVector u{r, c, s};
          const MukaiVector w{s, r, c};
          CHECK(pairing(u, w, ctx) == pairing(w, u, ctx));
          // <(r,c,s),(r,c,s)> = c^2 (2g-2) - 2 r s.
          CHECK(square(u, ctx) == Int(c) * c * (2 * g - 2) - 2 * Int(r) * s);
        }
  }
}

TEST_CASE("pairing is bilinear in the first slot") {
  const GenusContext ctx = make_genus_context(7);
  const MukaiVector u{2, 1, 3}, v{1, -1, 0}, w{0, 2, -1};
  const MukaiVector upv{u.r + v.r, u.c + v.c, u.s + v.s};
  CHECK(pairing(upv, w, ctx) == pairing(u, w, ctx) + pairing(v, w, ctx));
}

TEST_CASE("moduli dimension is square plus two") {
  const GenusContext g7 = make_genus_context(7);
  CHECK(moduli_dimension(MukaiVector{1, 1, 1}, g7) == 12);  // 12 - 2 + 2
  CHECK(moduli_dimension(MukaiVector{2, 1, 2}, g7) == 6);   // 12 - 8 + 2
  CHECK(moduli_dimension(MukaiVector{1, 0, 1}, g7) == 0);   // -2 + 2
  CHECK_THROWS_AS(moduli_dimension(MukaiVector{2, 0, 2}, g7),
                  NonexistentModuli);
}

TEST_CASE("genus context validation") {
  CHECK_THROWS_AS(make_genus_context(1), InvalidInput);
  CHECK_THROWS_AS(make_genus_context(-3), InvalidInput);
  CHECK_NOTHROW(make_genus_context(2));
}

TEST_CASE("divisibility-two moduli need square congruent to six mod eight") {
  for (long q = 2; q <= 40; q += 2) {
    CHECK(moduli_space_nonempty(q, 1));
    CHECK(moduli_space_nonempty(q, 2) == (q % 8 == 6));
  }
  CHECK_THROWS_AS(moduli_space_nonempty(4, 3), InvalidDivisibility);
  CHECK_THROWS_AS(moduli_space_nonempty(5, 1), InvalidInput);   // odd
  CHECK_THROWS_AS(moduli_space_nonempty(0, 1), InvalidInput);   // non-positive
  CHECK_THROWS_AS(moduli_space_nonempty(-2, 1), InvalidInput);
}

TEST_CASE("divisor classes on the Hilbert square") {
  SUBCASE("polarisation part") {
    const Hilb2Class h = hilb2_class(7, 1, 0);
    CHECK(h.square == 2 * 7 - 2);
    CHECK(h.divisibility == 1);
  }
  SUBCASE("half the exceptional divisor") {
    const Hilb2Class d = hilb2_class(7, 0, 1);
    CHECK(d.square == -2);
    CHECK(d.divisibility == 2);
  }
  SUBCASE("general combination a h - b delta") {
    const Hilb2Class c = hilb2_class(7, 2, 1);
    CHECK(c.square == 4 * 12 - 2);  // a^2 (2g-2) - 2 b^2
    CHECK(c.divisibility == 2);     // gcd(2, 2)
    const Hilb2Class c2 = hilb2_class(7, 3, 2);
    CHECK(c2.square == 9 * 12 - 8);
    CHECK(c2.divisibility == 1);    // gcd(3, 4)
  }
}

TEST_CASE("inequality catalog values for small genus") {
  struct Row {
    long g;
    const char* name;
    long value;
    bool sat;
  };
  const Row rows[] = {
      {6, "even_T", -2, true},        {6, "even_T_prime", 0, true},
      {6, "w_square", 2, true},       {7, "odd_T", 0, true},
      {7, "odd_T_prime", 8, true},    {7, "w_square", 4, true},
      {8, "even_T", -4, false},       {8, "even_T_prime", -4, false},
      {8, "w_square", 6, true},       {9, "odd_T", -2, true},
      {9, "odd_T_prime", 4, true},    {10, "even_T", -6, false},
      {11, "odd_T", -4, false},       {11, "odd_T_prime", 0, true},
      {13, "odd_T_prime", -4, false},
  };
  for (const Row& row : rows) {
    const auto cat = inequality_catalog(row.g);
    bool found = false;
    for (const auto& e : cat) {
      if (e.name != row.name) continue;
      found = true;
      CHECK(e.value == row.value);
      CHECK(e.satisfied == row.sat);
    }
    CHECK(found);
  }
}

TEST_CASE("inequality catalog closed forms over a genus sweep") {
  for (long g = 6; g <= 20; ++g) {
    const auto cat = inequality_catalog(g);
    REQUIRE(cat.size() == 3);
    for (const auto& e : cat) {
      if (e.name == "even_T") CHECK(e.value == -g + 4);
      if (e.name == "even_T_prime") CHECK(e.value == -2 * g + 12);
      if (e.name == "odd_T") CHECK(e.value == -g + 7);
      if (e.name == "odd_T_prime") CHECK(e.value == -2 * g + 22);
      if (e.name == "w_square") CHECK(e.value == 2 * g - 10);
      CHECK(e.satisfied == (e.value >= -2));
    }
    // Parity selects which T-walls appear.
    const bool even = (g % 2 == 0);
    CHECK((cat[0].name == (even ? "even_T" : "odd_T")));
    CHECK((cat[1].name == (even ? "even_T_prime" : "odd_T_prime")));
    CHECK(cat[2].name == "w_square");
  }
}

TEST_CASE("relative grassmannian dimensions are independent of the stratum") {
  for (long g = 6; g <= 14; ++g)
    for (long ell = 0; ell <= g / 2 - 2; ++ell)
      CHECK(relative_grassmannian_dim(g, ell) == 2 * g - 8);
  CHECK_THROWS_AS(relative_grassmannian_dim(7, 2), StrataBound);
  CHECK_THROWS_AS(relative_grassmannian_dim(8, 3), StrataBound);
  CHECK_THROWS_AS(relative_grassmannian_dim(6, -1), InvalidInput);
}

TEST_CASE("Chern class of the rank-two bundle from a Mukai vector") {
  const GenusContext g7 = make_genus_context(7);
  const auto ch = mukai_to_chern(MukaiVector{2, 1, 2}, g7);
  CHECK(ch.c1_mult == 1);
  CHECK(ch.c2 == 6);  // 1 * (g - 1) - (s - r)
}
