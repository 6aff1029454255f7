// Tests for Weyl-group straightening and the dimension formula, checked
// against a breadth-first orbit search and the hook content formula.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "hilb2/errors.hpp"
#include "hilb2/weyl.hpp"
#include "oracles.hpp"

using namespace hilb2;
using namespace hilb2::weyl;

TEST_CASE("weight construction validates rank and parity") {
  CHECK_NOTHROW(make_weight(System::TypeA, {2, 4, 0}));
  CHECK_NOTHROW(make_weight(System::TypeD, {1, 1, -1}));   // half-integral
  CHECK_THROWS_AS(make_weight(System::TypeA, {1, 2}), InvalidInput);  // mixed
  CHECK_THROWS_AS(make_weight(System::TypeA, {}), InvalidInput);
}

TEST_CASE("rho in both types") {
  const Weight ra = rho(System::TypeA, 4);
  CHECK(ra.twice == std::vector<long long>{6, 4, 2, 0});
  const Weight rd = rho(System::TypeD, 5);
  CHECK(rd.twice == std::vector<long long>{8, 6, 4, 2, 0});
}

TEST_CASE("dominance") {
  CHECK(is_dominant(make_weight_int(System::TypeA, {3, 1, 0})));
  CHECK_FALSE(is_dominant(make_weight_int(System::TypeA, {1, 2, 0})));
  CHECK(is_dominant(make_weight_int(System::TypeD, {2, 1, -1})));
  CHECK(is_dominant(make_weight_int(System::TypeD, {2, 1, 1})));
  CHECK_FALSE(is_dominant(make_weight_int(System::TypeD, {2, -1, 0})));
  CHECK_FALSE(is_dominant(make_weight_int(System::TypeD, {1, 2, 0})));
}

TEST_CASE("straightening small hand-checked cases") {
  SUBCASE("type A one swap") {
    const auto r = dotted_straighten(make_weight_int(System::TypeA, {0, 2}));
    REQUIRE_FALSE(r.singular);
    CHECK(r.length == 1);
    CHECK(r.dominant.twice == std::vector<long long>{2, 2});
  }
  SUBCASE("type A singular") {
    const auto r = dotted_straighten(make_weight_int(System::TypeA, {0, 1}));
    CHECK(r.singular);
  }
  SUBCASE("type D singular by repeated absolute value") {
    const auto r =
        dotted_straighten(make_weight_int(System::TypeD, {0, 0, -2}));
    CHECK(r.singular);  // shifted vector (2, 1, -2)
  }
  SUBCASE("type D two steps") {
    const auto r =
        dotted_straighten(make_weight_int(System::TypeD, {0, -1, -3}));
    REQUIRE_FALSE(r.singular);
    CHECK(r.length == 2);  // (2,0,-3) -> (2,3,0) -> (3,2,0)
    CHECK(r.dominant.twice == std::vector<long long>{2, 2, 0});
  }
  SUBCASE("already dominant means length zero") {
    const auto r =
        dotted_straighten(make_weight_int(System::TypeA, {5, 3, 0}));
    REQUIRE_FALSE(r.singular);
    CHECK(r.length == 0);
    CHECK(r.dominant.twice == std::vector<long long>{10, 6, 0});
  }
}

namespace {

/// Compare dotted_straighten with the breadth-first orbit oracle on `count`
/// random weights; returns the number of agreements.
template <typename Oracle>
int agreement(System sys, int rank, int count, unsigned seed, Oracle oracle) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<long long> entry(-6, 6);
  std::uniform_int_distribution<int> par(0, 1);
  int agree = 0;
  for (int t = 0; t < count; ++t) {
    const long long parity = par(rng);
    std::vector<long long> twice(rank);
    for (auto& x : twice) x = 2 * entry(rng) + (sys == System::TypeD ? parity : 0);
    const Weight lam = make_weight(sys, twice);
    const Weight r = rho(sys, rank);
    std::vector<long long> shifted(rank);
    for (int i = 0; i < rank; ++i) shifted[i] = twice[i] + r.twice[i];

    const auto fast = dotted_straighten(lam);
    const auto slow = oracle(shifted);
    if (fast.singular != slow.singular) continue;
    if (!fast.singular) {
      if (fast.length != slow.length) continue;
      std::vector<long long> dom(rank);
      for (int i = 0; i < rank; ++i) dom[i] = slow.dominant[i] - r.twice[i];
      if (fast.dominant.twice != dom) continue;
    }
    ++agree;
  }
  return agree;
}

}  // namespace

TEST_CASE("straightening agrees with orbit search, type A") {
  for (int rank : {3, 4}) {
    const int n = 40;
    CHECK(agreement(System::TypeA, rank, n, 1000 + rank,
                    oracles::orbit_straighten_a) == n);
  }
}

TEST_CASE("straightening agrees with orbit search, type D") {
  for (int rank : {2, 3, 4}) {
    const int n = 40;
    CHECK(agreement(System::TypeD, rank, n, 2000 + rank,
                    oracles::orbit_straighten_d) == n);
  }
}

TEST_CASE("dimension formula, type A, against hook contents") {
  // Partitions inside a 3x4 box as GL(r) highest weights.
  for (long r : {3L, 5L, 6L}) {
    std::vector<std::vector<long>> shapes = {
        {}, {1}, {2}, {1, 1}, {2, 1}, {2, 2}, {3, 1}, {3, 2, 1}, {4, 4, 2}};
    for (const auto& shape : shapes) {
      if (static_cast<long>(shape.size()) > r) continue;
      std::vector<long long> entries(r, 0);
      for (std::size_t i = 0; i < shape.size(); ++i) entries[i] = shape[i];
      const Weight w = make_weight_int(System::TypeA, entries);
      CHECK(weyl_dimension(w) == oracles::hook_content_dim(shape, r));
    }
  }
}

TEST_CASE("dimension formula is invariant under determinant twists") {
  for (long long c : {-3LL, 1LL, 4LL}) {
    const Weight base = make_weight_int(System::TypeA, {3, 1, 0, 0});
    std::vector<long long> shifted;
    for (auto x : base.twice) shifted.push_back(x + 2 * c);
    const Weight tw = make_weight(System::TypeA, shifted);
    CHECK(weyl_dimension(base) == weyl_dimension(tw));
  }
}

TEST_CASE("dimension formula, type D, classical representations") {
  // Vector, adjoint, and spin representations of so(8) and so(10).
  CHECK(weyl_dimension(make_weight_int(System::TypeD, {1, 0, 0, 0})) == 8);
  CHECK(weyl_dimension(make_weight_int(System::TypeD, {1, 1, 0, 0})) == 28);
  CHECK(weyl_dimension(make_weight(System::TypeD, {1, 1, 1, 1})) == 8);
  CHECK(weyl_dimension(make_weight(System::TypeD, {1, 1, 1, -1})) == 8);
  CHECK(weyl_dimension(make_weight_int(System::TypeD, {1, 1, 1, -1})) == 35);
  CHECK(weyl_dimension(make_weight_int(System::TypeD, {1, 0, 0, 0, 0})) == 10);
  CHECK(weyl_dimension(make_weight_int(System::TypeD, {1, 1, 1, 0, 0})) == 120);
  CHECK(weyl_dimension(make_weight(System::TypeD, {1, 1, 1, 1, 1})) == 16);
  CHECK(weyl_dimension(make_weight(System::TypeD, {1, 1, 1, 1, -1})) == 16);
  CHECK(weyl_dimension(make_weight_int(System::TypeD, {2, 0, 0, 0, 0})) == 54);
}

TEST_CASE("frozen dimensions used by the cohomology fixtures") {
  CHECK(weyl_dimension(make_weight_int(System::TypeA, {3, 3, 0, 0, 0, 0})) ==
        490);
  CHECK(weyl_dimension(make_weight_int(System::TypeA, {1, 1, 0, 0, 0, 0})) ==
        15);
  CHECK(weyl_dimension(make_weight_int(System::TypeA, {2, 2, 0, 0})) == 20);
  CHECK(weyl_dimension(make_weight_int(System::TypeA, {2, 1, 1, 0})) == 15);
}

TEST_CASE("dimension formula rejects non-dominant input") {
  CHECK_THROWS_AS(weyl_dimension(make_weight_int(System::TypeA, {0, 1})),
                  NotDominant);
  CHECK_THROWS_AS(weyl_dimension(make_weight_int(System::TypeD, {1, -2, 0})),
                  NotDominant);
}

TEST_CASE("string rendering mentions type and entries") {
  const std::string s = to_string(make_weight_int(System::TypeA, {2, 1}));
  CHECK(s.find('2') != std::string::npos);
  CHECK(s.find('1') != std::string::npos);
}
