// Tests for the arbitrary-precision helpers: binomials in the polynomial
// convention, factorials, exact rational-to-integer conversion.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hilb2/numeric.hpp"
#include "oracles.hpp"

using hilb2::binomial;
using hilb2::factorial;
using hilb2::Int;
using hilb2::Rat;

TEST_CASE("binomial agrees with Pascal recursion on 0..25") {
  for (long n = 0; n <= 25; ++n)
    for (long k = 0; k <= n + 2; ++k) CHECK(binomial(n, k) == oracles::pascal(n, k));
}

TEST_CASE("binomial is a polynomial in the upper argument") {
  // C(-a, k) = (-1)^k C(a + k - 1, k), the reflection identity.
  for (long a = 1; a <= 10; ++a)
    for (long k = 0; k <= 6; ++k) {
      const Int lhs = binomial(-a, k);
      const Int rhs = ((k % 2 == 0) ? Int(1) : Int(-1)) * binomial(a + k - 1, k);
      CHECK(lhs == rhs);
    }
  CHECK(binomial(-1, 2) == 1);
  CHECK(binomial(-2, 3) == -4);
  CHECK(binomial(Int(-3), 2) == 6);
}

TEST_CASE("binomial edge cases") {
  CHECK(binomial(5, -1) == 0);
  CHECK(binomial(0, 0) == 1);
  CHECK(binomial(4, 7) == 0);
  // Large exact value: C(60, 30).
  CHECK(binomial(60, 30) == Int("118264581564861424"));
}

TEST_CASE("factorial") {
  CHECK(factorial(0) == 1);
  CHECK(factorial(1) == 1);
  CHECK(factorial(5) == 120);
  CHECK(factorial(20) == Int("2432902008176640000"));
  CHECK_THROWS_AS(factorial(-1), std::invalid_argument);
}

TEST_CASE("rat_to_int extracts exact integers") {
  CHECK(hilb2::rat_to_int(Rat(10, 2)) == 5);
  CHECK(hilb2::rat_to_int(Rat(-21, 3)) == -7);
  CHECK(hilb2::rat_to_int(Rat(0)) == 0);
}

TEST_CASE("pascal row sums are powers of two") {
  for (long n = 0; n <= 12; ++n) {
    Int sum = 0;
    for (long k = 0; k <= n; ++k) sum += binomial(n, k);
    CHECK(sum == (Int(1) << static_cast<unsigned>(n)));
  }
}
