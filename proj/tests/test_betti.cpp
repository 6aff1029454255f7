// Tests for K-polynomials, expected Betti tables, the duality/consistency
// validator, the reference fixtures, and table rendering round-trips.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hilb2/betti.hpp"
#include "hilb2/errors.hpp"
#include "hilb2/hilbert_series.hpp"
#include "oracles.hpp"

using namespace hilb2;
using namespace hilb2::betti;

TEST_CASE("K-polynomial coefficients from the definition") {
  // Straight recomputation of c_k = sum_j (-1)^j C(n+1,j) h(k-j).
  for (long d : {1L, 2L, 3L}) {
    const KPolynomial kp = k_polynomial(d);
    const long n = hilbert::embedding_dimension(d);
    REQUIRE(kp.n == n);
    REQUIRE(static_cast<long>(kp.c.size()) == n + 2);
    for (long k = 0; k <= n + 1; ++k) {
      Int expect = 0;
      for (long j = 0; j <= k; ++j) {
        const Int h = (k - j == 0) ? Int(1)
                                   : hilbert::h0_power(d, k - j);
        const Int sign = (j % 2 == 0) ? 1 : -1;
        expect += sign * oracles::pascal(n + 1, j) * h;
      }
      CHECK(kp.c[k] == expect);
    }
  }
}

TEST_CASE("K-polynomial frozen values for the square-4 model") {
  const KPolynomial kp = k_polynomial(2);
  const Int expect[] = {1, 0, 0, -10, -20, 126, -190, 130, -45, 10, -2};
  REQUIRE(kp.c.size() == 11);
  for (std::size_t k = 0; k < 11; ++k) CHECK(kp.c[k] == expect[k]);
}

TEST_CASE("K-polynomial frozen values for the square-6 model") {
  const KPolynomial kp = k_polynomial(3);
  const Int expect[] = {1,     0,    -15,  -20,  315, -750, 295,  1890,
                        -4545, 5300, -3753, 1680, -475, 90,  -15,  2};
  REQUIRE(kp.c.size() == 16);
  for (std::size_t k = 0; k < 16; ++k) CHECK(kp.c[k] == expect[k]);
}

TEST_CASE("expected table for the square-4 model matches the fixture") {
  const BettiTable t = expected_betti(2);
  const BettiTable ref = reference_table(Fixture::DEF_G7);
  CHECK(t == ref);
  CHECK(t.n == 9);
  CHECK(t.codim == 5);
  // Spot values.
  CHECK(t.get(0, 0).value == 1);
  CHECK(t.get(1, 2).value == 10);
  CHECK(t.get(2, 3).value == 126);
  CHECK(t.get(7, 3).value == 1);
  CHECK(t.get(5, 5).value == 1);
  CHECK(t.get(1, 1).value == 0);  // no quadrics
}

TEST_CASE("expected table for the square-6 model is complete and frozen") {
  const BettiTable t = expected_betti(3);
  CHECK(t.n == 14);
  CHECK(t.codim == 10);
  for (const auto& [key, cell] : t.cells)
    CHECK(cell.status == CellStatus::Known);

  const std::map<std::pair<long, long>, Int> expect = {
      {{0, 0}, 1},    {{1, 1}, 15},   {{1, 2}, 20},   {{2, 2}, 315},
      {{3, 2}, 750},  {{4, 2}, 295},  {{4, 3}, 1890}, {{5, 3}, 4545},
      {{6, 3}, 5300}, {{7, 3}, 3753}, {{8, 3}, 1680}, {{9, 3}, 475},
      {{10, 3}, 105}, {{11, 3}, 15},  {{12, 3}, 1},   {{9, 4}, 15},
      {{10, 5}, 1}};
  for (const auto& [key, value] : expect) {
    CHECK(t.get(key.first, key.second).status == CellStatus::Known);
    CHECK(t.get(key.first, key.second).value == value);
  }
  // No other nonzero cells.
  for (const auto& [key, cell] : t.cells) {
    if (cell.value == 0) continue;
    CHECK(expect.count(key) == 1);
  }
}

TEST_CASE("expected table for the degenerate square-2 model") {
  const BettiTable t = expected_betti(1);
  CHECK(t.n == 5);
  CHECK(t.codim == 1);
  CHECK(t.get(0, 0).value == 1);
  CHECK(t.get(2, 1).value == 10);
  CHECK(t.get(3, 1).value == 15);
  CHECK(t.get(4, 1).value == 6);
  CHECK(t.get(5, 1).value == 1);
  CHECK(t.get(1, 5).value == 1);  // duality image of b_{0,0}
  CHECK(validate_table(t, 1).pass);
}

TEST_CASE("expected tables validate against their own K-polynomials") {
  for (long d : {1L, 2L, 3L}) {
    const auto rep = validate_table(expected_betti(d), d);
    CHECK(rep.pass);
    CHECK(rep.issues.empty());
  }
}

TEST_CASE("reference fixtures") {
  CHECK(fixture_from_name("s2_g7") == Fixture::S2_G7);
  CHECK(fixture_from_name("DEF_G7") == Fixture::DEF_G7);
  CHECK(fixture_from_name("s2_g8_partial") == Fixture::S2_G8_PARTIAL);
  CHECK_THROWS_AS(fixture_from_name("nope"), UnknownFixture);
  CHECK(fixture_name(Fixture::DEF_G7) == "def_g7");
  CHECK(fixture_square(Fixture::S2_G7) == 4);
  CHECK(fixture_square(Fixture::DEF_G7) == 4);
  CHECK(fixture_square(Fixture::S2_G8_PARTIAL) == 6);
}

TEST_CASE("section-ring table of the square-4 model validates") {
  const BettiTable t = reference_table(Fixture::S2_G7);
  const auto rep = validate_table(t, 2);
  CHECK(rep.pass);
  CHECK(rep.issues.empty());
  // Both square-4 tables satisfy the same K-polynomial; they differ by the
  // strand of the ambient quadric and one shifted syzygy weight.
  const BettiTable def = reference_table(Fixture::DEF_G7);
  CHECK(t.get(1, 1).value == 1);
  CHECK(def.get(1, 1).value == 0);
  CHECK(t.get(0, 2).value == 1);
  CHECK(def.get(0, 2).value == 0);
  CHECK(t.get(5, 3).value == 46);
  CHECK(def.get(5, 3).value == 45);
  CHECK(t.get(4, 4).value == 1);
  CHECK(def.get(4, 4).value == 0);
}

TEST_CASE("partial square-6 table: statuses and fully-known antidiagonals") {
  const BettiTable t = reference_table(Fixture::S2_G8_PARTIAL);
  CHECK(t.get(0, 0).value == 1);
  CHECK(t.get(1, 1).value == 15);
  CHECK(t.get(2, 1).value == 35);
  CHECK(t.get(3, 1).value == 21);
  CHECK(t.get(1, 2).value == 55);
  CHECK(t.get(2, 2).value == 336);
  CHECK(t.get(7, 4).value == 21);
  CHECK(t.get(10, 5).value == 1);
  CHECK(t.get(4, 2).status == CellStatus::NonzeroLowerBound);
  CHECK(t.get(8, 3).status == CellStatus::NonzeroLowerBound);
  CHECK(t.get(6, 2).status == CellStatus::Unknown);
  CHECK(t.get(2, 3).status == CellStatus::Unknown);
  CHECK(t.get(13, 3).status == CellStatus::Unknown);

  const auto rep = validate_table(t, 3);
  CHECK(rep.pass);
  CHECK(rep.antidiagonals_checked == 5);  // k = 0..4 only
}

TEST_CASE("validator flags a perturbed cell") {
  BettiTable t = reference_table(Fixture::DEF_G7);
  t.set_known(2, 3, t.get(2, 3).value + 1);
  const auto rep = validate_table(t, 2);
  CHECK_FALSE(rep.pass);
  REQUIRE_FALSE(rep.issues.empty());
  CHECK(rep.issues.front().check == "antidiagonal");
}

TEST_CASE("validator flags duality violations") {
  BettiTable t = reference_table(Fixture::DEF_G7);
  t.set_known(5, 5, 2);  // breaks b_{5,5} = b_{0,0} (and the k=10 sum)
  const auto rep = validate_table(t, 2);
  CHECK_FALSE(rep.pass);
  bool saw_duality = false;
  for (const auto& issue : rep.issues) saw_duality |= issue.check == "duality";
  CHECK(saw_duality);
}

TEST_CASE("validator flags negative cells") {
  BettiTable t;
  t.n = 9;
  t.codim = 5;
  t.set_known(0, 0, 1);
  t.set_known(1, 1, -3);
  const auto rep = validate_table(t, 2);
  CHECK_FALSE(rep.pass);
  bool saw = false;
  for (const auto& issue : rep.issues) saw |= issue.check == "nonnegative";
  CHECK(saw);
}

TEST_CASE("validator rejects a table with the wrong ambient dimension") {
  BettiTable t;
  t.n = 11;
  t.codim = 7;
  CHECK_FALSE(validate_table(t, 2).pass);
}

TEST_CASE("text rendering of the expected square-4 table") {
  const std::string text = render_table(expected_betti(2), TableFormat::Text);
  const std::string expect =
      "b_{i,j}  0   1    2    3    4   5   6  7\n"
      "      0  1   .    .    .    .   .   .  .\n"
      "      1  .   .    .    .    .   .   .  .\n"
      "      2  .  10    .    .    .   .   .  .\n"
      "      3  .  20  126  190  130  45  10  1\n"
      "      4  .   .    .    .    .   .   .  .\n"
      "      5  .   .    .    .    .   1   .  .\n";
  CHECK(text == expect);
}

TEST_CASE("json rendering round-trips") {
  for (Fixture f :
       {Fixture::S2_G7, Fixture::DEF_G7, Fixture::S2_G8_PARTIAL}) {
    const BettiTable t = reference_table(f);
    const BettiTable back =
        table_from_json(render_table(t, TableFormat::Json));
    CHECK(back == t);
  }
}

TEST_CASE("csv rendering lists every stored cell") {
  const BettiTable t = reference_table(Fixture::S2_G8_PARTIAL);
  const std::string csv = render_table(t, TableFormat::Csv);
  CHECK(csv.rfind("i,j,status,value\n", 0) == 0);
  std::size_t lines = 0;
  for (char ch : csv)
    if (ch == '\n') ++lines;
  CHECK(lines == t.cells.size() + 1);
  CHECK(csv.find("2,2,known,336") != std::string::npos);
  CHECK(csv.find("nonzero_lower_bound") != std::string::npos);
  CHECK(csv.find("unknown") != std::string::npos);
}

TEST_CASE("set_known drops explicit zeros") {
  BettiTable t;
  t.set_known(3, 2, 7);
  CHECK(t.cells.size() == 1);
  t.set_known(3, 2, 0);
  CHECK(t.cells.empty());
  CHECK(t.get(3, 2) == Cell{});
}
