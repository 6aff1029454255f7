// betti.hpp -- graded Betti tables of Hilbert squares in their natural
// embeddings: the K-polynomial (numerator of the Hilbert series), the
// single-strand expected table builder, consistency validation, built-in
// reference tables, and rendering.
//
// Cells b_{i,j} are indexed by homological degree i (column) and internal
// degree offset j (row, the Betti-diagram row index); rows are truncated at
// j = 6.  A table may contain cells of status Known (exact value), Unknown
// ("?") or NonzeroLowerBound ("*", at least the shown strand is nonzero).
// Cells not stored are Known zero.
//
// Part of hilb2.  SPDX-License-Identifier: MIT
#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "hilb2/numeric.hpp"

namespace hilb2::betti {

enum class CellStatus { Known, Unknown, NonzeroLowerBound };

struct Cell {
  CellStatus status = CellStatus::Known;
  Int value = 0;  // meaningful only for Known

  bool operator==(const Cell&) const = default;
};

struct BettiTable {
  int dim_x = 4;   // dimension of the embedded variety
  long n = 0;      // ambient projective space P^n
  long codim = 0;  // n - dim_x
  std::map<std::pair<long, long>, Cell> cells;  // key (i, j)

  /// Stored cell or Known(0).
  Cell get(long i, long j) const;
  void set_known(long i, long j, const Int& value);  // drops Known(0)
  void set_status(long i, long j, CellStatus st);
  /// Largest stored column index (0 for an empty table).
  long max_col() const;

  bool operator==(const BettiTable&) const = default;
};

/// Numerator coefficients of the Hilbert series of the square-2d model in
/// P^n: c_k = sum_j (-1)^j C(n+1, j) h(k-j) for k = 0..n+1, where h is the
/// section count of the e-th power.  The trailing coefficients
/// c_{n+2}..c_{n+6} are checked to vanish (degree guard).
struct KPolynomial {
  long d = 0;
  long n = 0;
  std::vector<Int> c;  // indices 0..n+1
};

KPolynomial k_polynomial(long d);

/// The single-strand expected Betti table of the square-2d model:
/// pre-place b_{0,0} = 1 and its duality image b_{codim,5} = 1, then fill
/// rows 1..3 left to right, one antidiagonal at a time, placing each
/// nonzero remainder of the K-polynomial alternating sum in the unique
/// sign-compatible slot at or after the current row cursor; impose the
/// duality images of rows 0..1 onto rows 4..5 and iterate to a fixpoint
/// (at most 5 rounds; otherwise throws NonConvergence).  Antidiagonals with
/// no sign-compatible slot are marked Unknown.
BettiTable expected_betti(long d);

/// One validation failure.
struct ValidationIssue {
  std::string check;  // "antidiagonal", "duality", "nonnegative"
  long i = 0, j = 0;  // offending cell (duality/nonnegative) or k = i
  std::string detail;
};

struct ValidationReport {
  bool pass = true;
  long antidiagonals_checked = 0;  // fully-Known antidiagonals tested
  std::vector<ValidationIssue> issues;
};

/// Check (a) per-antidiagonal alternating sums against the K-polynomial
/// (only antidiagonals all of whose cells are Known; unstored cells are
/// Known zero), (b) the duality b_{i,j} = b_{codim-i,5-j} for j >= 4 when
/// both cells are Known, and (c) nonnegativity of Known values.  Failures
/// are report entries, not exceptions.
ValidationReport validate_table(const BettiTable& t, long d);

/// Built-in reference tables.
enum class Fixture { S2_G7, DEF_G7, S2_G8_PARTIAL };

Fixture fixture_from_name(const std::string& name);  // throws UnknownFixture
std::string fixture_name(Fixture f);
/// The BB square 2d of the model a fixture describes.
long fixture_square(Fixture f);
BettiTable reference_table(Fixture f);

enum class TableFormat { Text, Json, Csv };

/// Text: a diagram headed "b_{i,j}" with column indices, rows j = 0..5,
/// "." for Known zero, the integer for Known nonzero, "?" and "*" for the
/// other statuses.  Json/Csv: machine formats; Json round-trips through
/// table_from_json.
std::string render_table(const BettiTable& t, TableFormat fmt);
BettiTable table_from_json(const std::string& json_text);

}  // namespace hilb2::betti
