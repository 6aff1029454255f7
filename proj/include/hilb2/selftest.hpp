// selftest.hpp -- the acceptance battery: every headline number of the
// library recomputed and compared against its frozen expected value,
// grouped into ten criteria.  Shared by the acceptance test binary and the
// CLI `selftest` subcommand.
//
// Part of hilb2.  SPDX-License-Identifier: MIT
#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "hilb2/numeric.hpp"

namespace hilb2::selftest {

struct Check {
  int criterion = 0;      // 1..10
  std::string name;
  std::string expected;
  std::string got;
  bool pass = false;
};

struct Options {
  /// Externally supplied spinor Chern coefficients (c1, c2, c3) to compare
  /// against the Riemann-Roch computation.
  std::optional<std::array<Int, 3>> spinor_override;
};

/// Run every check.  Never throws for ordinary check failures (they are
/// reported with pass = false); propagates only construction-level errors.
std::vector<Check> run_all(const Options& opts = {});

struct CriterionSummary {
  int criterion = 0;
  std::string title;
  int checks = 0;
  int failed = 0;
  bool pass = true;
};

std::vector<CriterionSummary> summarize(const std::vector<Check>& checks);

const char* criterion_title(int criterion);

}  // namespace hilb2::selftest
