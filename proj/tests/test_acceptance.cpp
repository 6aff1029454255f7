// Acceptance battery: runs every check of the built-in selftest and prints
// one PASS/FAIL line per criterion, then an overall verdict.  Exits
// nonzero when any criterion fails.
#include <cstdio>

#include "hilb2/selftest.hpp"

int main() {
  using namespace hilb2::selftest;
  const std::vector<Check> checks = run_all();
  const std::vector<CriterionSummary> summaries = summarize(checks);

  bool all_pass = true;
  for (const CriterionSummary& s : summaries) {
    std::printf("CRITERION %d: %s - %s (%d checks)\n", s.criterion,
                s.pass ? "PASS" : "FAIL", s.title.c_str(), s.checks);
    if (!s.pass) {
      all_pass = false;
      for (const Check& c : checks) {
        if (c.criterion != s.criterion || c.pass) continue;
        std::printf("  failed %s: expected '%s', got '%s'\n", c.name.c_str(),
                    c.expected.c_str(), c.got.c_str());
      }
    }
  }
  std::printf("ACCEPTANCE: %s (%zu checks)\n", all_pass ? "PASS" : "FAIL",
              checks.size());
  return all_pass ? 0 : 1;
}
