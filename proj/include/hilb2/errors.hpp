// errors.hpp -- exception taxonomy.  Two families: invalid inputs (a caller
// asked for something outside the domain of a formula) and mathematical
// inconsistencies (an internal cross-check failed, or a computation cannot
// certify its answer).  The CLI maps the families to exit codes 2 and 3.
//
// Part of hilb2.  SPDX-License-Identifier: MIT
#pragma once

#include <stdexcept>
#include <string>

namespace hilb2 {

/// Base for domain errors in user-supplied data (CLI exit code 2).
struct InvalidInput : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// A Beauville-Bogomolov square was odd where an even one is required.
struct OddSquare : InvalidInput {
  using InvalidInput::InvalidInput;
};

/// A Mukai vector with square < -2 has empty moduli space.
struct NonexistentModuli : InvalidInput {
  using InvalidInput::InvalidInput;
};

/// A divisibility index incompatible with the requested square.
struct InvalidDivisibility : InvalidInput {
  using InvalidInput::InvalidInput;
};

/// A stratum parameter outside the range where the stratum is nonempty.
struct StrataBound : InvalidInput {
  using InvalidInput::InvalidInput;
};

/// An unrecognized built-in table name.
struct UnknownFixture : InvalidInput {
  using InvalidInput::InvalidInput;
};

/// A weight that is not dominant where dominance is required.
struct NotDominant : InvalidInput {
  using InvalidInput::InvalidInput;
};

/// Base for internal mathematical inconsistencies (CLI exit code 3).
struct MathInconsistency : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A quantity that must be an integer came out fractional.
struct NonIntegral : MathInconsistency {
  using MathInconsistency::MathInconsistency;
};

/// The Riemann-Roch linear system for the spinor Chern classes has no
/// consistent integral solution.
struct InconsistentHRR : MathInconsistency {
  using MathInconsistency::MathInconsistency;
};

/// An iterative table completion failed to reach a fixpoint.
struct NonConvergence : MathInconsistency {
  using MathInconsistency::MathInconsistency;
};

/// Spectral-sequence bookkeeping cannot decide degeneration from dimension
/// data alone; the caller must escalate rather than guess.
struct NotDegenerate : MathInconsistency {
  using MathInconsistency::MathInconsistency;
};

}  // namespace hilb2
