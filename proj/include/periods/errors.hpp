#ifndef PERIODS_ERRORS_HPP
#define PERIODS_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace periods {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Input data violates a HodgeData or type invariant.
struct ValidationError : Error {
  using Error::Error;
};

// Operation requires a critical tensor (or a criticality cut) that does not exist.
struct NotCriticalError : Error {
  using Error::Error;
};

// Rank parity does not match what the operation is defined for.
struct ParityError : Error {
  using Error::Error;
};

// Rank-1 factor where the monomial formula needs k >= 1.
struct UnsupportedRankError : Error {
  using Error::Error;
};

// Matrix / profile dimensions disagree.
struct DimensionError : Error {
  using Error::Error;
};

// The equivariance constraints have no nonzero solution.
struct NoSuchInvariantError : Error {
  using Error::Error;
};

// Nullspace dimension >= 2. Should never happen for admissible types; if it
// fires, something is deeply wrong, so it is its own loud error type.
struct NotUniqueError : Error {
  using Error::Error;
};

// A corner minor that must be nonzero evaluated to zero.
struct ZeroMinorError : Error {
  using Error::Error;
};

// Resampling cap exhausted.
struct RetryExhaustedError : Error {
  using Error::Error;
};

}  // namespace periods

#endif
