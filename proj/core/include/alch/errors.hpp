#pragma once

#include <stdexcept>
#include <string>

namespace alch {

/// Base class for all errors raised by the library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Malformed input files, configs, or archives. CLI maps this to exit code 2.
struct ParseError : Error {
  using Error::Error;
};

/// Element symbol outside the bundled basis data.
struct UnsupportedSpeciesError : ParseError {
  using ParseError::ParseError;
};

/// Tensor dimensions inconsistent with the basis or scaffold.
struct ShapeError : Error {
  using Error::Error;
};

/// Problem too large for the requested solver (statevector, dense diag).
struct CapacityError : Error {
  using Error::Error;
};

/// NaN energies, singular geometry, degenerate overlap, diverged solver.
/// CLI maps this to exit code 3.
struct NumericalError : Error {
  using Error::Error;
};

}  // namespace alch
