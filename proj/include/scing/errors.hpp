#pragma once

#include <stdexcept>
#include <string>

namespace scing {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Tensor/sequence dimension mismatch. Messages name expected vs actual.
struct ShapeError : Error {
  using Error::Error;
};

// Bad configuration value or unparsable config file.
struct ConfigError : Error {
  using Error::Error;
};

// Dataset/manifest problems: missing files, malformed rows, bad splits.
struct DataError : Error {
  using Error::Error;
};

// Filesystem and serialization failures.
struct IoError : Error {
  using Error::Error;
};

// Non-finite values, undefined cosines, diverged training.
struct NumericError : Error {
  using Error::Error;
};

// Out-of-range class or row index.
struct IndexError : Error {
  using Error::Error;
};

}  // namespace scing
