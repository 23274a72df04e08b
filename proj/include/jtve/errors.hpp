// Error taxonomy shared by all modules. The CLI maps these to exit codes.
#pragma once

#include <stdexcept>
#include <string>

namespace jtve {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Operand shapes incompatible with the requested operation.
struct ShapeError : Error {
  using Error::Error;
};

// Input outside the mathematical domain (log of nonpositive, non-finite eval).
struct DomainError : Error {
  using Error::Error;
};

// API misuse: violated precondition or object lifecycle.
struct ContractError : Error {
  using Error::Error;
};

// Malformed file content; message carries the byte offset where known.
struct ParseError : Error {
  using Error::Error;
};

// Invalid run configuration.
struct ConfigError : Error {
  using Error::Error;
};

// Metric undefined for the given inputs (e.g. single-class ranking).
struct MetricError : Error {
  using Error::Error;
};

// Non-finite value produced at runtime (diverged training step).
struct NumericError : Error {
  using Error::Error;
};

// Filesystem failure; message carries the path.
struct IoError : Error {
  using Error::Error;
};

}  // namespace jtve
