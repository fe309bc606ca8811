#pragma once

#include <stdexcept>
#include <string>

namespace fsrs {

// Error categories; the CLI maps them to exit codes (config 2, data 3,
// divergence 4, everything else 1).
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DataError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Operand shapes do not conform to an op's shape rule.
struct DimensionError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A precondition stated by an operation's contract was violated.
struct ContractError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A computation produced NaN/Inf; matrices must stay finite.
struct NumericError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DivergenceError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace fsrs
