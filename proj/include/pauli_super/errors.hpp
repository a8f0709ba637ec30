#pragma once

#include <stdexcept>
#include <string>

namespace pauli_super {

/// Operand shapes do not agree (group ranks, word lengths, matrix sizes).
struct DimensionError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Unsupported construction parameter, e.g. q outside [1, 4] or t not a power of two.
struct ConfigurationError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Argument outside the domain of a numeric function.
struct DomainError : std::domain_error {
  using std::domain_error::domain_error;
};

/// A hard resource cap was hit (brute-force size, DP state space).
struct ResourceError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A computed object violates an invariant that holds by construction.
/// Seeing this means there is a bug in the construction, not bad input.
struct ConsistencyError : std::logic_error {
  using std::logic_error::logic_error;
};

}  // namespace pauli_super
