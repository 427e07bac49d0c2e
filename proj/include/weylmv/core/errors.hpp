#pragma once

#include <stdexcept>
#include <string>

namespace weylmv {

// Input outside an operation's domain (non-nilpotent matrix, ghost composition, ...).
struct DomainError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Mismatched dimensions or tags when combining objects.
struct CompositionError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// A configured resource cap was hit; results would otherwise be truncated.
struct BudgetExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A certification step failed; carries diagnostics in what().
struct CertificationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace weylmv
