#pragma once

#include <stdexcept>
#include <string>

namespace lyness {

struct DomainError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Sign of a ball could not be decided at the precision cap.
struct PrecisionExhausted : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Winding run produced low >= upp, a degenerate predicate that survived
// retries, or an uncertifiable sign at the precision cap.
struct InconsistentWinding : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct LevelBelowCritical : DomainError {
    using DomainError::DomainError;
};

struct RootSelectionAmbiguous : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DegenerateSymmetric : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace lyness
