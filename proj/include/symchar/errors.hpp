#pragma once

#include <stdexcept>

namespace symchar {

// Invalid domain values: bad shapes, size mismatches, out-of-range arguments.
struct DomainError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A hard size guard on a brute-force computation was exceeded.
struct GuardError : DomainError {
    using DomainError::DomainError;
};

// Unparseable textual input.
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// An internal cross-check failed; indicates a bug, not a user error.
struct InternalError : std::logic_error {
    using std::logic_error::logic_error;
};

} // namespace symchar
