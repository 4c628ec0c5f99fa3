#pragma once

#include <stdexcept>

namespace qforge {

// Bad arguments or violated preconditions: mismatched shapes, wrong quiver
// class, malformed witnesses, ...
struct InputError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// The request is well-formed but provably has no answer (e.g. asking for a
// pathological orbit closure over a representation-finite quiver).
struct RefusalError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A randomized search exhausted its retry budget.
struct SearchError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// File could not be read/written or its JSON failed to parse.
struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace qforge
