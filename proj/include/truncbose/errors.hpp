#ifndef TRUNCBOSE_ERRORS_HPP
#define TRUNCBOSE_ERRORS_HPP

#include <stdexcept>

namespace truncbose {

// Invalid or mismatched truncation dimension.
struct DimensionError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// The requested state cannot be represented at this truncation; retry with
// a larger dimension.
struct TruncationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// The independent root oracle failed to isolate the expected sign changes.
struct OracleError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Bisection diagnostic guard tripped (iteration cap).
struct SolverError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace truncbose

#endif
