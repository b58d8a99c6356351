#pragma once

#include <stdexcept>
#include <string>

namespace resdraw {

/// Thrown by geometric primitives on degenerate input (zero vectors,
/// coincident points, opposite-direction bisectors).
struct DegenerateGeometryError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// File/stream parse failure. `line` is 1-based, 0 when not line-specific.
struct ParseError : std::runtime_error {
    ParseError(const std::string& msg, int line_no)
        : std::runtime_error("line " + std::to_string(line_no) + ": " + msg),
          line(line_no) {}
    explicit ParseError(const std::string& msg) : std::runtime_error(msg), line(0) {}
    int line;
};

/// Invalid argument to a constructor or operation (e.g. n < 3 for a
/// circular complete drawing).
struct ArgumentError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Numerical blow-up (non-finite coordinates) during iteration.
struct NumericalError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace resdraw
