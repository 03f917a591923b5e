#ifndef AMBITORIC_ERRORS_HPP
#define AMBITORIC_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace ambitoric {

/// Base class for all library errors.
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Malformed textual input (bad rational literal, bad spec file, ...).
/// line/col are 1-based; 0 means "not tied to a source location".
struct parse_error : error {
    int line = 0;
    int col = 0;
    parse_error(const std::string& msg, int line_ = 0, int col_ = 0)
        : error(msg), line(line_), col(col_) {}
};

/// Structurally invalid mathematical input (zero denominator, unknown
/// variable, non-orthogonal p, non-hermitian pair, ...).
struct malformed_error : error {
    using error::error;
};

/// Degenerate geometric input: identically singular metric, A == 0, ...
struct degenerate_error : error {
    using error::error;
};

/// Degree cap exceeded.  The exact pipelines can inflate intermediate
/// degrees; we abort loudly instead of grinding forever.
struct resource_error : error {
    using error::error;
};

/// Evaluation at a pole of a rational function.
struct pole_error : error {
    using error::error;
};

/// An internal cross-check failed (two routes to the same object disagree).
struct internal_error : error {
    using error::error;
};

} // namespace ambitoric

#endif
