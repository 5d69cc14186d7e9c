#ifndef RELGW_ERRORS_HPP
#define RELGW_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace relgw
{

// Two classes living on different cohomology rings were combined.
struct ring_mismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// A contact order (or a q-power) left the representable window.
struct window_overflow : std::out_of_range {
    using std::out_of_range::out_of_range;
};

// Syntax error in an insertion expression or rational literal.
struct parse_error : std::invalid_argument {
    parse_error(const std::string &msg, std::size_t pos)
        : std::invalid_argument(msg + " at position " + std::to_string(pos)), position(pos)
    {
    }
    std::size_t position;
};

// An operation was applied to an input outside its domain
// (inhomogeneous class for a bidegree, a non-monomial for a Hodge type, ...).
struct domain_error : std::domain_error {
    using std::domain_error::domain_error;
};

// Operator composition or comparison without enough z-window margin.
struct margin_error : std::out_of_range {
    using std::out_of_range::out_of_range;
};

} // namespace relgw

#endif
