#ifndef TWINSLIT_ERRORS_HPP
#define TWINSLIT_ERRORS_HPP

#include <stdexcept>

namespace twinslit {

// Config file missing, unreadable, or syntactically/semantically bad.
struct ConfigParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Event literal does not parse or violates the event algebra.
struct EventParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Quadrature refinement hit the depth cap before meeting tolerance.
struct NonConvergence : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// separability_defect needs at least a 2x2 grid.
struct GridTooSmall : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// generate_nls requires a label-symmetric event.
struct NotLabelSymmetric : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// ri_separability requires an event classified under RI.
struct NotRISystem : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

} // namespace twinslit

#endif // TWINSLIT_ERRORS_HPP
