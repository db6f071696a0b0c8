#pragma once

#include <stdexcept>
#include <string>

namespace apwave {

/// Input violates a structural precondition of an almost-periodic object
/// (e.g. a trigonometric polynomial that is not Hermitian-symmetric).
struct invalid_polynomial_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// The request is well-formed but outside what this build supports
/// (e.g. a frequency module of rank > 3, which would need a 4-d torus grid).
struct capability_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A numerical-flux parameter breaks the monotonicity requirement
/// (Lax-Friedrichs alpha below the local Lipschitz bound).
struct monotonicity_violation_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// NaN/Inf appeared during time stepping; message carries step diagnostics.
struct numerical_failure_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Operands live on different grids.
struct shape_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Experiment configuration failed validation; message lists every violation.
struct config_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// A stated precondition of an operation does not hold; message explains the
/// admissible range where one exists (e.g. the maximal trusted time of a
/// super-cell comparison).
struct precondition_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

} // namespace apwave
