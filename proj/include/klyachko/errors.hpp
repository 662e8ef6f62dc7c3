#ifndef KLYACHKO_ERRORS_HPP
#define KLYACHKO_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace klyachko {

// Length / degree mismatch between an argument and the ambient ring or group.
struct DimensionError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Operands live in different rings (mode mismatch).
struct IncompatibleModesError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Evaluation hit a zero denominator factor or a zero coordinate with a
// negative exponent.
struct PoleError : std::domain_error {
    using std::domain_error::domain_error;
};

// A denominator factor 1 - q^m whose monomial canonicalizes to 1, i.e. the
// factor is identically zero (in cyclic mode, 1 - q1*...*qn).
struct ZeroDenominatorError : std::domain_error {
    using std::domain_error::domain_error;
};

// A constrained evaluation point violates its constraint (cyclic mode needs
// coordinate product 1, nonzero coordinates).
struct ConstraintError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// The randomized evaluator exhausted its retry budget without finding a
// non-degenerate point.
struct DegeneratePointError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ParseError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

}  // namespace klyachko

#endif
