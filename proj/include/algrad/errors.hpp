#pragma once

#include <stdexcept>
#include <string>

namespace algrad {

/// Malformed textual input (scalars, matrices, polynomials).
class ParseError : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

/// Operands from different fields or arithmetic modes were combined.
class FieldError : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

/// Operation undefined for its arguments (foreign element, missing unit, bad kind, ...).
class DomainError : public std::domain_error {
   public:
    using std::domain_error::domain_error;
};

/// Dimension or length mismatch.
class ShapeError : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

/// Requested operation is not available in the current arithmetic mode.
class UnsupportedModeError : public std::logic_error {
   public:
    using std::logic_error::logic_error;
};

}  // namespace algrad
