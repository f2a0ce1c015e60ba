#pragma once

#include <stdexcept>
#include <string>

namespace staircase {

// Base of every error the library raises. The CLI maps the subclasses onto
// exit statuses (see cli.hpp).
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed text/JSON input or an unparsable rational.
class ParseError : public Error {
public:
    using Error::Error;
};

// A grid that does not have staircase shape.
class ShapeError : public Error {
public:
    using Error::Error;
};

// An object that violates the invariants of its type.
class ValidationError : public Error {
public:
    using Error::Error;
};

// An argument outside the domain an operation accepts.
class DomainError : public Error {
public:
    using Error::Error;
};

// A size beyond what an exhaustive routine supports.
class CapacityError : public Error {
public:
    using Error::Error;
};

// A vanishing denominator, or a chain without a unique stationary law.
class DegeneracyError : public Error {
public:
    using Error::Error;
};

} // namespace staircase
