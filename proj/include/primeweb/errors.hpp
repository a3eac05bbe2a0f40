#pragma once

#include <stdexcept>
#include <string>

namespace primeweb {

// Base of every error raised by the toolkit. The CLI maps any of these to
// exit code 2 (operational error); verification failures are reports, not
// exceptions.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A request would need values above the configured hard limit (or a scan
// beyond what an enumerator is allowed to cover).
class CapacityError : public Error {
public:
    using Error::Error;
};

// Inverse lookup of a value that is not in the family.
class NotAMemberError : public Error {
public:
    using Error::Error;
};

// Argument outside the mathematical domain of a function (e.g. L(1)).
class DomainError : public Error {
public:
    using Error::Error;
};

// Quadrature or root search failed to reach the requested accuracy.
class NumericalError : public Error {
public:
    using Error::Error;
};

// Input is well-formed but meaningless for the operation (identical
// addresses, zero-width trapezoid, ...).
class DegenerateInputError : public Error {
public:
    using Error::Error;
};

// Query outside the materialized range of an object (knots, depths, ...).
class RangeError : public Error {
public:
    using Error::Error;
};

}  // namespace primeweb
