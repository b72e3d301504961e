#pragma once

#include <stdexcept>
#include <string>

namespace disccount {

/// Base for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A cost guard (cubic or quadratic loop cap) was exceeded without `force`.
class GuardExceeded : public Error {
public:
    using Error::Error;
};

/// Widened integer arithmetic overflowed.
class ArithmeticOverflow : public Error {
public:
    using Error::Error;
};

/// Arguments outside the operation's domain.
class DomainError : public Error {
public:
    using Error::Error;
};

/// A proved inequality was violated; always an implementation bug.
class BoundViolation : public Error {
public:
    using Error::Error;
};

/// Two evaluation routes of the same quantity disagreed.
class NumericMismatch : public Error {
public:
    using Error::Error;
};

} // namespace disccount
