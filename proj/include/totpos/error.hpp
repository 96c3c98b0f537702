#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace totpos {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class DivisionByZero : public Error {
public:
    DivisionByZero() : Error("division by zero") {}
    explicit DivisionByZero(const std::string& what) : Error(what) {}
};

class InvalidArgument : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    using Error::Error;
};

/// A brute-force enumeration was asked for a size above its guard.
class GuardExceeded : public Error {
public:
    GuardExceeded(std::size_t n, std::size_t guard)
        : Error("size " + std::to_string(n) + " exceeds guard " + std::to_string(guard) +
                " (override with --guard-n)") {}
};

class SingularMatrix : public Error {
public:
    using Error::Error;
};

/// The input fails a positivity precondition; the message names the witness.
class PositivityViolation : public Error {
public:
    using Error::Error;
};

class InvalidScheme : public Error {
public:
    using Error::Error;
};

}  // namespace totpos
