#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ratprime {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// An input violated an operation's documented precondition.
class PreconditionError : public Error {
public:
    using Error::Error;
};

class FieldMismatch : public PreconditionError {
public:
    FieldMismatch() : PreconditionError("operands belong to different fields") {}
};

class DivisionByZero : public PreconditionError {
public:
    explicit DivisionByZero(const std::string& what = "division by zero") : PreconditionError(what) {}
};

// f' vanishes identically (characteristic p, f a polynomial in x^p).
class DegenerateDerivative : public PreconditionError {
public:
    DegenerateDerivative() : PreconditionError("derivative is identically zero") {}
};

// A self-checking identity failed. Always an implementation bug.
class InternalError : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    ParseError(const std::string& message, std::size_t position)
        : Error(message + " at position " + std::to_string(position)), position_(position) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

} // namespace ratprime
