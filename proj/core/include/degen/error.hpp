#pragma once

#include <stdexcept>
#include <string>

namespace degen {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class DivisionByZero : public Error {
public:
    DivisionByZero() : Error("division by zero") {}
};

class ParseError : public Error {
public:
    using Error::Error;
};

/// Binary operation on polynomials in different indeterminates.
class IndeterminateMismatch : public Error {
public:
    using Error::Error;
};

/// Truncation orders of two series differ.
class OrderMismatch : public Error {
public:
    using Error::Error;
};

/// A series operation that needs a zero constant term received a nonzero one.
class NonzeroConstantTerm : public Error {
public:
    using Error::Error;
};

class DomainError : public Error {
public:
    using Error::Error;
};

} // namespace degen
