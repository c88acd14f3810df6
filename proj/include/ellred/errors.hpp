#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ellred {

/// Base class for all errors raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Invalid input for an operation: division by zero, pole, mixed
/// coefficient domains, violated preconditions.
class DomainError : public Error {
public:
    using Error::Error;
};

/// The quadratic extension splits over the given Gauss valuation, so the
/// extension is not unique and single-element values are ambiguous.
class SplitError : public Error {
public:
    using Error::Error;
};

/// Derivative-based squarefree decomposition is unsound: the coefficient
/// characteristic does not exceed the polynomial degree.
class CharacteristicError : public DomainError {
public:
    using DomainError::DomainError;
};

/// Syntax error in an element expression, with byte position.
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t pos)
        : Error(what + " (at position " + std::to_string(pos) + ")"), pos_(pos) {}
    std::size_t position() const { return pos_; }

private:
    std::size_t pos_;
};

} // namespace ellred
