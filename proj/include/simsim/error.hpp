#pragma once

#include <stdexcept>
#include <string>

namespace simsim {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Non-square input or mismatched matrix dimensions.
class DimensionError : public Error {
public:
    using Error::Error;
};

/// Argument outside the domain of an operation (n = 0, theta out of range, ...).
class DomainError : public Error {
public:
    using Error::Error;
};

/// Tuples whose arity or dimension do not line up.
class ShapeError : public Error {
public:
    using Error::Error;
};

class NotUnitaryError : public Error {
public:
    using Error::Error;
};

/// A numerical decision (rank, eigenvalue clustering) fell inside the ambiguity band.
class InconclusiveError : public Error {
public:
    using Error::Error;
};

/// Eigensolver or SVD failure.
class NumericalError : public Error {
public:
    using Error::Error;
};

/// A chain complex whose boundary maps do not compose to zero.
class InvalidComplexError : public Error {
public:
    using Error::Error;
};

/// Input document does not match the expected schema.
class ParseError : public Error {
public:
    using Error::Error;
};

}  // namespace simsim
