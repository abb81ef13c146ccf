#pragma once

#include <stdexcept>
#include <string>

namespace infotransfer {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A value outside the domain of an operation (probability outside [0,1],
/// negative information content, NaN).
class DomainError : public Error {
public:
    using Error::Error;
};

/// A type invariant does not hold (distribution not normalized, duplicate
/// labels, dimension mismatch).
class InvariantError : public Error {
public:
    using Error::Error;
};

class UnknownLabelError : public Error {
public:
    using Error::Error;
};

/// The queried observation has zero evidence under the prior.
class ImpossibleObservationError : public Error {
public:
    using Error::Error;
};

class DivisionByZeroError : public Error {
public:
    using Error::Error;
};

/// A logarithm of 0/0 or of a ratio against a zero prior was requested.
class UndefinedLogError : public Error {
public:
    using Error::Error;
};

/// Malformed scenario text. `line` is 1-based, 0 when unknown.
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t line = 0)
        : Error(line ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

/// The exact-arithmetic oracle was handed a floating-point probability.
class NonRationalInputError : public Error {
public:
    using Error::Error;
};

} // namespace infotransfer
