#pragma once

#include <stdexcept>
#include <string>

namespace iurlab {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A parameter is outside the domain of the operation (g = 0, mu > lambda, ...).
class DomainError : public Error {
public:
    using Error::Error;
};

/// Probabilities are negative or do not sum to one.
class InvalidDistribution : public DomainError {
public:
    using DomainError::DomainError;
};

/// An optimizer configuration violates its invariants.
class ConfigError : public DomainError {
public:
    using DomainError::DomainError;
};

/// The evaluation budget would be exceeded.
class BudgetError : public Error {
public:
    using Error::Error;
};

/// An exhaustive enumeration would exceed its state budget.
class SizeError : public Error {
public:
    using Error::Error;
};

/// The problem lies outside the hypothesis of the bound being checked
/// (e.g. a zero acquired-information denominator).
class HypothesisError : public DomainError {
public:
    using DomainError::DomainError;
};

/// Input data is unusable (NaN statistics, empty samples).
class DataError : public Error {
public:
    using Error::Error;
};

/// Malformed text input. `line()` is 1-based, 0 when unknown.
class ParseError : public Error {
public:
    ParseError(const std::string& what, int line = 0)
        : Error(line > 0 ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}
    int line() const noexcept { return line_; }

private:
    int line_;
};

/// Loaded data violates an invariant (non-orthogonal rotation, ...).
class ValidationError : public Error {
public:
    using Error::Error;
};

/// File system failure.
class IoError : public Error {
public:
    using Error::Error;
};

} // namespace iurlab
