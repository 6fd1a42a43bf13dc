#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ribbon {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Input was well formed but violates a mathematical precondition
/// (wrong shape, not symmetric, not a knot, ...).
class ValidationError : public Error {
public:
    using Error::Error;
};

class DimensionError : public ValidationError {
public:
    using ValidationError::ValidationError;
};

class FormError : public ValidationError {
public:
    using ValidationError::ValidationError;
};

class NotAKnotError : public ValidationError {
public:
    using ValidationError::ValidationError;
};

class SpinStructureError : public ValidationError {
public:
    using ValidationError::ValidationError;
};

class PreconditionError : public ValidationError {
public:
    using ValidationError::ValidationError;
};

class ClassificationError : public ValidationError {
public:
    using ValidationError::ValidationError;
};

class LookupError : public ValidationError {
public:
    using ValidationError::ValidationError;
};

/// Malformed text input. Line and column are 1-based.
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t line, std::size_t column)
        : Error(what + " at line " + std::to_string(line) + ", column " + std::to_string(column)),
          line_(line), column_(column) {}

    explicit ParseError(const std::string& what) : Error(what) {}

    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

private:
    std::size_t line_ = 0;
    std::size_t column_ = 0;
};

} // namespace ribbon
