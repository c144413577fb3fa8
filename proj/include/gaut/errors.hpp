#pragma once

#include <stdexcept>
#include <cstddef>
#include <string>

namespace gaut {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Mismatched groups, dimensions or lengths.
class StructuralError : public Error {
public:
    using Error::Error;
};

/// The input violates a standing assumption (not homogeneous, not pointed, ...).
class ValidationError : public Error {
public:
    using Error::Error;
};

/// A configured resource cap would be exceeded.
class ResourceGuardError : public Error {
public:
    using Error::Error;
};

/// Invariant broken inside the library; indicates a bug.
class InternalError : public Error {
public:
    using Error::Error;
};

} // namespace gaut

namespace gaut {

/// Malformed text input. `line` and `column` are 1-based; 0 means unknown.
class ParseError : public Error {
public:
    ParseError(const std::string& message, std::size_t line, std::size_t column)
        : Error(format(message, line, column)), line_(line), column_(column)
    {
    }

    std::size_t line() const { return line_; }
    std::size_t column() const { return column_; }

private:
    static std::string format(const std::string& message, std::size_t line, std::size_t column)
    {
        if (line == 0 && column == 0)
            return message;
        return std::to_string(line) + ":" + std::to_string(column) + ": " + message;
    }

    std::size_t line_;
    std::size_t column_;
};

} // namespace gaut
