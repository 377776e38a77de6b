#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace bnet {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed network text. Carries a 1-based line/column when known (0 otherwise).
class ParseError : public Error {
public:
    ParseError(const std::string& msg, std::size_t line = 0, std::size_t column = 0)
        : Error(format(msg, line, column)), line_(line), column_(column) {}

    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

private:
    static std::string format(const std::string& msg, std::size_t line, std::size_t column) {
        if (line == 0) return msg;
        return "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + msg;
    }

    std::size_t line_;
    std::size_t column_;
};

/// Bad arguments: out-of-range indices, scope mismatches, invalid bounds.
class InvalidArgument : public Error {
public:
    using Error::Error;
};

/// A state space would exceed the configured scope cap.
class CapExceeded : public Error {
public:
    using Error::Error;
};

/// A computation ran past its deadline.
class Timeout : public Error {
public:
    using Error::Error;
};

/// An invariant that should hold by construction did not. Always a bug.
class InternalError : public Error {
public:
    using Error::Error;
};

}  // namespace bnet
