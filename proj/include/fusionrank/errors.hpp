#pragma once

#include <stdexcept>
#include <string>

namespace fusionrank {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class DivisionByZero : public Error {
public:
    using Error::Error;
};

/// A value expected to be a rational integer was not.
class NonIntegral : public Error {
public:
    using Error::Error;
};

/// A computation was asked for outside its domain (stability, ranges, ...).
class PreconditionError : public Error {
public:
    using Error::Error;
};

class UnknownLabel : public Error {
public:
    explicit UnknownLabel(const std::string& id)
        : Error("label '" + id + "' is not in the fusion ring"), id_(id) {}
    const std::string& id() const noexcept { return id_; }

private:
    std::string id_;
};

/// Dual graph is unstable or disconnected.
class GraphError : public Error {
public:
    using Error::Error;
};

/// Enumeration would exceed the configured work limit.
class SizeGuardExceeded : public Error {
public:
    using Error::Error;
};

/// Malformed document. line/column are 1-based; 0 means unknown.
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t line = 0, std::size_t column = 0)
        : Error(format(what, line, column)), line_(line), column_(column) {}

    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

private:
    static std::string format(const std::string& what, std::size_t line, std::size_t column) {
        if (line == 0) return what;
        return "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what;
    }

    std::size_t line_;
    std::size_t column_;
};

}  // namespace fusionrank
