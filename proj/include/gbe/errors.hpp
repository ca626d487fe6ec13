#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace gbe {

/// Base class for all recoverable errors raised by this library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Invalid input data or parameter values (CLI exit code 1).
class ValidationError : public Error {
public:
    using Error::Error;
};

/// Malformed input text; carries the 1-based line number.
class ParseError : public ValidationError {
public:
    ParseError(std::size_t line, const std::string& message)
        : ValidationError("line " + std::to_string(line) + ": " + message), line_(line) {}

    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

/// Filesystem / stream failures (CLI exit code 2).
class IoError : public Error {
public:
    using Error::Error;
};

}  // namespace gbe
