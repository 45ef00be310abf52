#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace sullivan {

// Base of every error thrown by the engine.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Misuse of an operation: bad arguments, violated preconditions.
class PreconditionError : public Error {
public:
    using Error::Error;
};

class DegreeMismatch : public PreconditionError {
public:
    using PreconditionError::PreconditionError;
};

// A product or differential produced a nonzero term above the working cap.
class CapOverflow : public Error {
public:
    using Error::Error;
};

// A degree outside the window in which results can be certified.
class OutOfWindow : public Error {
public:
    using Error::Error;
};

// Mathematical validation failed (d^2 != 0, a constraint residue, ...).
class ValidationError : public Error {
public:
    using Error::Error;
};

// A Massey-type product has no defining system.
class NotDefined : public Error {
public:
    NotDefined(const std::string& what, std::string obstruction)
        : Error(what), obstruction_(std::move(obstruction)) {}
    const std::string& obstruction() const { return obstruction_; }

private:
    std::string obstruction_;
};

class ParseError : public Error {
public:
    ParseError(const std::string& message, std::size_t line, std::size_t column)
        : Error(std::to_string(line) + ":" + std::to_string(column) + ": " + message),
          message_(message), line_(line), column_(column) {}
    std::size_t line() const { return line_; }
    std::size_t column() const { return column_; }
    const std::string& message() const { return message_; }

private:
    std::string message_;
    std::size_t line_;
    std::size_t column_;
};

}  // namespace sullivan
