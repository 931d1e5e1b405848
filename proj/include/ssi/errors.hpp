#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ssi {

/// Base class for every error raised by the library.
class Error : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

/// Malformed user input: bad game files, bad strategies, bad arguments.
class InputError : public Error
{
public:
    using Error::Error;
};

/// A strategy references a node it does not own or a non-edge.
class InvalidStrategy : public InputError
{
public:
    using InputError::InputError;
};

/// Syntax or semantic error in a game file, with a 1-based source position.
class ParseError : public InputError
{
public:
    ParseError(const std::string &message, std::size_t line, std::size_t column)
        : InputError("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message),
          line_(line), column_(column)
    {
    }

    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

/// The valued strategy lets the opponent close a cycle of the opponent's parity.
class NotAdmissible : public Error
{
public:
    using Error::Error;
};

/// An internal guarantee failed (rule axioms, optimality at termination, ...).
class InvariantViolation : public Error
{
public:
    using Error::Error;
};

/// Exhaustive enumeration would exceed the configured budget.
class BudgetExceeded : public Error
{
public:
    using Error::Error;
};

} // namespace ssi
