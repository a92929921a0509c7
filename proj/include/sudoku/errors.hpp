#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace sudoku {

/// Base class of every error thrown by the engine.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A row, column or block index outside the grid.
class IndexError : public Error {
public:
    using Error::Error;
};

/// The givens break the row/column/block rule, or some other input is unusable.
class InputError : public Error {
public:
    using Error::Error;
};

/// An operation was called in a state where it is not defined.
class UsageError : public Error {
public:
    using Error::Error;
};

/// Raised when an assignment would corrupt the maintained candidate sets.
class ContractViolation : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    ParseError(std::size_t line, std::size_t column, const std::string& what)
        : Error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what),
          line_(line),
          column_(column) {}

    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

}  // namespace sudoku
