#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace west {

/* Malformed formula, trace or regex text. Line and column are 1-based. */
class ParseError : public std::runtime_error {
public:
  ParseError(const std::string &message, std::size_t line, std::size_t column)
      : std::runtime_error(message), line_(line), column_(column) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

private:
  std::size_t line_;
  std::size_t column_;
};

/* A temporal interval with a > b. */
class IntervalError : public ParseError {
public:
  using ParseError::ParseError;
  IntervalError(const std::string &message)
      : ParseError(message, 0, 0) {}
};

/* An enumeration, expansion or size budget was exceeded. */
class BudgetExceeded : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/* The deadline installed by a LimitScope expired mid-computation. */
class TimeoutError : public BudgetExceeded {
public:
  using BudgetExceeded::BudgetExceeded;
};

/* An operation was called outside its precondition. */
class PreconditionError : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

} // namespace west
