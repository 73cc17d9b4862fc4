#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace dproc {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A constraint, preference or trace mentions an activity outside the alphabet.
class UnknownActivity : public Error {
 public:
  using Error::Error;
};

class DuplicateActivityId : public Error {
 public:
  using Error::Error;
};

/// DSL text does not conform to the grammar. Line and column are 1-based.
class SyntaxError : public Error {
 public:
  SyntaxError(const std::string& message, std::size_t line, std::size_t column)
      : Error(std::to_string(line) + ":" + std::to_string(column) + ": " + message),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// A template was given the wrong number or shape of arguments.
class ArityError : public Error {
 public:
  using Error::Error;
};

class AlphabetTooLarge : public Error {
 public:
  using Error::Error;
};

/// The workload counter does not fit in 64 bits.
class Overflow : public Error {
 public:
  using Error::Error;
};

/// A process has no unique traces, so utilities are undefined.
class DegenerateProcess : public Error {
 public:
  using Error::Error;
};

class EmptySubset : public Error {
 public:
  using Error::Error;
};

class TooManyStakeholders : public Error {
 public:
  using Error::Error;
};

class MismatchedStakeholders : public Error {
 public:
  using Error::Error;
};

}  // namespace dproc
