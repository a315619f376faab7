#pragma once

#include <stdexcept>
#include <string>

namespace ggfnsp {

/** Base class of every error thrown by this library. */
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/** An argument lies outside an operation's mathematical domain. */
class DomainError : public Error {
 public:
  using Error::Error;
};

/** Malformed input text (CSV structure, numbers that do not parse). */
class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& what)
      : Error("parse error at line " + std::to_string(line) + ", column " +
              std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_ = 0;
  std::size_t column_ = 0;
};

/** Structurally well-formed input carrying invalid values. */
class ValidationError : public Error {
 public:
  using Error::Error;
};

/** An operation that requires at least one element received none. */
class EmptyInput : public Error {
 public:
  using Error::Error;
};

/** No directed path exists between the requested endpoints. */
class Unreachable : public Error {
 public:
  using Error::Error;
};

/** Input exceeds a guard bound of an exhaustive operation. */
class TooLarge : public Error {
 public:
  using Error::Error;
};

/** Rejection sampling failed to produce a nonnegative cost. */
class RejectionExhausted : public Error {
 public:
  RejectionExhausted(const std::string& what, int edge_index)
      : Error(what), edge_index_(edge_index) {}

  /** Index of the offending edge, or -1 when sampled outside a network. */
  int edge_index() const { return edge_index_; }

 private:
  int edge_index_ = -1;
};

/** A path object is inconsistent with the network it refers to. */
class InvalidPath : public Error {
 public:
  using Error::Error;
};

}  // namespace ggfnsp
