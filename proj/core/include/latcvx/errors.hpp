#pragma once

#include <stdexcept>
#include <string>

namespace latcvx {

/// Malformed input text (rationals, JSON documents, parameter lists).
class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

/// An operation was called on arguments outside its domain: degenerate
/// hulls, singular matrices, non-symmetric bodies where symmetry is needed,
/// and so on. The message starts with a short machine-friendly tag such as
/// "degenerate" or "singular matrix".
class PreconditionError : public std::invalid_argument {
 public:
  explicit PreconditionError(const std::string& what)
      : std::invalid_argument(what) {}
};

/// Internal consistency check failed. Seeing one of these is a bug.
class InvariantError : public std::logic_error {
 public:
  explicit InvariantError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace latcvx
