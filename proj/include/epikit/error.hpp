#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace epikit {

// Base of every error raised by the library. The CLI maps all of these to
// exit code 2 (input error).
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Two objects that must live over the same signature do not.
class SignatureMismatch : public Error {
 public:
  using Error::Error;
};

// Formula text does not conform to the grammar, or names an unknown atom.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

// An operation's precondition is violated by otherwise well-formed input
// (unsatisfiable revision input, tautological contraction input, ...).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// A value violates a type invariant (duplicate atoms, non-bijective table,
// malformed file, ...).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

}  // namespace epikit
