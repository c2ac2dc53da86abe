#pragma once

#include <stdexcept>
#include <string>

namespace anyoncodec {

/// Malformed input: bad lengths, out-of-range indices, unparsable files.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A mathematical precondition failed (e.g. a subspace is not q-isotropic).
/// The message carries the witness.
class PreconditionError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// An enumeration or dense computation would exceed the configured cap.
class CapacityError : public std::length_error {
 public:
  using std::length_error::length_error;
};

class ParseError : public InputError {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& what)
      : InputError("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace anyoncodec
