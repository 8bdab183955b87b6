#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace amm {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A precondition on caller-supplied data was violated (shape mismatch,
/// out-of-range parameter, non-finite entry, ...).
class InputError : public Error {
 public:
  using Error::Error;
};

/// Malformed matrix file. Line and field are 1-based; field is 0 when the
/// problem concerns the whole line.
class ParseError : public InputError {
 public:
  ParseError(std::string const& source, std::size_t line, std::size_t field,
             std::string const& what);

  std::size_t line() const noexcept { return line_; }
  std::size_t field() const noexcept { return field_; }

 private:
  std::size_t line_;
  std::size_t field_;
};

/// Reading or writing a file failed.
class IoError : public Error {
 public:
  using Error::Error;
};

/// The iterative solver could not make progress.
class SolverError : public Error {
 public:
  enum class Kind { not_positive_definite, divergence };

  SolverError(Kind kind, std::string const& what) : Error(what), kind_(kind) {}

  Kind kind() const noexcept { return kind_; }

 private:
  Kind kind_;
};

}  // namespace amm
