#pragma once

#include <stdexcept>
#include <string>

namespace opensys {

/// Root of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Errors arising from ill-typed mathematical input (mismatched sets,
/// boundaries, dimensions, non-linear input to a linear routine, ...).
class MathError : public Error {
 public:
  using Error::Error;
};

#define OPENSYS_MATH_ERROR(Name)         \
  class Name : public MathError {        \
   public:                               \
    using MathError::MathError;          \
  }

OPENSYS_MATH_ERROR(CodomainMismatch);
OPENSYS_MATH_ERROR(DomainMismatch);
OPENSYS_MATH_ERROR(FootMismatch);
OPENSYS_MATH_ERROR(ApexTooLarge);
OPENSYS_MATH_ERROR(FunctorMismatch);
OPENSYS_MATH_ERROR(SourceMismatch);
OPENSYS_MATH_ERROR(SpaceMismatch);
OPENSYS_MATH_ERROR(BoundaryMismatch);
OPENSYS_MATH_ERROR(DimensionMismatch);
OPENSYS_MATH_ERROR(NotLinear);
OPENSYS_MATH_ERROR(NoConvergence);
OPENSYS_MATH_ERROR(InconsistentFixing);
OPENSYS_MATH_ERROR(InvalidValue);

#undef OPENSYS_MATH_ERROR

/// Syntax or semantic error in a network document.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t column)
      : Error("line " + std::to_string(line) + ", column " +
              std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// Malformed serialized data (JSON documents, command-line values).
class FormatError : public Error {
 public:
  using Error::Error;
};

}  // namespace opensys
