#ifndef ISO_ERRORS_HPP
#define ISO_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace iso {

/// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Syntax or identifier error in the expression mini-language.
/// Carries the byte offset of the offending token.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t offset)
      : Error(message + " (offset " + std::to_string(offset) + ")"),
        offset_(offset) {}
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

/// Evaluation outside the mathematical domain (log of nonpositive,
/// 0^negative, division by zero) or an overflow to non-finite.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Invalid model constants (zero where nonzero is required, ...).
class ModelError : public Error {
 public:
  using Error::Error;
};

/// Numerical failure (eigensolver non-convergence, FD margin violation).
class NumericError : public Error {
 public:
  using Error::Error;
};

/// Internal consistency violation: two independent computation routes
/// disagree beyond tolerance. Never expected on valid inputs.
class InternalError : public Error {
 public:
  using Error::Error;
};

/// Irregular or otherwise unusable curve (vanishing top-view speed,
/// parameter out of range, nonpositive top view).
class CurveError : public Error {
 public:
  using Error::Error;
};

}  // namespace iso

#endif  // ISO_ERRORS_HPP
