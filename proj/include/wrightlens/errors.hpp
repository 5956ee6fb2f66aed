#pragma once

#include <stdexcept>
#include <string>

namespace wrightlens {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Invalid parameter (WrightParams, ClassParams, grid, query...).
class ParameterError : public Error {
 public:
  using Error::Error;
};

/// Argument sits on (or within tolerance of) a pole of the gamma function.
class PoleError : public Error {
 public:
  using Error::Error;
};

/// Point outside the domain of evaluation (the punctured unit disk).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A series or iteration failed to reach its stopping rule.
class ConvergenceError : public Error {
 public:
  using Error::Error;
};

/// A denominator vanished during evaluation.
class DivisionError : public Error {
 public:
  using Error::Error;
};

/// An internal consistency condition of a construction failed.
class SingularError : public Error {
 public:
  using Error::Error;
};

/// Malformed or unreadable input file.
class InputFormatError : public Error {
 public:
  using Error::Error;
};

/// A value left the floating-point range.
class OverflowError : public Error {
 public:
  using Error::Error;
};

}  // namespace wrightlens
