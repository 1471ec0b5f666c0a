#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace credalkit {

/// Base class of every error thrown by this library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Malformed input text. Carries the 1-based line/column of the offending
/// character when known.
struct ParseError : Error {
  ParseError(std::size_t line_, std::size_t column_, const std::string& msg)
      : Error("parse error at " + std::to_string(line_) + ":" +
              std::to_string(column_) + ": " + msg),
        line(line_),
        column(column_) {}
  explicit ParseError(const std::string& msg) : Error("parse error: " + msg) {}

  std::size_t line = 0;
  std::size_t column = 0;
};

/// A domain invariant or operation precondition does not hold.
struct ValidationError : Error {
  using Error::Error;
};

/// Dempster combination is undefined: the two mass functions are in total
/// conflict (every focal intersection is empty).
struct TotalConflict : Error {
  using Error::Error;
};

/// Bayes conditioning on an event the prior assigns probability zero.
struct ZeroProbabilityEvidence : ValidationError {
  using ValidationError::ValidationError;
};

/// An operation restricted to Bayesian mass functions (all focal elements
/// singletons) was given a general one.
struct NotBayesian : ValidationError {
  using ValidationError::ValidationError;
};

/// The capacity has negative Moebius mass, so it is not a belief function.
struct NotABeliefFunction : ValidationError {
  using ValidationError::ValidationError;
};

/// The operation is only defined for frames of a specific size.
struct WrongFrameSize : ValidationError {
  using ValidationError::ValidationError;
};

/// Input exceeds the documented size bounds of an exhaustive algorithm.
struct ScaleLimit : ValidationError {
  using ValidationError::ValidationError;
};

}  // namespace credalkit
