#pragma once

#include <stdexcept>
#include <string>

namespace skolem {

/// Thrown when an operation's input violates a documented precondition.
/// The message names the violated condition.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Thrown by the text and JSON readers on malformed pair-set input.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace skolem
