#pragma once

#include <stdexcept>
#include <string>

namespace rigid {

/// Argument outside an operation's domain (u == v, unknown vertex, loop edge).
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Structural precondition of an operation is not met by its input,
/// e.g. asking for the 3-blocks of a graph that is not R2-connected.
class PreconditionViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Two independent routes to the same quantity disagreed. Always a bug.
class OracleDisagreement : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace rigid
