#pragma once

#include <stdexcept>
#include <string>

namespace plybasis {

/// Caller passed arguments that violate an operation's contract
/// (mismatched universes, out-of-range vertices, malformed structures).
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A documented precondition of an algorithm does not hold for the input
/// (non-Eulerian subgraph, non-normal decomposition, non-generating set, ...).
class PreconditionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Exact oracles refuse inputs above their configured size caps.
class SizeError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Path query between vertices in different forest components.
class DisconnectedError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  int line() const noexcept { return line_; }

 private:
  int line_;
};

}  // namespace plybasis
