#pragma once

#include <stdexcept>
#include <string>

namespace pgcomp {

// Invalid argument to a library operation (bad vertex id, violated precondition).
struct InputError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// An instance exceeds a configured size limit (e.g. the brute-force cap).
struct SizeError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A pluggable component (half-solver, class solver) broke its contract.
struct ContractViolation : std::logic_error {
  using std::logic_error::logic_error;
};

// Instance generation cannot satisfy the requested class constraints.
struct GenerationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Text input rejected by a parser, with 1-based position information.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, int line, int column)
      : std::runtime_error(message + " (line " + std::to_string(line) +
                           ", column " + std::to_string(column) + ")"),
        line_(line),
        column_(column) {}

  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

}  // namespace pgcomp
