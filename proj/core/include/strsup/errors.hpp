#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace strsup {

/// Bad user-supplied configuration (precedence, limits).
class ConfigError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Malformed input text. `line()` is 1-based, 0 when not tied to a line.
class ParseError : public std::runtime_error {
public:
  ParseError(std::size_t line, const std::string& message)
      : std::runtime_error(line == 0 ? message : "line " + std::to_string(line) + ": " + message),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

private:
  std::size_t line_;
};

/// A caller broke a documented precondition.
class ContractViolation : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

/// A recorded derivation step failed to replay. Indicates a prover bug.
class SoundnessError : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

}  // namespace strsup
