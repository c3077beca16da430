#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace ua {

enum class ErrorCode {
  Parse,
  Capacity,
  InvalidArgument,
  UnknownOp,
  NotUncountable,
  NoBottom,
  NotConnected,
  EmptySubpower,
  OpSignatureMismatch,
  NotDivisible,
  Range,
  EmptyInput,
  LengthMismatch,
  NotChainAlgebra,
  Timeout,
};

std::string_view to_string(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, std::string const& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

// Parse errors carry the 1-based line number they were detected on (0 when
// the problem is not tied to a line, e.g. a missing `carrier` line).
class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::string const& reason);

  std::size_t line() const noexcept { return line_; }
  std::string const& reason() const noexcept { return reason_; }

 private:
  std::size_t line_;
  std::string reason_;
};

// Caps on the brute-force parts of the library. The defaults keep every
// enumeration at desk scale; the CLI exposes them as flags.
struct Limits {
  std::size_t monoid_carrier = 8;           // n^n transformations
  std::size_t congruence_carrier = 9;       // Bell(n) partitions
  std::size_t subpower_elements = 1000000;  // closure size
  std::size_t enumeration = 1000000;        // n^N tuples
};

}  // namespace ua
