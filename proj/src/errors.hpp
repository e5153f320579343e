#pragma once

#include <stdexcept>
#include <string>

namespace modcg {

// Caller passed something unusable: bad flag value, wrong-sized vector,
// vertex id out of range, malformed config.
struct argument_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Input text could not be parsed. `line` is 1-based.
struct parse_error : std::runtime_error {
  int line;
  parse_error(const std::string& msg, int line_number)
      : std::runtime_error(msg + " (line " + std::to_string(line_number) + ")"),
        line(line_number) {}
};

// Instance exceeds a hard size guard of an exhaustive routine.
struct too_large_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// A limit (time or iterations) was hit before a usable result existed.
struct limit_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// An internal consistency check failed; indicates a bug, never user input.
struct internal_error : std::logic_error {
  using std::logic_error::logic_error;
};

}  // namespace modcg
