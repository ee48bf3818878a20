#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace kast {

enum class InputErrorCode {
  syntax,
  bipartite_violation,
  crossing_edges,
  dangling_id,
  duplicate_id,
  bad_hole,
  witness_outside,
  empty_region,
  bad_character,
  not_a_cycle,
  unknown_edge,
  missing_holes,
  chain_not_closed,
};

const char* to_string(InputErrorCode code);

// Malformed or inconsistent input: file contents, region text, chains.
class InputError : public std::runtime_error {
 public:
  InputError(InputErrorCode code, const std::string& what, std::size_t line = 0)
      : std::runtime_error(format(code, what, line)), code_(code), line_(line) {}

  InputErrorCode code() const { return code_; }
  // 1-based line of the offending input, or 0 when not line oriented.
  std::size_t line() const { return line_; }

 private:
  static std::string format(InputErrorCode code, const std::string& what, std::size_t line) {
    std::string s = std::string(to_string(code)) + ": " + what;
    if (line != 0) s += " (line " + std::to_string(line) + ")";
    return s;
  }

  InputErrorCode code_;
  std::size_t line_;
};

// The exact backend only embeds rotations with denominator 1, 2 or 4.
class RepresentabilityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An enumeration request exceeded the configured budget.
class LimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace kast
