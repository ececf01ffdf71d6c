#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>

namespace lcep {

/// Bad caller input: malformed data, violated preconditions, bad flags.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class ParseError : public InputError {
 public:
  ParseError(std::size_t line, const std::string& what)
      : InputError("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// The search hit its node or time limit; the instance is beyond desk scale.
/// Never to be read as "no such object exists".
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A structural guarantee the algorithm relies on did not hold.
/// `claim()` names the guarantee so a failure points at the broken step.
class ClaimViolation : public std::logic_error {
 public:
  ClaimViolation(std::string claim, const std::string& detail)
      : std::logic_error(claim + ": " + detail), claim_(std::move(claim)) {}

  const std::string& claim() const { return claim_; }

 private:
  std::string claim_;
};

enum class AssertLevel { low, high };

inline void check_claim(bool ok, const char* claim, const std::string& detail) {
  if (!ok) throw ClaimViolation(claim, detail);
}

}  // namespace lcep
