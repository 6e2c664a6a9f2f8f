#pragma once

#include <stdexcept>
#include <string>

namespace picard {

// Every failure carries a stable machine-readable code (used by the CLI to
// pick exit codes) plus a human message.
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& message)
      : std::runtime_error(code + ": " + message), code_(std::move(code)) {}

  const std::string& code() const { return code_; }

 private:
  std::string code_;
};

[[noreturn]] inline void fail(const std::string& code, const std::string& message) {
  throw Error(code, message);
}

// Hypothesis failures are refusals to compute (the formula's preconditions do
// not hold); everything else is an input/validation problem.
inline bool is_hypothesis_failure(const std::string& code) {
  return code == "NotConvexRho" || code == "PreconditionFailed" ||
         code == "NotReflexive" || code == "FanIncomplete";
}

}  // namespace picard
