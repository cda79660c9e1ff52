#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace fiberdim {

/// Failure categories raised by the library. Each maps onto one CLI exit code.
enum class ErrorCode {
  kParse,               // malformed input text or literal
  kInvalidInput,        // well-formed but unacceptable (bad weights, unknown preset, inhomogeneous)
  kShapeMismatch,       // differing (n, N) or vector lengths
  kCapTooSmall,         // degree cap below what the request needs
  kNotStabilized,       // finite differences not constant on the trailing window
  kSearchExhausted,     // no maximal point within the sample budget
  kPointNotMaximal,     // scaffold requested at a non-generic point
  kInconsistentLift,    // prescribed fiber value outside the evaluated span
  kIdentityViolated,    // witness expressions differ as polynomials
  kInvariantViolation,  // any other internal consistency check
};

std::string_view error_code_name(ErrorCode code);

/// Process exit status for an error code: 2 parse/input, 3 shape mismatch,
/// 4 not stabilized (and cap too small), 5 internal invariant violation.
int exit_status(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) { throw Error(code, what); }

}  // namespace fiberdim
