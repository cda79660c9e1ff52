#include "fiberdim/error.hpp"

namespace fiberdim {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kParse: return "parse_error";
    case ErrorCode::kInvalidInput: return "invalid_input";
    case ErrorCode::kShapeMismatch: return "shape_mismatch";
    case ErrorCode::kCapTooSmall: return "cap_too_small";
    case ErrorCode::kNotStabilized: return "not_stabilized";
    case ErrorCode::kSearchExhausted: return "search_exhausted";
    case ErrorCode::kPointNotMaximal: return "point_not_maximal";
    case ErrorCode::kInconsistentLift: return "inconsistent_lift";
    case ErrorCode::kIdentityViolated: return "identity_violated";
    case ErrorCode::kInvariantViolation: return "invariant_violation";
  }
  return "unknown";
}

int exit_status(ErrorCode code) {
  switch (code) {
    case ErrorCode::kParse:
    case ErrorCode::kInvalidInput: return 2;
    case ErrorCode::kShapeMismatch: return 3;
    case ErrorCode::kCapTooSmall:
    case ErrorCode::kNotStabilized: return 4;
    default: return 5;
  }
}

}  // namespace fiberdim
