#include "dire/error.hpp"

namespace dire {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument: return "invalid-argument";
    case ErrorCode::kDuplicateCandidate: return "duplicate-candidate";
    case ErrorCode::kWrongLengthRanking: return "wrong-length-ranking";
    case ErrorCode::kBadPriority: return "bad-priority-permutation";
    case ErrorCode::kIndexOutOfRange: return "index-out-of-range";
    case ErrorCode::kEmptySet: return "empty-set";
    case ErrorCode::kCommitteeSizeMismatch: return "committee-size-mismatch";
    case ErrorCode::kEmptyPopulation: return "empty-population";
    case ErrorCode::kInvalidScheme: return "invalid-scheme";
    case ErrorCode::kBoundOutOfRange: return "bound-out-of-range";
    case ErrorCode::kQuotaZero: return "quota-zero";
    case ErrorCode::kOracleCapExceeded: return "oracle-cap-exceeded";
    case ErrorCode::kPreconditionViolated: return "precondition-violated";
    case ErrorCode::kParseError: return "parse-error";
    case ErrorCode::kIoError: return "io-error";
  }
  return "unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

}  // namespace dire
