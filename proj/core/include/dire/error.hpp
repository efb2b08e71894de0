#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace dire {

enum class ErrorCode {
  kInvalidArgument,
  kDuplicateCandidate,
  kWrongLengthRanking,
  kBadPriority,
  kIndexOutOfRange,
  kEmptySet,
  kCommitteeSizeMismatch,
  kEmptyPopulation,
  kInvalidScheme,
  kBoundOutOfRange,
  kQuotaZero,
  kOracleCapExceeded,
  kPreconditionViolated,
  kParseError,
  kIoError,
};

std::string_view to_string(ErrorCode code);

/// Exception type for every failure raised by the library. The code lets
/// callers (the CLI in particular) map failures to exit statuses.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace dire
