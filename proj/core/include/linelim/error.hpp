#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace linelim {

enum class ErrorCode {
  kOddPlayerCount,
  kTooFewPlayers,
  kTooFewRounds,
  kTooManyRounds,
  kInvalidConfig,
  kNotAPermutation,
  kInvalidResultVector,
  kAntiSymmetryViolation,
  kBadResultLength,
  kTournamentComplete,
  kTournamentInProgress,
  kTooShort,
  kInstanceTooLarge,
  kInfeasible,
  kNotPowerOfTwo,
  kIncompleteResults,
  kEqualStrengthsUnderDeterministic,
  kInvalidFormatParameters,
  kMismatchedSets,
  kMalformedLog,
  kReplayMismatch,
  kInvalidArgument,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Every recoverable failure in the library is reported through this type.
/// The code is stable and suitable for mapping onto exit codes or HTTP
/// statuses; the message is for humans.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace linelim
