#include "linelim/error.hpp"

namespace linelim {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::kOddPlayerCount: return "OddPlayerCount";
    case ErrorCode::kTooFewPlayers: return "TooFewPlayers";
    case ErrorCode::kTooFewRounds: return "TooFewRounds";
    case ErrorCode::kTooManyRounds: return "TooManyRounds";
    case ErrorCode::kInvalidConfig: return "InvalidConfig";
    case ErrorCode::kNotAPermutation: return "NotAPermutation";
    case ErrorCode::kInvalidResultVector: return "InvalidResultVector";
    case ErrorCode::kAntiSymmetryViolation: return "AntiSymmetryViolation";
    case ErrorCode::kBadResultLength: return "BadResultLength";
    case ErrorCode::kTournamentComplete: return "TournamentComplete";
    case ErrorCode::kTournamentInProgress: return "TournamentInProgress";
    case ErrorCode::kTooShort: return "TooShort";
    case ErrorCode::kInstanceTooLarge: return "InstanceTooLarge";
    case ErrorCode::kInfeasible: return "Infeasible";
    case ErrorCode::kNotPowerOfTwo: return "NotPowerOfTwo";
    case ErrorCode::kIncompleteResults: return "IncompleteResults";
    case ErrorCode::kEqualStrengthsUnderDeterministic: return "EqualStrengthsUnderDeterministic";
    case ErrorCode::kInvalidFormatParameters: return "InvalidFormatParameters";
    case ErrorCode::kMismatchedSets: return "MismatchedSets";
    case ErrorCode::kMalformedLog: return "MalformedLog";
    case ErrorCode::kReplayMismatch: return "ReplayMismatch";
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

}  // namespace linelim
