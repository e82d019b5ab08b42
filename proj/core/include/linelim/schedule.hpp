#pragma once

#include <string>
#include <vector>

#include "linelim/model.hpp"

namespace linelim {

/// Remaining-player counts N_0..N_{M-1}, one per round. Round m is played by
/// counts[m] players; N_0 is the field size and the last round is the final
/// between two players.
struct EliminationSchedule {
  std::vector<int> counts;

  int rounds() const noexcept { return static_cast<int>(counts.size()); }
  /// Players removed after round m; zero after the final.
  int eliminated_after(int round) const;

  friend bool operator==(const EliminationSchedule&, const EliminationSchedule&) = default;
};

/// Builds the linear elimination schedule backwards from the final. At each
/// step the even part of the average remaining decrement is tried; if that
/// would more than halve the field, the count doubles instead.
///
/// Throws kInvalidConfig if cfg does not satisfy validate_config().
EliminationSchedule build_schedule(const Config& cfg);

/// Sum over interior rounds t = 1..M-2 of the change in consecutive
/// decrements. Throws kTooShort for fewer than three counts.
long long schedule_objective(std::span<const int> counts);
inline long long schedule_objective(const EliminationSchedule& s) { return schedule_objective(s.counts); }

enum class ScheduleConstraint {
  kConfig,
  kLength,
  kFirstCount,
  kLastCount,
  kOddDecrement,
  kDecrementTooSmall,
  kMoreThanHalved,
  kIncreasingDecrement,
};

std::string to_string(ScheduleConstraint c);

struct ScheduleViolation {
  int index = -1;  // -1 when the violation is not tied to a round
  ScheduleConstraint constraint = ScheduleConstraint::kConfig;
  std::string message;
};

/// Every broken invariant, in index order. Empty iff the schedule is a valid
/// elimination schedule for cfg.
std::vector<ScheduleViolation> validate_schedule(const EliminationSchedule& s, const Config& cfg);

}  // namespace linelim
