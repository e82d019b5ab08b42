#pragma once

#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "linelim/model.hpp"
#include "linelim/schedule.hpp"

namespace linelim {

/// One match: the rank-i player (`high`) against the rank-(N_t+1-i) player.
struct Pairing {
  PlayerId high;
  PlayerId low;

  friend bool operator==(const Pairing&, const Pairing&) = default;
};

struct RoundRecord {
  int round = 0;
  std::vector<Pairing> pairings;
  ResultVector results;
  /// Standings after re-ranking, before anyone is removed.
  Standings standings;
  /// Ordered by post-rerank rank, best first.
  std::vector<PlayerId> eliminated;

  friend bool operator==(const RoundRecord&, const RoundRecord&) = default;
};

/// Immutable snapshot of a linear elimination tournament. Transitions go
/// through apply_results(), which returns the successor state.
class TournamentState {
 public:
  /// Round 0, seeds 1..N ranked by seed.
  static TournamentState start(const Config& cfg);

  const Config& config() const noexcept { return config_; }
  const EliminationSchedule& schedule() const noexcept { return schedule_; }
  /// Number of completed rounds; also the index of the next round.
  int round() const noexcept { return static_cast<int>(history_.size()); }
  const Standings& standings() const noexcept { return standings_; }
  int active_count() const noexcept { return standings_.size(); }
  std::span<const RoundRecord> history() const noexcept { return history_; }

  bool completed() const noexcept { return champion_.has_value(); }
  std::optional<PlayerId> champion() const noexcept { return champion_; }

  friend bool operator==(const TournamentState&, const TournamentState&) = default;

 private:
  friend TournamentState apply_results(const TournamentState&, const ResultVector&);

  Config config_;
  EliminationSchedule schedule_;
  Standings standings_;
  std::vector<RoundRecord> history_;
  std::optional<PlayerId> champion_;
};

/// Snake pairing over the current standings. Throws kTournamentComplete.
std::vector<Pairing> pair_round(const TournamentState& st);

/// Plays one round: re-rank by `results`, remove the scheduled number of
/// losers with the largest new ranks, compact, and record the round. After
/// the final, the winner is champion.
///
/// Throws kBadResultLength, kAntiSymmetryViolation or kTournamentComplete.
TournamentState apply_results(const TournamentState& st, const ResultVector& results);

using ResultProvider = std::function<ResultVector(const TournamentState&, std::span<const Pairing>)>;

/// Plays every round with results from `provider`. Deterministic whenever
/// the provider is.
TournamentState run_tournament(const Config& cfg, const ResultProvider& provider);

/// Champion, runner-up, then eliminated players by elimination round (latest
/// first) and, within a round, by rank at elimination.
/// Throws kTournamentInProgress.
std::vector<PlayerId> final_ranking(const TournamentState& st);

}  // namespace linelim
