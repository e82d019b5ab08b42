#pragma once

// Baseline formats used for comparisons: the seeded single-elimination
// bracket and the full round-robin.

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "linelim/engine.hpp"
#include "linelim/model.hpp"

namespace linelim {

enum class FormatKind { kLinearElimination, kSingleElimination, kRoundRobin };

std::string_view to_string(FormatKind kind) noexcept;
/// Accepts "linear-elimination", "single-elimination", "round-robin" and the
/// short forms "linear", "single", "rr". Throws kInvalidFormatParameters.
FormatKind parse_format_kind(std::string_view name);

struct FormatDescriptor {
  FormatKind kind = FormatKind::kLinearElimination;
  int player_count = 0;
  int round_count = 0;    // linear elimination only
  int rerank_passes = 1;  // linear elimination only

  friend bool operator==(const FormatDescriptor&, const FormatDescriptor&) = default;
};

/// Throws kInvalidFormatParameters if the descriptor cannot be played.
void validate_format(const FormatDescriptor& format);
/// Rounds a tournament of this format takes.
int format_rounds(const FormatDescriptor& format);

// --- single elimination ----------------------------------------------------

bool is_power_of_two(int n) noexcept;

/// Bracket slot order for n seeds: adjacent slots meet in round 1, seed i
/// always facing seed n+1-i, with seeds 1 and 2 in opposite halves.
std::vector<int> bracket_seed_order(int n);

struct BracketRound {
  int round = 0;
  std::vector<Pairing> pairings;
  std::vector<Outcome> results;  // outcome of each pairing's `high` slot
  std::vector<PlayerId> eliminated;

  friend bool operator==(const BracketRound&, const BracketRound&) = default;
};

class BracketState {
 public:
  /// Throws kNotPowerOfTwo.
  static BracketState seeded(int player_count);
  /// Arbitrary slot layout; size must be a power of two >= 2.
  static BracketState from_slots(std::vector<PlayerId> slots);

  int player_count() const noexcept { return player_count_; }
  int round() const noexcept { return static_cast<int>(history_.size()); }
  std::span<const PlayerId> slots() const noexcept { return slots_; }
  std::span<const BracketRound> history() const noexcept { return history_; }
  bool completed() const noexcept { return slots_.size() == 1; }
  std::optional<PlayerId> champion() const;

  friend bool operator==(const BracketState&, const BracketState&) = default;

 private:
  friend BracketState single_elim_round(const BracketState&, std::span<const Outcome>);

  int player_count_ = 0;
  std::vector<PlayerId> slots_;
  std::vector<BracketRound> history_;
};

/// Slot pairs (0,1), (2,3), ... of the current round.
std::vector<Pairing> bracket_pairings(const BracketState& state);

/// Advances winners positionally. `high_outcomes[i]` is the result for the
/// first slot of match i. Throws kTournamentComplete or kBadResultLength.
BracketState single_elim_round(const BracketState& state, std::span<const Outcome> high_outcomes);

/// Champion, runner-up, then earlier exits; players leaving in the same round
/// are ordered by seed.
std::vector<PlayerId> single_elim_ranking(const BracketState& state);

nlohmann::json bracket_to_json(const BracketState& state);

// --- round robin -------------------------------------------------------------

/// Pairwise results over seeds 1..n.
class RoundRobinResults {
 public:
  explicit RoundRobinResults(int player_count);

  int player_count() const noexcept { return n_; }
  void record(PlayerId winner, PlayerId loser);
  std::optional<PlayerId> winner(PlayerId a, PlayerId b) const;
  bool complete() const noexcept { return recorded_ == n_ * (n_ - 1) / 2; }

 private:
  int index(PlayerId a, PlayerId b) const;

  int n_ = 0;
  int recorded_ = 0;
  std::vector<int> winner_;  // seed of the winner, 0 if unplayed
};

/// Ranks by total wins; players level on wins are split by wins among
/// themselves, then by seed. Throws kIncompleteResults.
std::vector<PlayerId> round_robin(const RoundRobinResults& results);

/// Circle-method rounds. Even n gives n-1 rounds with every player in each;
/// odd n gives n rounds with one bye per round.
std::vector<std::vector<Pairing>> round_robin_schedule(int player_count);

nlohmann::json round_robin_to_json(const RoundRobinResults& results);

}  // namespace linelim
