#include "linelim/formats.hpp"

#include <algorithm>
#include <string>

#include "linelim/error.hpp"
#include "linelim/event_log.hpp"

namespace linelim {

std::string_view to_string(FormatKind kind) noexcept {
  switch (kind) {
    case FormatKind::kLinearElimination: return "linear-elimination";
    case FormatKind::kSingleElimination: return "single-elimination";
    case FormatKind::kRoundRobin: return "round-robin";
  }
  return "unknown";
}

FormatKind parse_format_kind(std::string_view name) {
  if (name == "linear-elimination" || name == "linear") return FormatKind::kLinearElimination;
  if (name == "single-elimination" || name == "single" || name == "knockout") return FormatKind::kSingleElimination;
  if (name == "round-robin" || name == "rr") return FormatKind::kRoundRobin;
  throw Error(ErrorCode::kInvalidFormatParameters, "unknown format \"" + std::string(name) + "\"");
}

void validate_format(const FormatDescriptor& format) {
  const int n = format.player_count;
  switch (format.kind) {
    case FormatKind::kLinearElimination:
      if (auto why = config_violation({n, format.round_count, format.rerank_passes})) {
        throw Error(ErrorCode::kInvalidFormatParameters, *why);
      }
      return;
    case FormatKind::kSingleElimination:
      if (n < 2 || !is_power_of_two(n)) {
        throw Error(ErrorCode::kInvalidFormatParameters,
                    "single elimination needs a power-of-two field, got " + std::to_string(n));
      }
      return;
    case FormatKind::kRoundRobin:
      if (n < 2) throw Error(ErrorCode::kInvalidFormatParameters, "round robin needs at least 2 players");
      return;
  }
}

int format_rounds(const FormatDescriptor& format) {
  validate_format(format);
  switch (format.kind) {
    case FormatKind::kLinearElimination: return format.round_count;
    case FormatKind::kSingleElimination: {
      int rounds = 0;
      for (int n = format.player_count; n > 1; n /= 2) ++rounds;
      return rounds;
    }
    case FormatKind::kRoundRobin:
      return format.player_count % 2 == 0 ? format.player_count - 1 : format.player_count;
  }
  return 0;
}

// ---------------------------------------------------------------------------

bool is_power_of_two(int n) noexcept { return n > 0 && (n & (n - 1)) == 0; }

std::vector<int> bracket_seed_order(int n) {
  if (n < 1 || !is_power_of_two(n)) {
    throw Error(ErrorCode::kNotPowerOfTwo, "bracket size must be a power of two, got " + std::to_string(n));
  }
  std::vector<int> order{1};
  while (static_cast<int>(order.size()) < n) {
    const int size = 2 * static_cast<int>(order.size());
    std::vector<int> next;
    next.reserve(static_cast<std::size_t>(size));
    for (std::size_t i = 0; i < order.size(); ++i) {
      const int s = order[i];
      // Alternate orientation so the bracket halves mirror each other.
      if (i % 2 == 0) {
        next.push_back(s);
        next.push_back(size + 1 - s);
      } else {
        next.push_back(size + 1 - s);
        next.push_back(s);
      }
    }
    order = std::move(next);
  }
  return order;
}

BracketState BracketState::seeded(int player_count) {
  std::vector<PlayerId> slots;
  for (int s : bracket_seed_order(player_count)) slots.emplace_back(s);
  if (player_count < 2) throw Error(ErrorCode::kNotPowerOfTwo, "bracket needs at least two players");
  return from_slots(std::move(slots));
}

BracketState BracketState::from_slots(std::vector<PlayerId> slots) {
  const int n = static_cast<int>(slots.size());
  if (n < 2 || !is_power_of_two(n)) {
    throw Error(ErrorCode::kNotPowerOfTwo, "bracket size must be a power of two >= 2, got " + std::to_string(n));
  }
  Standings check(slots);  // rejects duplicates
  BracketState st;
  st.player_count_ = n;
  st.slots_ = std::move(slots);
  return st;
}

std::optional<PlayerId> BracketState::champion() const {
  if (!completed()) return std::nullopt;
  return slots_.front();
}

std::vector<Pairing> bracket_pairings(const BracketState& state) {
  if (state.completed()) throw Error(ErrorCode::kTournamentComplete, "bracket already has a champion");
  std::vector<Pairing> out;
  const auto slots = state.slots();
  for (std::size_t i = 0; i + 1 < slots.size(); i += 2) out.push_back({slots[i], slots[i + 1]});
  return out;
}

BracketState single_elim_round(const BracketState& state, std::span<const Outcome> high_outcomes) {
  auto pairs = bracket_pairings(state);
  if (high_outcomes.size() != pairs.size()) {
    throw Error(ErrorCode::kBadResultLength, "bracket round " + std::to_string(state.round()) + " has " +
                                                 std::to_string(pairs.size()) + " matches, got " +
                                                 std::to_string(high_outcomes.size()) + " results");
  }
  BracketRound record;
  record.round = state.round();
  record.results.assign(high_outcomes.begin(), high_outcomes.end());

  BracketState next = state;
  next.slots_.clear();
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    const bool high_won = high_outcomes[i] == Outcome::kWin;
    next.slots_.push_back(high_won ? pairs[i].high : pairs[i].low);
    record.eliminated.push_back(high_won ? pairs[i].low : pairs[i].high);
  }
  std::sort(record.eliminated.begin(), record.eliminated.end());
  record.pairings = std::move(pairs);
  next.history_.push_back(std::move(record));
  return next;
}

std::vector<PlayerId> single_elim_ranking(const BracketState& state) {
  if (!state.completed()) throw Error(ErrorCode::kTournamentInProgress, "bracket is not finished");
  std::vector<PlayerId> out{*state.champion()};
  const auto history = state.history();
  for (auto it = history.rbegin(); it != history.rend(); ++it) {
    out.insert(out.end(), it->eliminated.begin(), it->eliminated.end());
  }
  return out;
}

nlohmann::json bracket_to_json(const BracketState& state) {
  nlohmann::json rounds = nlohmann::json::array();
  for (const auto& r : state.history()) {
    std::vector<std::string> results;
    for (auto o : r.results) results.emplace_back(1, to_char(o));
    std::vector<int> eliminated;
    for (auto p : r.eliminated) eliminated.push_back(p.seed);
    rounds.push_back({{"round", r.round},
                      {"pairings", pairings_to_json(r.pairings)},
                      {"results", results},
                      {"eliminated", eliminated}});
  }
  return {
      {"format", to_string(FormatKind::kSingleElimination)},
      {"config", {{"players", state.player_count()}}},
      {"rounds", std::move(rounds)},
      {"status", state.completed() ? "completed" : "in-progress"},
      {"champion", state.champion() ? nlohmann::json(state.champion()->seed) : nlohmann::json(nullptr)},
  };
}

// ---------------------------------------------------------------------------

RoundRobinResults::RoundRobinResults(int player_count) : n_(player_count) {
  if (player_count < 2) throw Error(ErrorCode::kInvalidFormatParameters, "round robin needs at least 2 players");
  winner_.assign(static_cast<std::size_t>(n_) * static_cast<std::size_t>(n_), 0);
}

int RoundRobinResults::index(PlayerId a, PlayerId b) const {
  if (a.seed < 1 || a.seed > n_ || b.seed < 1 || b.seed > n_ || a == b) {
    throw Error(ErrorCode::kInvalidArgument,
                "invalid pairing " + std::to_string(a.seed) + " vs " + std::to_string(b.seed));
  }
  const int lo = std::min(a.seed, b.seed) - 1;
  const int hi = std::max(a.seed, b.seed) - 1;
  return lo * n_ + hi;
}

void RoundRobinResults::record(PlayerId winner, PlayerId loser) {
  auto& slot = winner_[static_cast<std::size_t>(index(winner, loser))];
  if (slot == 0) ++recorded_;
  slot = winner.seed;
}

std::optional<PlayerId> RoundRobinResults::winner(PlayerId a, PlayerId b) const {
  const int w = winner_[static_cast<std::size_t>(index(a, b))];
  if (w == 0) return std::nullopt;
  return PlayerId(w);
}

std::vector<PlayerId> round_robin(const RoundRobinResults& results) {
  const int n = results.player_count();
  if (!results.complete()) {
    throw Error(ErrorCode::kIncompleteResults, "round robin results are incomplete");
  }
  std::vector<int> wins(static_cast<std::size_t>(n) + 1, 0);
  for (int a = 1; a <= n; ++a) {
    for (int b = a + 1; b <= n; ++b) ++wins[static_cast<std::size_t>(results.winner(PlayerId(a), PlayerId(b))->seed)];
  }

  std::vector<PlayerId> order;
  for (int s = 1; s <= n; ++s) order.emplace_back(s);
  std::stable_sort(order.begin(), order.end(), [&](PlayerId x, PlayerId y) {
    return wins[static_cast<std::size_t>(x.seed)] > wins[static_cast<std::size_t>(y.seed)];
  });

  // Break each level group by results among its own members, then by seed.
  for (auto first = order.begin(); first != order.end();) {
    const int level = wins[static_cast<std::size_t>(first->seed)];
    auto last = std::find_if(first, order.end(),
                             [&](PlayerId p) { return wins[static_cast<std::size_t>(p.seed)] != level; });
    if (std::distance(first, last) > 1) {
      std::vector<int> group_wins(static_cast<std::size_t>(n) + 1, 0);
      for (auto i = first; i != last; ++i) {
        for (auto j = std::next(i); j != last; ++j) ++group_wins[static_cast<std::size_t>(results.winner(*i, *j)->seed)];
      }
      std::sort(first, last, [&](PlayerId x, PlayerId y) {
        const int gx = group_wins[static_cast<std::size_t>(x.seed)];
        const int gy = group_wins[static_cast<std::size_t>(y.seed)];
        return gx != gy ? gx > gy : x < y;
      });
    }
    first = last;
  }
  return order;
}

std::vector<std::vector<Pairing>> round_robin_schedule(int player_count) {
  if (player_count < 2) throw Error(ErrorCode::kInvalidFormatParameters, "round robin needs at least 2 players");
  // Seed 0 stands in for the bye when the field is odd.
  std::vector<int> ring;
  for (int s = 1; s <= player_count; ++s) ring.push_back(s);
  if (player_count % 2 != 0) ring.push_back(0);
  const int size = static_cast<int>(ring.size());

  std::vector<std::vector<Pairing>> rounds;
  for (int r = 0; r < size - 1; ++r) {
    std::vector<Pairing> round;
    for (int i = 0; i < size / 2; ++i) {
      const int a = ring[static_cast<std::size_t>(i)];
      const int b = ring[static_cast<std::size_t>(size - 1 - i)];
      if (a == 0 || b == 0) continue;
      round.push_back({PlayerId(std::min(a, b)), PlayerId(std::max(a, b))});
    }
    rounds.push_back(std::move(round));
    std::rotate(ring.begin() + 1, ring.end() - 1, ring.end());
  }
  return rounds;
}

nlohmann::json round_robin_to_json(const RoundRobinResults& results) {
  nlohmann::json rounds = nlohmann::json::array();
  const auto schedule = round_robin_schedule(results.player_count());
  for (std::size_t r = 0; r < schedule.size(); ++r) {
    std::vector<std::string> outcomes;
    for (const auto& p : schedule[r]) {
      const auto w = results.winner(p.high, p.low);
      outcomes.push_back(!w ? "?" : (*w == p.high ? "W" : "L"));
    }
    rounds.push_back({{"round", static_cast<int>(r)},
                      {"pairings", pairings_to_json(schedule[r])},
                      {"results", outcomes}});
  }
  nlohmann::json out = {
      {"format", to_string(FormatKind::kRoundRobin)},
      {"config", {{"players", results.player_count()}}},
      {"rounds", std::move(rounds)},
      {"status", results.complete() ? "completed" : "in-progress"},
  };
  if (results.complete()) {
    std::vector<int> ranking;
    for (auto p : round_robin(results)) ranking.push_back(p.seed);
    out["ranking"] = ranking;
  }
  return out;
}

}  // namespace linelim
