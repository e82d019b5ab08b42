#include "linelim/engine.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "linelim/error.hpp"
#include "linelim/rerank.hpp"

namespace linelim {

TournamentState TournamentState::start(const Config& cfg) {
  TournamentState st;
  st.config_ = validate_config(cfg.player_count, cfg.round_count, cfg.rerank_passes);
  st.schedule_ = build_schedule(st.config_);
  st.standings_ = Standings::initial(cfg.player_count);
  return st;
}

std::vector<Pairing> pair_round(const TournamentState& st) {
  if (st.completed()) throw Error(ErrorCode::kTournamentComplete, "tournament already has a champion");
  const Standings& s = st.standings();
  const int n = s.size();
  std::vector<Pairing> pairs;
  pairs.reserve(static_cast<std::size_t>(n / 2));
  for (int i = 1; i <= n / 2; ++i) pairs.push_back({s.at_rank(i), s.at_rank(n + 1 - i)});
  return pairs;
}

TournamentState apply_results(const TournamentState& st, const ResultVector& results) {
  if (st.completed()) throw Error(ErrorCode::kTournamentComplete, "tournament already has a champion");
  const int n_t = st.active_count();
  const int t = st.round();
  if (results.size() != n_t) {
    throw Error(ErrorCode::kBadResultLength, "round " + std::to_string(t) + " expects " +
                                                 std::to_string(n_t) + " results, got " +
                                                 std::to_string(results.size()));
  }

  const Permutation order = rerank(results, st.config().rerank_passes);
  Standings reranked = st.standings().apply(order);

  const int to_remove = st.schedule().eliminated_after(t);
  if (to_remove > n_t / 2) {
    throw std::logic_error("schedule removes more players than lost in round " + std::to_string(t));
  }
  // Walk up from the bottom of the new standings, collecting losers.
  std::vector<PlayerId> eliminated;
  for (int new_rank = n_t; new_rank >= 1 && static_cast<int>(eliminated.size()) < to_remove; --new_rank) {
    const int prev_rank = order[static_cast<std::size_t>(new_rank - 1)];
    if (!results.won(prev_rank)) eliminated.push_back(reranked.at_rank(new_rank));
  }
  std::reverse(eliminated.begin(), eliminated.end());

  RoundRecord record{t, pair_round(st), results, std::move(reranked), std::move(eliminated)};

  TournamentState next = st;
  next.standings_ = record.standings.without(record.eliminated);
  if (next.standings_.size() != st.schedule().counts[static_cast<std::size_t>(t)] - to_remove) {
    throw std::logic_error("active count diverged from schedule");
  }
  if (t + 1 == st.schedule().rounds()) {
    const PlayerId winner = next.standings_.at_rank(1);
    if (!results.won(st.standings().rank_of(winner))) {
      throw std::logic_error("post-final rank 1 did not win the final");
    }
    next.champion_ = winner;
  }
  next.history_.push_back(std::move(record));
  return next;
}

TournamentState run_tournament(const Config& cfg, const ResultProvider& provider) {
  TournamentState st = TournamentState::start(cfg);
  while (!st.completed()) {
    const auto pairs = pair_round(st);
    st = apply_results(st, provider(st, pairs));
  }
  return st;
}

std::vector<PlayerId> final_ranking(const TournamentState& st) {
  if (!st.completed()) {
    throw Error(ErrorCode::kTournamentInProgress, "final ranking needs a completed tournament");
  }
  std::vector<PlayerId> out(st.standings().order().begin(), st.standings().order().end());
  const auto history = st.history();
  for (auto it = history.rbegin(); it != history.rend(); ++it) {
    out.insert(out.end(), it->eliminated.begin(), it->eliminated.end());
  }
  return out;
}

}  // namespace linelim
