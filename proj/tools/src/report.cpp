#include "linelim/app/report.hpp"

#include <sstream>

namespace linelim::app {
namespace {

void join(std::ostream& os, std::span<const int> xs, const char* sep) {
  for (std::size_t i = 0; i < xs.size(); ++i) os << (i ? sep : "") << xs[i];
}

std::vector<int> seeds_of(std::span<const PlayerId> players) {
  std::vector<int> out;
  out.reserve(players.size());
  for (auto p : players) out.push_back(p.seed);
  return out;
}

}  // namespace

std::string render_report(const TournamentState& st) {
  std::ostringstream os;
  const auto& cfg = st.config();
  os << "linear elimination: " << cfg.player_count << " players, " << cfg.round_count << " rounds";
  if (cfg.rerank_passes != 1) os << ", " << cfg.rerank_passes << " rerank passes";
  os << "\nschedule: ";
  join(os, st.schedule().counts, " ");
  os << '\n';
  for (const auto& rec : st.history()) {
    os << "round " << rec.round << ": " << rec.results.to_string() << "  standings ";
    join(os, rec.standings.seeds(), " ");
    if (!rec.eliminated.empty()) {
      os << "  eliminated ";
      join(os, seeds_of(rec.eliminated), " ");
    }
    os << '\n';
  }
  if (st.completed()) {
    os << "champion: " << st.champion()->seed << "\nranking: ";
    join(os, seeds_of(final_ranking(st)), " ");
    os << '\n';
  } else {
    os << "in progress after " << st.round() << " of " << cfg.round_count << " rounds\n";
  }
  return os.str();
}

nlohmann::json report_json(const TournamentState& st) {
  nlohmann::json rounds = nlohmann::json::array();
  for (const auto& rec : st.history()) {
    rounds.push_back({{"round", rec.round},
                      {"results", rec.results.to_string()},
                      {"standings", rec.standings.seeds()},
                      {"eliminated", seeds_of(rec.eliminated)}});
  }
  nlohmann::json out = {
      {"players", st.config().player_count},
      {"rounds", st.config().round_count},
      {"rerank_passes", st.config().rerank_passes},
      {"schedule", st.schedule().counts},
      {"played", std::move(rounds)},
      {"status", st.completed() ? "completed" : "in-progress"},
      {"champion", nullptr},
  };
  if (st.completed()) {
    out["champion"] = st.champion()->seed;
    out["ranking"] = seeds_of(final_ranking(st));
  }
  return out;
}

}  // namespace linelim::app
