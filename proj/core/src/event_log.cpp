#include "linelim/event_log.hpp"

#include <fstream>
#include <string>

#include "linelim/error.hpp"

namespace linelim {

namespace {

using nlohmann::json;

std::vector<int> seeds_of(std::span<const PlayerId> players) {
  std::vector<int> out;
  out.reserve(players.size());
  for (auto p : players) out.push_back(p.seed);
  return out;
}

const json& require(const json& obj, const char* key) {
  if (!obj.is_object() || !obj.contains(key)) {
    throw Error(ErrorCode::kMalformedLog, std::string("event log is missing \"") + key + "\"");
  }
  return obj.at(key);
}

template <typename T>
T read_as(const json& value, const std::string& what) {
  try {
    return value.get<T>();
  } catch (const json::exception& e) {
    throw Error(ErrorCode::kMalformedLog, what + ": " + e.what());
  }
}

void expect_equal(const json& logged, const json& replayed, const std::string& what) {
  if (logged != replayed) {
    throw Error(ErrorCode::kReplayMismatch,
                what + " differs: logged " + logged.dump() + ", replay gives " + replayed.dump());
  }
}

}  // namespace

json config_to_json(const Config& cfg) {
  return {{"players", cfg.player_count}, {"rounds", cfg.round_count}, {"rerank_passes", cfg.rerank_passes}};
}

json pairings_to_json(std::span<const Pairing> pairs) {
  json out = json::array();
  for (const auto& p : pairs) out.push_back({p.high.seed, p.low.seed});
  return out;
}

json round_to_json(const RoundRecord& record) {
  return {
      {"round", record.round},
      {"pairings", pairings_to_json(record.pairings)},
      {"results", record.results.to_tokens()},
      {"standings", record.standings.seeds()},
      {"eliminated", seeds_of(record.eliminated)},
  };
}

json to_event_log(const TournamentState& st) {
  json rounds = json::array();
  for (const auto& r : st.history()) rounds.push_back(round_to_json(r));
  return {
      {"format", kLinearEliminationFormat},
      {"config", config_to_json(st.config())},
      {"schedule", st.schedule().counts},
      {"rounds", std::move(rounds)},
      {"status", st.completed() ? "completed" : "in-progress"},
      {"champion", st.champion() ? json(st.champion()->seed) : json(nullptr)},
  };
}

TournamentState replay_event_log(const json& log) {
  if (!log.is_object()) throw Error(ErrorCode::kMalformedLog, "event log must be a JSON object");
  if (log.contains("format") && log.at("format") != kLinearEliminationFormat) {
    throw Error(ErrorCode::kMalformedLog, "unsupported format " + log.at("format").dump());
  }
  const json& cfg_json = require(log, "config");
  const int players = read_as<int>(require(cfg_json, "players"), "config.players");
  const int rounds = read_as<int>(require(cfg_json, "rounds"), "config.rounds");
  const int passes = cfg_json.contains("rerank_passes")
                         ? read_as<int>(cfg_json.at("rerank_passes"), "config.rerank_passes")
                         : 1;

  TournamentState st = TournamentState::start(Config{players, rounds, passes});
  if (log.contains("schedule")) expect_equal(log.at("schedule"), json(st.schedule().counts), "schedule");

  const json& logged_rounds = require(log, "rounds");
  if (!logged_rounds.is_array()) throw Error(ErrorCode::kMalformedLog, "\"rounds\" must be an array");

  for (std::size_t i = 0; i < logged_rounds.size(); ++i) {
    const json& entry = logged_rounds[i];
    const std::string where = "round " + std::to_string(i);
    if (entry.contains("round") && read_as<int>(entry.at("round"), where + ".round") != static_cast<int>(i)) {
      throw Error(ErrorCode::kMalformedLog, where + " is out of sequence");
    }
    const auto tokens = read_as<std::vector<std::string>>(require(entry, "results"), where + ".results");
    st = apply_results(st, ResultVector::from_tokens(tokens));

    const json replayed = round_to_json(st.history().back());
    for (const char* key : {"pairings", "standings", "eliminated"}) {
      if (entry.contains(key)) expect_equal(entry.at(key), replayed.at(key), where + " " + key);
    }
  }
  if (log.contains("champion") && !log.at("champion").is_null()) {
    expect_equal(log.at("champion"), st.champion() ? json(st.champion()->seed) : json(nullptr), "champion");
  }
  return st;
}

json state_to_json(const TournamentState& st) {
  json history = json::array();
  for (const auto& r : st.history()) history.push_back(round_to_json(r));
  json out = {
      {"config", config_to_json(st.config())},
      {"schedule", st.schedule().counts},
      {"round", st.round()},
      {"status", st.completed() ? "completed" : "in-progress"},
      {"standings", st.standings().seeds()},
      {"champion", st.champion() ? json(st.champion()->seed) : json(nullptr)},
      {"history", std::move(history)},
  };
  out["pairings"] = st.completed() ? json::array() : pairings_to_json(pair_round(st));
  return out;
}

void write_json_file(const std::filesystem::path& path, const json& doc) {
  const auto tmp = std::filesystem::path(path).concat(".tmp");
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) throw Error(ErrorCode::kInvalidArgument, "cannot write " + tmp.string());
    out << doc.dump(2) << '\n';
    if (!out) throw Error(ErrorCode::kInvalidArgument, "write failed for " + tmp.string());
  }
  std::filesystem::rename(tmp, path);
}

json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kInvalidArgument, "cannot open " + path.string());
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::kMalformedLog, path.string() + ": " + e.what());
  }
}

}  // namespace linelim
