#pragma once

// JSON event log for a linear elimination tournament. The log holds the
// config, the schedule and one record per played round; tournament state is
// reconstructed by replaying the logged result vectors.
//
//   {
//     "format": "linear-elimination",
//     "config": {"players": 6, "rounds": 3, "rerank_passes": 1},
//     "schedule": [6, 4, 2],
//     "rounds": [
//       {"round": 0, "pairings": [[1, 6], [2, 5], [3, 4]],
//        "results": ["W", "W", "W", "L", "L", "L"],
//        "standings": [1, 2, 3, 4, 5, 6], "eliminated": [5, 6]}
//     ],
//     "status": "in-progress",
//     "champion": null
//   }
//
// Standings are in order form (seeds by rank). Unknown top-level keys are
// ignored on replay.

#include <filesystem>

#include <nlohmann/json.hpp>

#include "linelim/engine.hpp"

namespace linelim {

inline constexpr const char* kLinearEliminationFormat = "linear-elimination";

nlohmann::json config_to_json(const Config& cfg);
nlohmann::json pairings_to_json(std::span<const Pairing> pairs);
nlohmann::json round_to_json(const RoundRecord& record);

nlohmann::json to_event_log(const TournamentState& st);

/// Replays the logged results from a fresh start. Recorded pairings,
/// standings, eliminations and schedule, when present, must agree with the
/// replay or kReplayMismatch is thrown; structural problems raise
/// kMalformedLog.
TournamentState replay_event_log(const nlohmann::json& log);

/// Current snapshot: config, schedule, round, status, standings, next
/// pairings (while in progress) and full history.
nlohmann::json state_to_json(const TournamentState& st);

void write_json_file(const std::filesystem::path& path, const nlohmann::json& doc);
nlohmann::json read_json_file(const std::filesystem::path& path);

}  // namespace linelim
