#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "linelim/engine.hpp"

namespace linelim::app {

/// Human-readable summary of a tournament: schedule, every round's
/// eliminations and, once finished, the champion and final ranking.
std::string render_report(const TournamentState& st);

/// Same content as render_report() as a JSON object.
nlohmann::json report_json(const TournamentState& st);

}  // namespace linelim::app
