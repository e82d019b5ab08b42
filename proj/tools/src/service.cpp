#include "linelim/app/service.hpp"

#include <httplib.h>

#include <chrono>
#include <ctime>
#include <iostream>
#include <random>

#include "linelim/error.hpp"
#include "linelim/event_log.hpp"

namespace linelim::app {
namespace {

using nlohmann::json;

constexpr int kBadRequest = 400;
constexpr int kNotFound = 404;
constexpr int kConflict = 409;
constexpr int kUnprocessable = 422;
constexpr int kServerError = 500;

ApiResponse failure(int status, std::string_view code, const std::string& message) {
  return {status, {{"error", {{"code", code}, {"message", message}}}}};
}

ApiResponse failure(int status, const Error& e) { return failure(status, to_string(e.code()), e.what()); }

ApiResponse unknown_id(const std::string& id) { return failure(kNotFound, "NotFound", "no tournament \"" + id + "\""); }

std::string utc_now() {
  const auto now = std::chrono::system_clock::now();
  const std::time_t t = std::chrono::system_clock::to_time_t(now);
  const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(now.time_since_epoch()).count() % 1000;
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[64];
  std::snprintf(buf, sizeof buf, "%04d-%02d-%02dT%02d:%02d:%02d.%03dZ", tm.tm_year + 1900, tm.tm_mon + 1, tm.tm_mday,
                tm.tm_hour, tm.tm_min, tm.tm_sec, static_cast<int>(ms));
  return buf;
}

std::vector<int> seeds_of(std::span<const PlayerId> players) {
  std::vector<int> out;
  for (auto p : players) out.push_back(p.seed);
  return out;
}

std::optional<json> parse_body(const std::string& body) {
  json j = json::parse(body, nullptr, false);
  if (j.is_discarded() || !j.is_object()) return std::nullopt;
  return j;
}

// First integer field present among `keys`.
std::optional<int> int_field(const json& j, std::initializer_list<const char*> keys) {
  for (const char* k : keys) {
    auto it = j.find(k);
    if (it != j.end()) {
      if (!it->is_number_integer()) return std::nullopt;
      return it->get<int>();
    }
  }
  return std::nullopt;
}

ResultVector parse_results(const json& j) {
  auto it = j.find("results");
  if (it == j.end()) throw Error(ErrorCode::kInvalidResultVector, "body needs a \"results\" field");
  if (it->is_string()) return ResultVector::parse(it->get<std::string>());
  if (!it->is_array()) throw Error(ErrorCode::kInvalidResultVector, "\"results\" must be an array of \"W\"/\"L\"");
  std::vector<std::string> tokens;
  for (const auto& t : *it) {
    if (!t.is_string()) throw Error(ErrorCode::kInvalidResultVector, "\"results\" must be an array of \"W\"/\"L\"");
    tokens.push_back(t.get<std::string>());
  }
  return ResultVector::from_tokens(tokens);
}

}  // namespace

std::shared_ptr<const TournamentState> TournamentService::Entry::load() const {
  std::lock_guard lock(snapshot_mutex);
  return state;
}

TournamentService::TournamentService(std::filesystem::path data_dir) : data_dir_(std::move(data_dir)) {
  id_salt_ = (static_cast<std::uint64_t>(std::random_device{}()) << 32) ^ std::random_device{}();
  if (!data_dir_.empty()) {
    std::filesystem::create_directories(data_dir_);
    load_directory();
  }
}

void TournamentService::load_directory() {
  for (const auto& file : std::filesystem::directory_iterator(data_dir_)) {
    if (!file.is_regular_file() || file.path().extension() != ".json") continue;
    try {
      const json doc = read_json_file(file.path());
      auto entry = std::make_shared<Entry>();
      entry->id = doc.value("id", file.path().stem().string());
      entry->created = doc.value("created", utc_now());
      entry->updated = doc.value("updated", entry->created);
      entry->state = std::make_shared<const TournamentState>(replay_event_log(doc));
      entries_.emplace(entry->id, std::move(entry));
    } catch (const std::exception& e) {
      std::cerr << "skipping " << file.path().string() << ": " << e.what() << '\n';
    }
  }
}

std::shared_ptr<TournamentService::Entry> TournamentService::find(const std::string& id) const {
  std::shared_lock lock(entries_mutex_);
  auto it = entries_.find(id);
  return it == entries_.end() ? nullptr : it->second;
}

// Called with entries_mutex_ held exclusively.
std::string TournamentService::next_id() {
  for (;;) {
    std::uint64_t z = id_salt_ + 0x9e3779b97f4a7c15ULL * ++id_counter_;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    z ^= z >> 31;
    char buf[17];
    std::snprintf(buf, sizeof buf, "%012llx", static_cast<unsigned long long>(z & 0xffffffffffffULL));
    std::string id = std::string("t") + buf;
    if (!entries_.contains(id)) return id;
  }
}

void TournamentService::persist(const Entry& entry, const TournamentState& st, const std::string& updated) const {
  if (data_dir_.empty()) return;
  json doc = to_event_log(st);
  doc["id"] = entry.id;
  doc["created"] = entry.created;
  doc["updated"] = updated;
  write_json_file(data_dir_ / (entry.id + ".json"), doc);
}

ApiResponse TournamentService::create(const std::string& body) {
  const auto j = parse_body(body);
  if (!j) return failure(kBadRequest, "BadRequest", "body must be a JSON object");
  const auto n = int_field(*j, {"N", "players"});
  const auto m = int_field(*j, {"M", "rounds"});
  if (!n || !m) return failure(kUnprocessable, "InvalidConfig", "body needs integer fields \"N\" and \"M\"");
  const int passes = int_field(*j, {"passes", "rerank_passes"}).value_or(1);

  std::shared_ptr<const TournamentState> st;
  try {
    st = std::make_shared<const TournamentState>(TournamentState::start(validate_config(*n, *m, passes)));
  } catch (const Error& e) {
    return failure(kUnprocessable, e);
  }

  auto entry = std::make_shared<Entry>();
  entry->created = entry->updated = utc_now();
  entry->state = st;
  {
    std::unique_lock lock(entries_mutex_);
    entry->id = next_id();
    try {
      persist(*entry, *st, entry->updated);
    } catch (const std::exception& e) {
      return failure(kServerError, "StorageError", e.what());
    }
    entries_.emplace(entry->id, entry);
  }
  return {201,
          {{"id", entry->id},
           {"config", config_to_json(st->config())},
           {"schedule", st->schedule().counts},
           {"round", 0},
           {"pairings", pairings_to_json(pair_round(*st))}}};
}

ApiResponse TournamentService::list() const {
  json out = json::array();
  std::shared_lock lock(entries_mutex_);
  for (const auto& [id, entry] : entries_) {
    const auto st = entry->load();
    out.push_back({{"id", id},
                   {"players", st->config().player_count},
                   {"rounds", st->config().round_count},
                   {"round", st->round()},
                   {"status", st->completed() ? "completed" : "in-progress"}});
  }
  return {200, {{"tournaments", std::move(out)}}};
}

ApiResponse TournamentService::get(const std::string& id) const {
  const auto entry = find(id);
  if (!entry) return unknown_id(id);
  std::string updated;
  std::shared_ptr<const TournamentState> st;
  {
    std::lock_guard lock(entry->snapshot_mutex);
    st = entry->state;
    updated = entry->updated;
  }
  json out = state_to_json(*st);
  out["id"] = id;
  out["created"] = entry->created;
  out["updated"] = updated;
  return {200, std::move(out)};
}

ApiResponse TournamentService::pairings(const std::string& id) const {
  const auto entry = find(id);
  if (!entry) return unknown_id(id);
  const auto st = entry->load();
  json out = {{"id", id},
              {"round", st->round()},
              {"status", st->completed() ? "completed" : "in-progress"},
              {"standings", st->standings().seeds()},
              {"pairings", json::array()}};
  if (!st->completed()) out["pairings"] = pairings_to_json(pair_round(*st));
  return {200, std::move(out)};
}

ApiResponse TournamentService::submit_results(const std::string& id, const std::string& round,
                                              const std::string& body) {
  const auto entry = find(id);
  if (!entry) return unknown_id(id);
  int t = -1;
  try {
    std::size_t used = 0;
    t = std::stoi(round, &used);
    if (used != round.size()) t = -1;
  } catch (const std::exception&) {
    t = -1;
  }
  if (t < 0) return failure(kNotFound, "NotFound", "round must be a nonnegative integer");
  const auto j = parse_body(body);
  if (!j) return failure(kBadRequest, "BadRequest", "body must be a JSON object");

  std::lock_guard write(entry->write_mutex);
  const auto current = entry->load();
  if (current->completed()) {
    return failure(kConflict, "TournamentComplete", "tournament already has a champion");
  }
  if (t != current->round()) {
    return failure(kConflict, "StaleRound",
                   "round " + std::to_string(t) + " is not open; current round is " + std::to_string(current->round()));
  }
  std::shared_ptr<const TournamentState> next;
  try {
    next = std::make_shared<const TournamentState>(apply_results(*current, parse_results(*j)));
  } catch (const Error& e) {
    return failure(kUnprocessable, e);
  }
  const std::string updated = utc_now();
  try {
    persist(*entry, *next, updated);
  } catch (const std::exception& e) {
    return failure(kServerError, "StorageError", e.what());
  }
  {
    std::lock_guard lock(entry->snapshot_mutex);
    entry->state = next;
    entry->updated = updated;
  }

  const auto& rec = next->history().back();
  json out = {{"id", id},
              {"round", rec.round},
              {"results", rec.results.to_tokens()},
              {"standings", rec.standings.seeds()},
              {"eliminated", seeds_of(rec.eliminated)},
              {"remaining", next->standings().seeds()},
              {"status", next->completed() ? "completed" : "in-progress"}};
  if (next->completed()) {
    out["champion"] = next->champion()->seed;
    out["ranking"] = seeds_of(final_ranking(*next));
  } else {
    out["nextRound"] = next->round();
    out["nextPairings"] = pairings_to_json(pair_round(*next));
  }
  return {200, std::move(out)};
}

ApiResponse TournamentService::history(const std::string& id) const {
  const auto entry = find(id);
  if (!entry) return unknown_id(id);
  const auto st = entry->load();
  json rounds = json::array();
  for (const auto& rec : st->history()) rounds.push_back(round_to_json(rec));
  return {200, {{"id", id}, {"rounds", std::move(rounds)}}};
}

std::optional<TournamentState> TournamentService::snapshot(const std::string& id) const {
  const auto entry = find(id);
  if (!entry) return std::nullopt;
  return *entry->load();
}

std::size_t TournamentService::size() const {
  std::shared_lock lock(entries_mutex_);
  return entries_.size();
}

void mount_routes(httplib::Server& server, TournamentService& service) {
  auto reply = [](httplib::Response& res, const ApiResponse& r) {
    res.status = r.status;
    res.set_content(r.body.dump(), "application/json");
  };

  server.set_default_headers({{"Access-Control-Allow-Origin", "*"},
                              {"Access-Control-Allow-Headers", "Content-Type"},
                              {"Access-Control-Allow-Methods", "GET, POST, OPTIONS"}});
  server.Options(R"(/.*)", [](const httplib::Request&, httplib::Response& res) { res.status = 204; });

  server.Post("/tournaments", [&service, reply](const httplib::Request& req, httplib::Response& res) {
    reply(res, service.create(req.body));
  });
  server.Get("/tournaments", [&service, reply](const httplib::Request&, httplib::Response& res) {
    reply(res, service.list());
  });
  server.Get(R"(/tournaments/([^/]+))", [&service, reply](const httplib::Request& req, httplib::Response& res) {
    reply(res, service.get(req.matches[1]));
  });
  server.Get(R"(/tournaments/([^/]+)/pairings)",
             [&service, reply](const httplib::Request& req, httplib::Response& res) {
               reply(res, service.pairings(req.matches[1]));
             });
  server.Get(R"(/tournaments/([^/]+)/history)",
             [&service, reply](const httplib::Request& req, httplib::Response& res) {
               reply(res, service.history(req.matches[1]));
             });
  server.Post(R"(/tournaments/([^/]+)/rounds/([^/]+)/results)",
              [&service, reply](const httplib::Request& req, httplib::Response& res) {
                reply(res, service.submit_results(req.matches[1], req.matches[2], req.body));
              });

  server.set_error_handler([](const httplib::Request& req, httplib::Response& res) {
    if (!res.body.empty()) return httplib::Server::HandlerResponse::Unhandled;
    res.set_content(json{{"error", {{"code", "NotFound"}, {"message", "no route for " + req.path}}}}.dump(),
                    "application/json");
    return httplib::Server::HandlerResponse::Handled;
  });
  server.set_exception_handler([](const httplib::Request&, httplib::Response& res, std::exception_ptr ep) {
    std::string message = "internal error";
    try {
      std::rethrow_exception(ep);
    } catch (const std::exception& e) {
      message = e.what();
    } catch (...) {
    }
    res.status = kServerError;
    res.set_content(json{{"error", {{"code", "InternalError"}, {"message", message}}}}.dump(), "application/json");
  });
}

}  // namespace linelim::app
