#pragma once

// Tournament store and HTTP+JSON API.
//
//   POST /tournaments                          {"N": 6, "M": 3}
//   GET  /tournaments
//   GET  /tournaments/{id}
//   GET  /tournaments/{id}/pairings
//   POST /tournaments/{id}/rounds/{t}/results  {"results": ["W", "L", ...]}
//   GET  /tournaments/{id}/history
//
// Each tournament is persisted as its event log, with id and timestamps added,
// in <data-dir>/<id>.json. Submissions to one tournament are serialized and
// checked against the current round index; reads work on immutable
// snapshots.

#include <filesystem>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <string>

#include <nlohmann/json.hpp>

#include "linelim/engine.hpp"

namespace httplib {
class Server;
}

namespace linelim::app {

struct ApiResponse {
  int status = 200;
  nlohmann::json body;
};

class TournamentService {
 public:
  /// An empty `data_dir` keeps everything in memory. Otherwise the directory
  /// is created if needed and every *.json tournament file in it is loaded.
  explicit TournamentService(std::filesystem::path data_dir = {});

  ApiResponse create(const std::string& body);
  ApiResponse list() const;
  ApiResponse get(const std::string& id) const;
  ApiResponse pairings(const std::string& id) const;
  ApiResponse submit_results(const std::string& id, const std::string& round, const std::string& body);
  ApiResponse history(const std::string& id) const;

  /// Current snapshot, or nullopt for an unknown id.
  std::optional<TournamentState> snapshot(const std::string& id) const;
  std::size_t size() const;

 private:
  struct Entry {
    std::string id;
    std::string created;
    mutable std::mutex write_mutex;  // serializes submissions
    mutable std::mutex snapshot_mutex;
    std::shared_ptr<const TournamentState> state;
    std::string updated;

    std::shared_ptr<const TournamentState> load() const;
  };

  std::shared_ptr<Entry> find(const std::string& id) const;
  std::string next_id();
  void persist(const Entry& entry, const TournamentState& st, const std::string& updated) const;
  void load_directory();

  std::filesystem::path data_dir_;
  mutable std::shared_mutex entries_mutex_;
  std::map<std::string, std::shared_ptr<Entry>> entries_;
  std::uint64_t id_counter_ = 0;
  std::uint64_t id_salt_ = 0;
};

/// Registers the API routes on `server`. The service must outlive it.
void mount_routes(httplib::Server& server, TournamentService& service);

}  // namespace linelim::app
