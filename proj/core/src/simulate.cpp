#include "linelim/simulate.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <mutex>
#include <sstream>
#include <thread>
#include <unordered_map>

#include "linelim/engine.hpp"
#include "linelim/error.hpp"

namespace linelim {

std::string_view to_string(WinRule rule) noexcept {
  return rule == WinRule::kBradleyTerry ? "bradley-terry" : "deterministic";
}

WinRule parse_win_rule(std::string_view name) {
  if (name == "bradley-terry" || name == "bt") return WinRule::kBradleyTerry;
  if (name == "deterministic" || name == "det") return WinRule::kDeterministic;
  throw Error(ErrorCode::kInvalidFormatParameters, "unknown strength model \"" + std::string(name) + "\"");
}

StrengthModel harmonic_model(int player_count, WinRule rule) {
  StrengthModel model;
  model.rule = rule;
  for (int i = 1; i <= player_count; ++i) model.strengths.push_back(1.0 / i);
  return model;
}

void validate_model(const StrengthModel& model) {
  for (double s : model.strengths) {
    if (!(s > 0.0) || !std::isfinite(s)) {
      throw Error(ErrorCode::kInvalidFormatParameters, "strengths must be positive and finite");
    }
  }
  if (model.rule == WinRule::kDeterministic) {
    auto sorted = model.strengths;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
      throw Error(ErrorCode::kEqualStrengthsUnderDeterministic,
                  "deterministic rule needs pairwise distinct strengths");
    }
  }
}

double win_prob(const StrengthModel& model, int i, int j) {
  if (i == j) throw Error(ErrorCode::kInvalidArgument, "a player cannot meet itself");
  if (i < 1 || j < 1 || i > model.size() || j > model.size()) {
    throw Error(ErrorCode::kInvalidArgument, "player identity out of range");
  }
  const double si = model.strengths[static_cast<std::size_t>(i - 1)];
  const double sj = model.strengths[static_cast<std::size_t>(j - 1)];
  if (model.rule == WinRule::kDeterministic) {
    if (si == sj) {
      throw Error(ErrorCode::kEqualStrengthsUnderDeterministic, "equal strengths under deterministic rule");
    }
    return si > sj ? 1.0 : 0.0;
  }
  return si / (si + sj);
}

std::vector<int> true_order(const StrengthModel& model) {
  std::vector<int> ids(static_cast<std::size_t>(model.size()));
  std::iota(ids.begin(), ids.end(), 1);
  std::stable_sort(ids.begin(), ids.end(), [&](int a, int b) {
    return model.strengths[static_cast<std::size_t>(a - 1)] > model.strengths[static_cast<std::size_t>(b - 1)];
  });
  return ids;
}

std::string to_string(const Seeding& seeding) {
  switch (seeding.kind) {
    case Seeding::Kind::kTrueOrder: return "true-order";
    case Seeding::Kind::kRandom: return "random";
    case Seeding::Kind::kNoisy: {
      std::ostringstream os;
      os << "noisy(" << seeding.sigma << ")";
      return os.str();
    }
  }
  return "unknown";
}

Seeding parse_seeding(std::string_view name, double sigma) {
  if (name == "true-order" || name == "true") return Seeding::true_order();
  if (name == "random") return Seeding::random();
  if (name == "noisy") {
    if (!(sigma >= 0.0)) throw Error(ErrorCode::kInvalidFormatParameters, "noise sigma must be nonnegative");
    return Seeding::noisy(sigma);
  }
  throw Error(ErrorCode::kInvalidFormatParameters, "unknown seeding \"" + std::string(name) + "\"");
}

double kendall_tau(std::span<const int> a, std::span<const int> b) {
  if (a.size() != b.size()) throw Error(ErrorCode::kMismatchedSets, "rankings have different lengths");
  if (a.size() < 2) throw Error(ErrorCode::kInvalidArgument, "kendall tau needs at least two items");
  std::unordered_map<int, std::size_t> pos_in_b;
  for (std::size_t i = 0; i < b.size(); ++i) {
    if (!pos_in_b.emplace(b[i], i).second) throw Error(ErrorCode::kMismatchedSets, "duplicate item in ranking");
  }
  std::vector<std::size_t> mapped;
  mapped.reserve(a.size());
  for (int item : a) {
    auto it = pos_in_b.find(item);
    if (it == pos_in_b.end()) throw Error(ErrorCode::kMismatchedSets, "rankings cover different items");
    mapped.push_back(it->second);
  }
  {
    auto check = mapped;
    std::sort(check.begin(), check.end());
    if (std::adjacent_find(check.begin(), check.end()) != check.end()) {
      throw Error(ErrorCode::kMismatchedSets, "duplicate item in ranking");
    }
  }
  long long concordant = 0;
  long long discordant = 0;
  for (std::size_t i = 0; i < mapped.size(); ++i) {
    for (std::size_t j = i + 1; j < mapped.size(); ++j) {
      (mapped[i] < mapped[j] ? concordant : discordant) += 1;
    }
  }
  const double pairs = static_cast<double>(a.size()) * static_cast<double>(a.size() - 1) / 2.0;
  return static_cast<double>(concordant - discordant) / pairs;
}

// ---------------------------------------------------------------------------

namespace {

PlayedTournament play_linear(const FormatDescriptor& format, const MatchFn& match) {
  const Config cfg{format.player_count, format.round_count, format.rerank_passes};
  const auto st = run_tournament(cfg, [&](const TournamentState& state, std::span<const Pairing> pairs) {
    const int n = state.active_count();
    std::vector<Outcome> b(static_cast<std::size_t>(n));
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      const bool high_won = match(pairs[i].high.seed, pairs[i].low.seed);
      b[i] = high_won ? Outcome::kWin : Outcome::kLoss;
      b[static_cast<std::size_t>(n) - 1 - i] = opposite(b[i]);
    }
    return ResultVector(std::move(b));
  });
  PlayedTournament out;
  out.champion_seed = st.champion()->seed;
  for (auto p : final_ranking(st)) out.ranking.push_back(p.seed);
  return out;
}

PlayedTournament play_single(const FormatDescriptor& format, const MatchFn& match) {
  auto st = BracketState::seeded(format.player_count);
  while (!st.completed()) {
    std::vector<Outcome> outcomes;
    for (const auto& p : bracket_pairings(st)) {
      outcomes.push_back(match(p.high.seed, p.low.seed) ? Outcome::kWin : Outcome::kLoss);
    }
    st = single_elim_round(st, outcomes);
  }
  PlayedTournament out;
  out.champion_seed = st.champion()->seed;
  for (auto p : single_elim_ranking(st)) out.ranking.push_back(p.seed);
  return out;
}

PlayedTournament play_round_robin(const FormatDescriptor& format, const MatchFn& match) {
  RoundRobinResults results(format.player_count);
  for (const auto& round : round_robin_schedule(format.player_count)) {
    for (const auto& p : round) {
      if (match(p.high.seed, p.low.seed)) {
        results.record(p.high, p.low);
      } else {
        results.record(p.low, p.high);
      }
    }
  }
  PlayedTournament out;
  for (auto p : round_robin(results)) out.ranking.push_back(p.seed);
  out.champion_seed = out.ranking.front();
  return out;
}

struct TrialResult {
  int champion_seed = 0;
  bool top1 = false;
  double tau = 0.0;
};

std::mt19937_64 trial_stream(std::uint64_t seed, std::uint64_t trial) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(trial), static_cast<std::uint32_t>(trial >> 32)};
  return std::mt19937_64(seq);
}

// identity_by_seed[s - 1] is the identity holding seed s.
std::vector<int> assign_seeds(const StrengthModel& model, const Seeding& seeding, std::mt19937_64& rng) {
  switch (seeding.kind) {
    case Seeding::Kind::kTrueOrder:
      return true_order(model);
    case Seeding::Kind::kRandom: {
      std::vector<int> ids(static_cast<std::size_t>(model.size()));
      std::iota(ids.begin(), ids.end(), 1);
      std::shuffle(ids.begin(), ids.end(), rng);
      return ids;
    }
    case Seeding::Kind::kNoisy: {
      StrengthModel perceived = model;
      std::normal_distribution<double> noise(0.0, seeding.sigma);
      for (auto& s : perceived.strengths) s += seeding.sigma > 0.0 ? noise(rng) : 0.0;
      return true_order(perceived);
    }
  }
  return {};
}

TrialResult run_trial(const FormatDescriptor& format, const StrengthModel& model, const Seeding& seeding,
                      const std::vector<int>& truth, std::uint64_t seed, std::uint64_t trial) {
  auto rng = trial_stream(seed, trial);
  const auto identity_by_seed = assign_seeds(model, seeding, rng);
  std::uniform_real_distribution<double> unit(0.0, 1.0);

  const MatchFn match = [&](int seed_a, int seed_b) {
    const double p = win_prob(model, identity_by_seed[static_cast<std::size_t>(seed_a - 1)],
                              identity_by_seed[static_cast<std::size_t>(seed_b - 1)]);
    if (p >= 1.0) return true;
    if (p <= 0.0) return false;
    return unit(rng) < p;
  };
  const auto played = play_format(format, match);

  std::vector<int> ranked_ids;
  ranked_ids.reserve(played.ranking.size());
  for (int s : played.ranking) ranked_ids.push_back(identity_by_seed[static_cast<std::size_t>(s - 1)]);

  TrialResult r;
  r.champion_seed = played.champion_seed;
  r.top1 = identity_by_seed[static_cast<std::size_t>(played.champion_seed - 1)] == truth.front();
  r.tau = kendall_tau(ranked_ids, truth);
  return r;
}

}  // namespace

PlayedTournament play_format(const FormatDescriptor& format, const MatchFn& match) {
  validate_format(format);
  switch (format.kind) {
    case FormatKind::kLinearElimination: return play_linear(format, match);
    case FormatKind::kSingleElimination: return play_single(format, match);
    case FormatKind::kRoundRobin: return play_round_robin(format, match);
  }
  throw Error(ErrorCode::kInvalidFormatParameters, "unknown format");
}

double SimulationReport::champion_rate(int s) const {
  if (s < 1 || static_cast<std::size_t>(s) > champion_counts.size() || trials == 0) return 0.0;
  return static_cast<double>(champion_counts[static_cast<std::size_t>(s - 1)]) / trials;
}

SimulationReport simulate(const FormatDescriptor& format, const StrengthModel& model,
                          const SimulationOptions& options) {
  validate_format(format);
  validate_model(model);
  if (options.trials < 1) throw Error(ErrorCode::kInvalidFormatParameters, "trial count must be at least 1");
  if (model.size() != format.player_count) {
    throw Error(ErrorCode::kInvalidFormatParameters, "strength model has " + std::to_string(model.size()) +
                                                         " players, format has " +
                                                         std::to_string(format.player_count));
  }
  if (options.seeding.kind == Seeding::Kind::kNoisy && !(options.seeding.sigma >= 0.0)) {
    throw Error(ErrorCode::kInvalidFormatParameters, "noise sigma must be nonnegative");
  }

  const auto truth = true_order(model);
  std::vector<TrialResult> results(static_cast<std::size_t>(options.trials));

  const int workers = std::clamp(options.threads, 1, options.trials);
  auto work = [&](int worker) {
    for (int t = worker; t < options.trials; t += workers) {
      results[static_cast<std::size_t>(t)] =
          run_trial(format, model, options.seeding, truth, options.seed, static_cast<std::uint64_t>(t));
    }
  };
  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    std::exception_ptr failure;
    std::mutex failure_mutex;
    for (int w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        try {
          work(w);
        } catch (...) {
          std::lock_guard lock(failure_mutex);
          if (!failure) failure = std::current_exception();
        }
      });
    }
    for (auto& th : pool) th.join();
    if (failure) std::rethrow_exception(failure);
  }

  SimulationReport report;
  report.format = format;
  report.rule = model.rule;
  report.seeding = options.seeding;
  report.seed = options.seed;
  report.trials = options.trials;
  report.champion_counts.assign(static_cast<std::size_t>(format.player_count), 0);
  double tau_sum = 0.0;
  for (const auto& r : results) {
    report.top1_wins += r.top1 ? 1 : 0;
    tau_sum += r.tau;
    ++report.champion_counts[static_cast<std::size_t>(r.champion_seed - 1)];
  }
  const double n = options.trials;
  report.top1_win_rate = static_cast<double>(report.top1_wins) / n;
  report.top1_half_width = 1.96 * std::sqrt(report.top1_win_rate * (1.0 - report.top1_win_rate) / n);
  report.mean_kendall_tau = tau_sum / n;
  return report;
}

nlohmann::json report_to_json(const SimulationReport& report) {
  nlohmann::json dist = nlohmann::json::array();
  for (std::size_t i = 0; i < report.champion_counts.size(); ++i) {
    const int s = static_cast<int>(i) + 1;
    dist.push_back({{"seed", s}, {"wins", report.champion_counts[i]}, {"rate", report.champion_rate(s)}});
  }
  nlohmann::json format = {{"kind", to_string(report.format.kind)}, {"players", report.format.player_count}};
  if (report.format.kind == FormatKind::kLinearElimination) {
    format["rounds"] = report.format.round_count;
    format["rerank_passes"] = report.format.rerank_passes;
  }
  return {
      {"format", std::move(format)},
      {"model", to_string(report.rule)},
      {"seeding", to_string(report.seeding)},
      {"seed", report.seed},
      {"trials", report.trials},
      {"top1_wins", report.top1_wins},
      {"top1_win_rate", report.top1_win_rate},
      {"top1_half_width", report.top1_half_width},
      {"mean_kendall_tau", report.mean_kendall_tau},
      {"champion_distribution", std::move(dist)},
  };
}

std::string champion_csv(const SimulationReport& report) {
  std::ostringstream os;
  os << "seed,wins,rate\n";
  os.precision(17);
  for (std::size_t i = 0; i < report.champion_counts.size(); ++i) {
    const int s = static_cast<int>(i) + 1;
    os << s << ',' << report.champion_counts[i] << ',' << report.champion_rate(s) << '\n';
  }
  return os.str();
}

}  // namespace linelim
