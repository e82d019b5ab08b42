#pragma once

// Monte Carlo evaluation of tournament formats under a latent strength model.
//
// Players have identities 1..N with hidden strengths; the true ordering ranks
// them by strength, strongest first. A seeding policy decides which identity
// receives each tournament seed. Every trial draws from its own random
// stream derived from (seed, trial index), so reports do not depend on how
// trials are split across threads.

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "linelim/formats.hpp"

namespace linelim {

enum class WinRule { kBradleyTerry, kDeterministic };

std::string_view to_string(WinRule rule) noexcept;
WinRule parse_win_rule(std::string_view name);

struct StrengthModel {
  std::vector<double> strengths;  // strengths[i - 1] belongs to identity i
  WinRule rule = WinRule::kBradleyTerry;

  int size() const noexcept { return static_cast<int>(strengths.size()); }
};

/// s_i = 1 / i.
StrengthModel harmonic_model(int player_count, WinRule rule = WinRule::kBradleyTerry);

/// Throws kInvalidFormatParameters for non-positive strengths and
/// kEqualStrengthsUnderDeterministic for ties under the deterministic rule.
void validate_model(const StrengthModel& model);

/// Probability that identity i beats identity j. Bradley-Terry gives
/// s_i / (s_i + s_j); the deterministic rule gives 1 or 0.
double win_prob(const StrengthModel& model, int i, int j);

/// Identities ordered by strength, strongest first; ties keep identity order.
std::vector<int> true_order(const StrengthModel& model);

struct Seeding {
  enum class Kind { kTrueOrder, kRandom, kNoisy };
  Kind kind = Kind::kTrueOrder;
  double sigma = 0.0;  // noise standard deviation for kNoisy

  static Seeding true_order() { return {Kind::kTrueOrder, 0.0}; }
  static Seeding random() { return {Kind::kRandom, 0.0}; }
  static Seeding noisy(double sigma) { return {Kind::kNoisy, sigma}; }
};

std::string to_string(const Seeding& seeding);
Seeding parse_seeding(std::string_view name, double sigma = 0.0);

/// (concordant - discordant) / (n (n - 1) / 2) for two orderings of the same
/// items. Throws kMismatchedSets, or kInvalidArgument for fewer than two items.
double kendall_tau(std::span<const int> a, std::span<const int> b);

/// Plays one match between two seeds; true when the first one wins.
using MatchFn = std::function<bool(int seed_a, int seed_b)>;

struct PlayedTournament {
  int champion_seed = 0;
  std::vector<int> ranking;  // seeds, best first
};

/// Plays a full tournament of the given format with `match` deciding every
/// game. This is the only per-format hook the simulator needs.
PlayedTournament play_format(const FormatDescriptor& format, const MatchFn& match);

struct SimulationOptions {
  int trials = 1000;
  std::uint64_t seed = 0;
  Seeding seeding;
  int threads = 1;
};

struct SimulationReport {
  FormatDescriptor format;
  WinRule rule = WinRule::kBradleyTerry;
  Seeding seeding;
  std::uint64_t seed = 0;
  int trials = 0;

  long long top1_wins = 0;
  double top1_win_rate = 0.0;
  double top1_half_width = 0.0;  // 95% normal-approximation half-width
  double mean_kendall_tau = 0.0;
  std::vector<long long> champion_counts;  // index seed - 1

  double champion_rate(int seed) const;
};

/// Throws kInvalidFormatParameters for bad format or trial counts.
SimulationReport simulate(const FormatDescriptor& format, const StrengthModel& model,
                          const SimulationOptions& options);

nlohmann::json report_to_json(const SimulationReport& report);
/// Columns: seed,wins,rate.
std::string champion_csv(const SimulationReport& report);

}  // namespace linelim
