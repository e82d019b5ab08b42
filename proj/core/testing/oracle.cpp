#include "linelim/testing/oracle.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <numeric>
#include <string>

#include "linelim/error.hpp"

namespace linelim::testing {

namespace {

// Transitions in W, x_1..x_n, L where x is given by a callback over 1..n.
template <typename At>
int count_transitions(int n, At at) {
  int count = 0;
  bool prev_win = true;
  for (int k = 1; k <= n; ++k) {
    const bool win = at(k);
    if (win != prev_win) ++count;
    prev_win = win;
  }
  if (prev_win) ++count;
  return count;
}

}  // namespace

bool satisfies_rerank_constraints(const ResultVector& results, std::span<const int> assignment) {
  const int n = results.size();
  if (static_cast<int>(assignment.size()) != n) return false;
  auto won = [&](int prev) { return results.won(prev); };
  auto moved_to = [&](int prev) { return assignment[static_cast<std::size_t>(prev - 1)]; };

  const int before = count_transitions(n, won);
  if (before == 1) {
    for (int p = 1; p <= n; ++p) {
      if (moved_to(p) != p) return false;
    }
    return true;
  }

  for (int p = 1; p <= n; ++p) {
    if (won(p) ? moved_to(p) > p : moved_to(p) < p) return false;
  }
  for (int p = 1; p < n; ++p) {
    if (won(p) == won(p + 1) && moved_to(p + 1) != moved_to(p) + 1) return false;
  }
  for (int p = 1; p <= n; ++p) {
    for (int q = p + 1; q <= n; ++q) {
      if (won(p) == won(q) && moved_to(p) > moved_to(q)) return false;
    }
  }

  std::vector<bool> new_won(static_cast<std::size_t>(n) + 1, false);
  for (int p = 1; p <= n; ++p) new_won[static_cast<std::size_t>(moved_to(p))] = won(p);
  const int after = count_transitions(n, [&](int k) { return static_cast<bool>(new_won[static_cast<std::size_t>(k)]); });
  return after == before - 2;
}

RerankOptimum brute_force_rerank(const ResultVector& results) {
  const int n = results.size();
  if (n > kMaxRerankOraclePlayers) {
    throw Error(ErrorCode::kInstanceTooLarge,
                "re-rank oracle supports at most " + std::to_string(kMaxRerankOraclePlayers) + " players");
  }
  RerankOptimum best;
  best.max_displacement = -1;
  std::vector<int> assignment(static_cast<std::size_t>(n));
  std::iota(assignment.begin(), assignment.end(), 1);
  do {
    if (!satisfies_rerank_constraints(results, assignment)) continue;
    ++best.feasible_count;
    long long d = 0;
    for (int p = 1; p <= n; ++p) d += std::llabs(assignment[static_cast<std::size_t>(p - 1)] - p);
    if (d < best.max_displacement) continue;
    if (d > best.max_displacement) {
      best.max_displacement = d;
      best.maximizers.clear();
    }
    Permutation order(static_cast<std::size_t>(n));
    for (int p = 1; p <= n; ++p) order[static_cast<std::size_t>(assignment[static_cast<std::size_t>(p - 1)] - 1)] = p;
    best.maximizers.push_back(std::move(order));
  } while (std::next_permutation(assignment.begin(), assignment.end()));
  std::sort(best.maximizers.begin(), best.maximizers.end());
  return best;
}

namespace {

void extend(std::vector<int>& prefix, int rounds, std::vector<std::vector<int>>& out) {
  const int cur = prefix.back();
  const int remaining = rounds - static_cast<int>(prefix.size());
  if (remaining == 0) {
    if (cur == 2) out.push_back(prefix);
    return;
  }
  // Each later round removes at least two players.
  const int max_next = cur - 2;
  const int min_next = std::max(2 + 2 * (remaining - 1), (cur + 1) / 2);
  for (int next = max_next; next >= min_next; next -= 2) {
    prefix.push_back(next);
    extend(prefix, rounds, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<std::vector<int>> enumerate_schedules(const Config& cfg) {
  const int n = cfg.player_count;
  const int m = cfg.round_count;
  if (n > kMaxScheduleOraclePlayers) {
    throw Error(ErrorCode::kInstanceTooLarge,
                "schedule oracle supports at most " + std::to_string(kMaxScheduleOraclePlayers) + " players");
  }
  std::vector<std::vector<int>> out;
  if (n < 2 || m < 1) return out;
  std::vector<int> prefix{n};
  extend(prefix, m, out);
  return out;
}

namespace {

long long interior_objective(const std::vector<int>& c) {
  long long total = 0;
  for (std::size_t t = 1; t + 1 < c.size(); ++t) {
    total += std::llabs(static_cast<long long>(c[t] - c[t + 1]) - (c[t - 1] - c[t]));
  }
  return total;
}

}  // namespace

long long brute_force_schedule(const Config& cfg) {
  const auto all = enumerate_schedules(cfg);
  if (all.empty()) {
    throw Error(ErrorCode::kInfeasible, "no feasible schedule for N=" + std::to_string(cfg.player_count) +
                                            ", M=" + std::to_string(cfg.round_count));
  }
  if (cfg.round_count < 3) throw Error(ErrorCode::kTooShort, "objective needs at least three rounds");
  long long best = std::numeric_limits<long long>::max();
  for (const auto& s : all) best = std::min(best, interior_objective(s));
  return best;
}

std::vector<std::vector<int>> optimal_schedules(const Config& cfg) {
  const long long best = brute_force_schedule(cfg);
  std::vector<std::vector<int>> out;
  for (auto& s : enumerate_schedules(cfg)) {
    if (interior_objective(s) == best) out.push_back(std::move(s));
  }
  return out;
}

std::vector<ResultVector> all_result_vectors(int player_count) {
  if (player_count < 2 || player_count % 2 != 0) {
    throw Error(ErrorCode::kInvalidResultVector, "player count must be even and positive");
  }
  const int half = player_count / 2;
  if (half > 24) throw Error(ErrorCode::kInstanceTooLarge, "too many result vectors to enumerate");
  std::vector<ResultVector> out;
  out.reserve(std::size_t{1} << half);
  for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << half); ++mask) {
    std::vector<Outcome> b(static_cast<std::size_t>(player_count));
    for (int i = 0; i < half; ++i) {
      const Outcome o = (mask >> i) & 1U ? Outcome::kWin : Outcome::kLoss;
      b[static_cast<std::size_t>(i)] = o;
      b[static_cast<std::size_t>(player_count - 1 - i)] = opposite(o);
    }
    out.emplace_back(std::move(b));
  }
  return out;
}

}  // namespace linelim::testing
