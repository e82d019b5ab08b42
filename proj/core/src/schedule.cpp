#include "linelim/schedule.hpp"

#include <cstdlib>
#include <stdexcept>

#include "linelim/error.hpp"

namespace linelim {

int EliminationSchedule::eliminated_after(int round) const {
  if (round < 0 || round >= rounds()) {
    throw Error(ErrorCode::kInvalidArgument, "round " + std::to_string(round) + " out of range");
  }
  if (round + 1 == rounds()) return 0;
  return counts[static_cast<std::size_t>(round)] - counts[static_cast<std::size_t>(round) + 1];
}

EliminationSchedule build_schedule(const Config& cfg) {
  if (auto why = config_violation(cfg)) throw Error(ErrorCode::kInvalidConfig, *why);

  const int n = cfg.player_count;
  const int m_total = cfg.round_count;
  std::vector<int> counts(static_cast<std::size_t>(m_total), 0);
  counts.front() = n;
  counts.back() = 2;

  for (int m = m_total - 1; m >= 2; --m) {
    const int current = counts[static_cast<std::size_t>(m)];
    const int delta = 2 * ((n - current) / (2 * m));
    if (m == m_total - 1 && delta < 2) {
      throw std::logic_error("first decrement below 2 for a validated config");
    }
    counts[static_cast<std::size_t>(m) - 1] = delta >= current ? 2 * current : current + delta;
  }
  return EliminationSchedule{std::move(counts)};
}

long long schedule_objective(std::span<const int> counts) {
  if (counts.size() < 3) {
    throw Error(ErrorCode::kTooShort, "objective needs at least three counts, got " +
                                          std::to_string(counts.size()));
  }
  long long total = 0;
  for (std::size_t t = 1; t + 1 < counts.size(); ++t) {
    const long long before = counts[t - 1] - counts[t];
    const long long after = counts[t] - counts[t + 1];
    total += std::llabs(after - before);
  }
  return total;
}

std::string to_string(ScheduleConstraint c) {
  switch (c) {
    case ScheduleConstraint::kConfig: return "config";
    case ScheduleConstraint::kLength: return "length";
    case ScheduleConstraint::kFirstCount: return "first-count";
    case ScheduleConstraint::kLastCount: return "last-count";
    case ScheduleConstraint::kOddDecrement: return "odd-decrement";
    case ScheduleConstraint::kDecrementTooSmall: return "decrement-too-small";
    case ScheduleConstraint::kMoreThanHalved: return "more-than-halved";
    case ScheduleConstraint::kIncreasingDecrement: return "increasing-decrement";
  }
  return "unknown";
}

std::vector<ScheduleViolation> validate_schedule(const EliminationSchedule& s, const Config& cfg) {
  std::vector<ScheduleViolation> out;
  auto add = [&out](int index, ScheduleConstraint c, std::string msg) {
    out.push_back({index, c, std::move(msg)});
  };

  if (auto why = config_violation(cfg)) add(-1, ScheduleConstraint::kConfig, *why);
  if (s.rounds() != cfg.round_count) {
    add(-1, ScheduleConstraint::kLength,
        "schedule has " + std::to_string(s.rounds()) + " rounds, config expects " +
            std::to_string(cfg.round_count));
  }
  if (s.counts.empty()) return out;

  if (s.counts.front() != cfg.player_count) {
    add(0, ScheduleConstraint::kFirstCount,
        "N_0 = " + std::to_string(s.counts.front()) + ", expected " + std::to_string(cfg.player_count));
  }
  if (s.counts.back() != 2) {
    add(s.rounds() - 1, ScheduleConstraint::kLastCount,
        "final round has " + std::to_string(s.counts.back()) + " players, expected 2");
  }

  for (int t = 0; t + 1 < s.rounds(); ++t) {
    const int cur = s.counts[static_cast<std::size_t>(t)];
    const int next = s.counts[static_cast<std::size_t>(t) + 1];
    const int dec = cur - next;
    const std::string where = "N_" + std::to_string(t) + " -> N_" + std::to_string(t + 1);
    if (dec % 2 != 0) {
      add(t, ScheduleConstraint::kOddDecrement, where + " removes an odd number (" + std::to_string(dec) + ")");
    }
    if (dec < 2) {
      add(t, ScheduleConstraint::kDecrementTooSmall, where + " removes " + std::to_string(dec) + " players");
    }
    if (cur > 2 * next) {
      add(t, ScheduleConstraint::kMoreThanHalved,
          where + ": " + std::to_string(cur) + " > 2 * " + std::to_string(next));
    }
    if (t > 0) {
      const int prev_dec = s.counts[static_cast<std::size_t>(t) - 1] - cur;
      if (dec > prev_dec) {
        add(t, ScheduleConstraint::kIncreasingDecrement,
            where + " removes " + std::to_string(dec) + ", more than the previous " + std::to_string(prev_dec));
      }
    }
  }
  return out;
}

}  // namespace linelim
