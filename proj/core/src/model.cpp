#include "linelim/model.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <sstream>

#include "linelim/error.hpp"

namespace linelim {

std::optional<std::string> config_violation(const Config& cfg) {
  const int n = cfg.player_count;
  const int m = cfg.round_count;
  if (n < 2) return "player count must be at least 2";
  if (n % 2 != 0) return "player count must be even";
  if (m < 1 || (m < 31 && (std::int64_t{1} << m) < n)) {
    return "round count " + std::to_string(m) + " is below log2(" + std::to_string(n) + ")";
  }
  if (m > n / 2) {
    return "round count " + std::to_string(m) + " exceeds half the player count (" +
           std::to_string(n / 2) + ")";
  }
  if (cfg.rerank_passes < 1) return "re-rank passes must be at least 1";
  return std::nullopt;
}

Config validate_config(int player_count, int round_count, int rerank_passes) {
  const Config cfg{player_count, round_count, rerank_passes};
  if (auto why = config_violation(cfg)) {
    ErrorCode code = ErrorCode::kInvalidConfig;
    if (player_count < 2) {
      code = ErrorCode::kTooFewPlayers;
    } else if (player_count % 2 != 0) {
      code = ErrorCode::kOddPlayerCount;
    } else if (round_count < 1 || (round_count < 31 && (std::int64_t{1} << round_count) < player_count)) {
      code = ErrorCode::kTooFewRounds;
    } else if (round_count > player_count / 2) {
      code = ErrorCode::kTooManyRounds;
    }
    throw Error(code, *why);
  }
  return cfg;
}

// ---------------------------------------------------------------------------

ResultVector::ResultVector(std::vector<Outcome> outcomes) : outcomes_(std::move(outcomes)) {
  const auto n = outcomes_.size();
  if (n == 0 || n % 2 != 0) {
    throw Error(ErrorCode::kInvalidResultVector,
                "result vector length must be even and positive, got " + std::to_string(n));
  }
  for (std::size_t i = 0; i < n / 2; ++i) {
    if (outcomes_[i] == outcomes_[n - 1 - i]) {
      throw Error(ErrorCode::kAntiSymmetryViolation,
                  "ranks " + std::to_string(i + 1) + " and " + std::to_string(n - i) +
                      " met but both " + (outcomes_[i] == Outcome::kWin ? "won" : "lost"));
    }
  }
}

ResultVector ResultVector::parse(std::string_view text) {
  std::vector<Outcome> out;
  out.reserve(text.size());
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    switch (c) {
      case 'W': case 'w': out.push_back(Outcome::kWin); break;
      case 'L': case 'l': out.push_back(Outcome::kLoss); break;
      default:
        throw Error(ErrorCode::kInvalidResultVector,
                    std::string("unexpected character '") + c + "' in result string");
    }
  }
  return ResultVector(std::move(out));
}

ResultVector ResultVector::from_tokens(std::span<const std::string> tokens) {
  std::vector<Outcome> out;
  out.reserve(tokens.size());
  for (const auto& t : tokens) {
    if (t == "W") {
      out.push_back(Outcome::kWin);
    } else if (t == "L") {
      out.push_back(Outcome::kLoss);
    } else {
      throw Error(ErrorCode::kInvalidResultVector, "result token must be \"W\" or \"L\", got \"" + t + "\"");
    }
  }
  return ResultVector(std::move(out));
}

ResultVector ResultVector::sorted(int size) {
  if (size < 0) throw Error(ErrorCode::kInvalidResultVector, "negative size");
  std::vector<Outcome> out(static_cast<std::size_t>(size), Outcome::kLoss);
  std::fill_n(out.begin(), size / 2, Outcome::kWin);
  return ResultVector(std::move(out));
}

ResultVector ResultVector::permuted(std::span<const int> order) const {
  if (static_cast<int>(order.size()) != size()) {
    throw Error(ErrorCode::kNotAPermutation, "permutation length does not match result vector");
  }
  require_permutation(order);
  return ResultVector(permute_outcomes(outcomes_, order));
}

std::string ResultVector::to_string() const {
  std::string s;
  s.reserve(outcomes_.size());
  for (auto o : outcomes_) s.push_back(to_char(o));
  return s;
}

std::vector<std::string> ResultVector::to_tokens() const {
  std::vector<std::string> out;
  out.reserve(outcomes_.size());
  for (auto o : outcomes_) out.emplace_back(1, to_char(o));
  return out;
}

// ---------------------------------------------------------------------------

Standings::Standings(std::vector<PlayerId> order) : order_(std::move(order)) {
  int max_seed = 0;
  for (auto p : order_) {
    if (p.seed <= 0) throw Error(ErrorCode::kNotAPermutation, "player seeds must be positive");
    max_seed = std::max(max_seed, p.seed);
  }
  rank_by_seed_.assign(static_cast<std::size_t>(max_seed) + 1, 0);
  for (std::size_t i = 0; i < order_.size(); ++i) {
    auto& slot = rank_by_seed_[static_cast<std::size_t>(order_[i].seed)];
    if (slot != 0) {
      throw Error(ErrorCode::kNotAPermutation,
                  "seed " + std::to_string(order_[i].seed) + " appears twice in standings");
    }
    slot = static_cast<int>(i) + 1;
  }
}

Standings Standings::initial(int player_count) {
  std::vector<PlayerId> order;
  order.reserve(static_cast<std::size_t>(std::max(player_count, 0)));
  for (int s = 1; s <= player_count; ++s) order.emplace_back(s);
  return Standings(std::move(order));
}

PlayerId Standings::at_rank(int rank) const {
  if (rank < 1 || rank > size()) {
    throw Error(ErrorCode::kInvalidArgument, "rank " + std::to_string(rank) + " out of range");
  }
  return order_[static_cast<std::size_t>(rank - 1)];
}

bool Standings::contains(PlayerId p) const noexcept {
  return p.seed > 0 && static_cast<std::size_t>(p.seed) < rank_by_seed_.size() &&
         rank_by_seed_[static_cast<std::size_t>(p.seed)] != 0;
}

int Standings::rank_of(PlayerId p) const {
  if (!contains(p)) {
    throw Error(ErrorCode::kInvalidArgument, "seed " + std::to_string(p.seed) + " is not active");
  }
  return rank_by_seed_[static_cast<std::size_t>(p.seed)];
}

Standings Standings::apply(std::span<const int> order) const {
  if (static_cast<int>(order.size()) != size()) {
    throw Error(ErrorCode::kNotAPermutation, "permutation length does not match standings");
  }
  require_permutation(order);
  std::vector<PlayerId> next;
  next.reserve(order.size());
  for (int prev_rank : order) next.push_back(order_[static_cast<std::size_t>(prev_rank - 1)]);
  return Standings(std::move(next));
}

Standings Standings::without(std::span<const PlayerId> removed) const {
  std::vector<PlayerId> next;
  next.reserve(order_.size());
  for (auto p : order_) {
    if (std::find(removed.begin(), removed.end(), p) == removed.end()) next.push_back(p);
  }
  return Standings(std::move(next));
}

std::vector<int> Standings::seeds() const {
  std::vector<int> out;
  out.reserve(order_.size());
  for (auto p : order_) out.push_back(p.seed);
  return out;
}

// ---------------------------------------------------------------------------

bool is_permutation(std::span<const int> perm) noexcept {
  std::vector<bool> seen(perm.size() + 1, false);
  for (int v : perm) {
    if (v < 1 || static_cast<std::size_t>(v) > perm.size() || seen[static_cast<std::size_t>(v)]) {
      return false;
    }
    seen[static_cast<std::size_t>(v)] = true;
  }
  return true;
}

void require_permutation(std::span<const int> perm) {
  if (!is_permutation(perm)) {
    throw Error(ErrorCode::kNotAPermutation,
                "expected a permutation of 1.." + std::to_string(perm.size()));
  }
}

Permutation order_to_assignment(std::span<const int> order) {
  require_permutation(order);
  Permutation inverse(order.size());
  for (std::size_t k = 0; k < order.size(); ++k) {
    inverse[static_cast<std::size_t>(order[k] - 1)] = static_cast<int>(k) + 1;
  }
  return inverse;
}

Permutation assignment_to_order(std::span<const int> assignment) {
  return order_to_assignment(assignment);
}

Permutation identity_permutation(int size) {
  Permutation p(static_cast<std::size_t>(std::max(size, 0)));
  for (std::size_t i = 0; i < p.size(); ++i) p[i] = static_cast<int>(i) + 1;
  return p;
}

Permutation compose_orders(std::span<const int> first, std::span<const int> second) {
  if (first.size() != second.size()) {
    throw Error(ErrorCode::kNotAPermutation, "cannot compose permutations of different length");
  }
  require_permutation(first);
  require_permutation(second);
  Permutation out(first.size());
  for (std::size_t k = 0; k < second.size(); ++k) {
    out[k] = first[static_cast<std::size_t>(second[k] - 1)];
  }
  return out;
}

long long displacement(std::span<const int> perm) {
  require_permutation(perm);
  long long total = 0;
  for (std::size_t i = 0; i < perm.size(); ++i) {
    total += std::llabs(static_cast<long long>(perm[i]) - static_cast<long long>(i + 1));
  }
  return total;
}

int transition_count(std::span<const Outcome> outcomes) noexcept {
  int count = 0;
  Outcome prev = Outcome::kWin;
  for (auto o : outcomes) {
    if (o != prev) ++count;
    prev = o;
  }
  if (prev != Outcome::kLoss) ++count;
  return count;
}

int path_change(const ResultVector& results) noexcept {
  return transition_count(results.outcomes());
}

std::vector<Outcome> permute_outcomes(std::span<const Outcome> outcomes, std::span<const int> order) {
  std::vector<Outcome> out;
  out.reserve(order.size());
  for (int prev_rank : order) out.push_back(outcomes[static_cast<std::size_t>(prev_rank - 1)]);
  return out;
}

}  // namespace linelim
