#pragma once

// Domain types shared by every module: configuration, player identities,
// round results and standings, plus the permutation measures used by the
// re-ranking optimizer.
//
// Permutations are 1-based integer sequences. "Order form" lists, for each
// rank position k, the previous rank of the player now at k. "Assignment
// form" lists, for each previous rank n, the new rank of that player. The two
// forms are mutual inverses.

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace linelim {

/// Tournament parameters. Only instances returned by validate_config() are
/// guaranteed to satisfy the invariants; the aggregate itself is plain data
/// so that invalid inputs can still be described and diagnosed.
struct Config {
  int player_count = 0;
  int round_count = 0;
  int rerank_passes = 1;

  friend bool operator==(const Config&, const Config&) = default;
};

/// Returns the violation for (player_count, round_count, rerank_passes), if
/// any, without throwing.
std::optional<std::string> config_violation(const Config& cfg);

/// Accepts N even, N >= 2 and ceil(log2 N) <= M <= N/2, with the lower bound
/// checked as 2^M >= N in integer arithmetic.
Config validate_config(int player_count, int round_count, int rerank_passes = 1);

/// A player's identity is its initial seed, 1 being the highest.
struct PlayerId {
  int seed = 0;

  constexpr PlayerId() = default;
  constexpr explicit PlayerId(int s) : seed(s) {}

  friend constexpr auto operator<=>(const PlayerId&, const PlayerId&) = default;
};

enum class Outcome : std::uint8_t { kLoss = 0, kWin = 1 };

constexpr Outcome opposite(Outcome o) noexcept {
  return o == Outcome::kWin ? Outcome::kLoss : Outcome::kWin;
}
constexpr char to_char(Outcome o) noexcept { return o == Outcome::kWin ? 'W' : 'L'; }

/// Round outcomes indexed by pre-round rank. Always non-empty, even length
/// and anti-symmetric: the players at ranks n and N+1-n met, so exactly one
/// of them won.
class ResultVector {
 public:
  explicit ResultVector(std::vector<Outcome> outcomes);

  /// Parses a string over {W, L}; whitespace is ignored.
  static ResultVector parse(std::string_view text);
  /// Parses a list of "W"/"L" tokens, the serialized form used in logs.
  static ResultVector from_tokens(std::span<const std::string> tokens);
  /// All favourites win: W..W L..L.
  static ResultVector sorted(int size);

  int size() const noexcept { return static_cast<int>(outcomes_.size()); }
  std::span<const Outcome> outcomes() const noexcept { return outcomes_; }
  /// 1-based access by pre-round rank.
  Outcome at_rank(int rank) const { return outcomes_.at(static_cast<std::size_t>(rank - 1)); }
  bool won(int rank) const { return at_rank(rank) == Outcome::kWin; }

  /// Outcomes re-indexed by new rank, given an order-form permutation.
  ResultVector permuted(std::span<const int> order) const;

  std::string to_string() const;
  std::vector<std::string> to_tokens() const;

  friend bool operator==(const ResultVector&, const ResultVector&) = default;

 private:
  std::vector<Outcome> outcomes_;
};

/// Ranks held by a set of active players. Rank 1 is first in order().
class Standings {
 public:
  Standings() = default;
  /// Throws kNotAPermutation on duplicate or non-positive ids.
  explicit Standings(std::vector<PlayerId> order);

  /// Seeds 1..n in seed order.
  static Standings initial(int player_count);

  int size() const noexcept { return static_cast<int>(order_.size()); }
  std::span<const PlayerId> order() const noexcept { return order_; }
  PlayerId at_rank(int rank) const;
  bool contains(PlayerId p) const noexcept;
  /// 1-based rank; throws kInvalidArgument for inactive players.
  int rank_of(PlayerId p) const;

  /// New standings from an order-form permutation over current ranks.
  Standings apply(std::span<const int> order) const;
  /// Drops the listed players and closes the gaps, preserving order.
  Standings without(std::span<const PlayerId> removed) const;

  std::vector<int> seeds() const;

  friend bool operator==(const Standings& a, const Standings& b) { return a.order_ == b.order_; }

 private:
  std::vector<PlayerId> order_;
  std::vector<int> rank_by_seed_;  // 0 marks inactive
};

using Permutation = std::vector<int>;

/// Throws kNotAPermutation unless perm holds exactly 1..perm.size().
void require_permutation(std::span<const int> perm);
bool is_permutation(std::span<const int> perm) noexcept;

/// Inverts a permutation. Order form and assignment form are each other's
/// inverse, so this converts in both directions.
Permutation order_to_assignment(std::span<const int> order);
Permutation assignment_to_order(std::span<const int> assignment);
Permutation identity_permutation(int size);
/// Order form of "apply first, then second": result[k] = first[second[k]].
Permutation compose_orders(std::span<const int> first, std::span<const int> second);

/// Sum of |perm_n - n|.
long long displacement(std::span<const int> perm);

/// Number of W/L transitions in W, outcomes..., L. Defined for any sequence,
/// anti-symmetric or not.
int transition_count(std::span<const Outcome> outcomes) noexcept;
/// Path change of a valid result vector; always odd.
int path_change(const ResultVector& results) noexcept;

/// Outcomes re-indexed by new rank; no validity requirement.
std::vector<Outcome> permute_outcomes(std::span<const Outcome> outcomes, std::span<const int> order);

}  // namespace linelim
