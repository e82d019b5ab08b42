#include "linelim/formats.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <set>

#include "linelim/error.hpp"

namespace linelim {
namespace {

std::vector<int> seeds(std::span<const PlayerId> players) {
  std::vector<int> out;
  for (auto p : players) out.push_back(p.seed);
  return out;
}

BracketState play_favourites(BracketState st) {
  while (!st.completed()) {
    std::vector<Outcome> r;
    for (const auto& p : bracket_pairings(st)) r.push_back(p.high < p.low ? Outcome::kWin : Outcome::kLoss);
    st = single_elim_round(st, r);
  }
  return st;
}

TEST(FormatTest, ParseAndValidate) {
  EXPECT_EQ(parse_format_kind("linear"), FormatKind::kLinearElimination);
  EXPECT_EQ(parse_format_kind("single-elimination"), FormatKind::kSingleElimination);
  EXPECT_EQ(parse_format_kind("rr"), FormatKind::kRoundRobin);
  EXPECT_THROW(parse_format_kind("swiss"), Error);
  EXPECT_THROW(validate_format({FormatKind::kSingleElimination, 6}), Error);
  EXPECT_THROW(validate_format({FormatKind::kLinearElimination, 8, 5}), Error);
  EXPECT_EQ(format_rounds({FormatKind::kSingleElimination, 16}), 4);
  EXPECT_EQ(format_rounds({FormatKind::kRoundRobin, 8}), 7);
  EXPECT_EQ(format_rounds({FormatKind::kLinearElimination, 134, 15}), 15);
}

TEST(BracketTest, SeedOrder) {
  EXPECT_EQ(bracket_seed_order(2), (std::vector<int>{1, 2}));
  EXPECT_EQ(bracket_seed_order(4), (std::vector<int>{1, 4, 3, 2}));
  EXPECT_EQ(bracket_seed_order(8), (std::vector<int>{1, 8, 5, 4, 3, 6, 7, 2}));
  for (int n = 2; n <= 64; n *= 2) {
    const auto order = bracket_seed_order(n);
    for (std::size_t i = 0; i < order.size(); i += 2) EXPECT_EQ(order[i] + order[i + 1], n + 1);
  }
  EXPECT_THROW(bracket_seed_order(6), Error);
}

TEST(BracketTest, FourPlayersFavouritesWin) {
  auto st = BracketState::seeded(4);
  st = single_elim_round(st, std::vector<Outcome>{Outcome::kWin, Outcome::kLoss});  // 1 beats 4, 2 beats 3
  EXPECT_EQ(bracket_pairings(st), (std::vector<Pairing>{{PlayerId(1), PlayerId(2)}}));
  st = single_elim_round(st, std::vector<Outcome>{Outcome::kWin});
  EXPECT_EQ(st.champion(), PlayerId(1));
  EXPECT_EQ(seeds(single_elim_ranking(st)), (std::vector<int>{1, 2, 3, 4}));
}

TEST(BracketTest, TwoPlayers) {
  auto st = BracketState::seeded(2);
  st = single_elim_round(st, std::vector<Outcome>{Outcome::kLoss});
  ASSERT_TRUE(st.completed());
  EXPECT_EQ(st.champion(), PlayerId(2));
}

TEST(BracketTest, EightPlayersUnderdogsWinFirstRound) {
  auto st = BracketState::seeded(8);
  std::vector<Outcome> r;
  for (const auto& p : bracket_pairings(st)) r.push_back(p.high > p.low ? Outcome::kWin : Outcome::kLoss);
  st = single_elim_round(st, r);
  EXPECT_EQ(seeds(st.slots()), (std::vector<int>{8, 5, 6, 7}));
}

TEST(BracketTest, FavouritesCrownTopSeed) {
  for (int n = 2; n <= 128; n *= 2) EXPECT_EQ(play_favourites(BracketState::seeded(n)).champion(), PlayerId(1));
}

TEST(BracketTest, Errors) {
  try {
    BracketState::seeded(6);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNotPowerOfTwo);
  }
  auto st = BracketState::seeded(4);
  EXPECT_THROW(single_elim_round(st, std::vector<Outcome>{Outcome::kWin}), Error);
  st = play_favourites(st);
  EXPECT_THROW(bracket_pairings(st), Error);
}

TEST(BracketTest, JsonShape) {
  const auto st = play_favourites(BracketState::seeded(4));
  const auto j = bracket_to_json(st);
  EXPECT_EQ(j.at("format"), "single-elimination");
  EXPECT_EQ(j.at("rounds").size(), 2u);
  EXPECT_EQ(j.at("rounds")[0].at("pairings"), nlohmann::json::parse("[[1,4],[3,2]]"));
  EXPECT_EQ(j.at("rounds")[0].at("results"), nlohmann::json::parse(R"(["W","L"])"));
  EXPECT_EQ(j.at("champion"), 1);
}

RoundRobinResults by_seed(int n) {
  RoundRobinResults r(n);
  for (int a = 1; a <= n; ++a) {
    for (int b = a + 1; b <= n; ++b) r.record(PlayerId(a), PlayerId(b));
  }
  return r;
}

TEST(RoundRobinTest, SeedOrderWins) {
  EXPECT_EQ(seeds(round_robin(by_seed(4))), (std::vector<int>{1, 2, 3, 4}));
}

TEST(RoundRobinTest, CycleBrokenBySeed) {
  RoundRobinResults r(3);
  r.record(PlayerId(1), PlayerId(2));
  r.record(PlayerId(2), PlayerId(3));
  r.record(PlayerId(3), PlayerId(1));
  EXPECT_EQ(seeds(round_robin(r)), (std::vector<int>{1, 2, 3}));
}

TEST(RoundRobinTest, OneUpsetResolvedHeadToHead) {
  // 4 beats 1, everything else by seed: wins are 2,2,1,1. 1 beat 2 and 3 beat
  // 4, so head-to-head keeps seed order.
  RoundRobinResults r(4);
  r.record(PlayerId(1), PlayerId(2));
  r.record(PlayerId(1), PlayerId(3));
  r.record(PlayerId(4), PlayerId(1));
  r.record(PlayerId(2), PlayerId(3));
  r.record(PlayerId(2), PlayerId(4));
  r.record(PlayerId(3), PlayerId(4));
  EXPECT_EQ(seeds(round_robin(r)), (std::vector<int>{1, 2, 3, 4}));
}

TEST(RoundRobinTest, HeadToHeadAmongTiedSet) {
  // Wins 2,2,1,1 again, but now 2 beat 1 and 4 beat 3.
  RoundRobinResults r(4);
  r.record(PlayerId(2), PlayerId(1));
  r.record(PlayerId(1), PlayerId(3));
  r.record(PlayerId(1), PlayerId(4));
  r.record(PlayerId(3), PlayerId(2));
  r.record(PlayerId(2), PlayerId(4));
  r.record(PlayerId(4), PlayerId(3));
  EXPECT_EQ(seeds(round_robin(r)), (std::vector<int>{2, 1, 4, 3}));
}

TEST(RoundRobinTest, Incomplete) {
  RoundRobinResults r(4);
  r.record(PlayerId(1), PlayerId(2));
  try {
    round_robin(r);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kIncompleteResults);
  }
}

TEST(RoundRobinProperty, RankingIgnoresSupplyOrder) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 9);
    std::vector<std::pair<int, int>> games;  // (winner, loser)
    for (int a = 1; a <= n; ++a) {
      for (int b = a + 1; b <= n; ++b) games.push_back((rng() & 1U) ? std::pair{a, b} : std::pair{b, a});
    }
    RoundRobinResults forward(n);
    for (auto [w, l] : games) forward.record(PlayerId(w), PlayerId(l));
    std::shuffle(games.begin(), games.end(), rng);
    RoundRobinResults shuffled(n);
    for (auto [w, l] : games) shuffled.record(PlayerId(w), PlayerId(l));
    ASSERT_EQ(round_robin(forward), round_robin(shuffled));
  }
}

TEST(RoundRobinProperty, CircleMethodSchedule) {
  for (int n = 2; n <= 21; ++n) {
    const auto rounds = round_robin_schedule(n);
    EXPECT_EQ(static_cast<int>(rounds.size()), n % 2 == 0 ? n - 1 : n);
    std::set<std::pair<int, int>> met;
    for (const auto& round : rounds) {
      std::set<int> playing;
      for (const auto& p : round) {
        EXPECT_TRUE(playing.insert(p.high.seed).second);
        EXPECT_TRUE(playing.insert(p.low.seed).second);
        EXPECT_TRUE(met.insert({p.high.seed, p.low.seed}).second);
      }
      if (n % 2 == 0) EXPECT_EQ(static_cast<int>(playing.size()), n);
    }
    EXPECT_EQ(static_cast<int>(met.size()), n * (n - 1) / 2);
  }
}

TEST(RoundRobinTest, JsonShape) {
  const auto j = round_robin_to_json(by_seed(4));
  EXPECT_EQ(j.at("format"), "round-robin");
  EXPECT_EQ(j.at("rounds").size(), 3u);
  EXPECT_EQ(j.at("ranking"), nlohmann::json({1, 2, 3, 4}));
}

}  // namespace
}  // namespace linelim
