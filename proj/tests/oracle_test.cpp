#include "linelim/testing/oracle.hpp"

#include <gtest/gtest.h>

#include <algorithm>

#include "linelim/error.hpp"
#include "linelim/rerank.hpp"
#include "linelim/schedule.hpp"

namespace linelim::testing {
namespace {

TEST(BruteForceRerankTest, SortedResultsAdmitOnlyIdentity) {
  const auto opt = brute_force_rerank(ResultVector::parse("WWLL"));
  EXPECT_EQ(opt.max_displacement, 0);
  EXPECT_EQ(opt.maximizers, (std::vector<Permutation>{{1, 2, 3, 4}}));
  EXPECT_EQ(opt.feasible_count, 1);
}

TEST(BruteForceRerankTest, TwoPlayers) {
  const auto opt = brute_force_rerank(ResultVector::parse("LW"));
  EXPECT_EQ(opt.max_displacement, 2);
  EXPECT_NE(std::find(opt.maximizers.begin(), opt.maximizers.end(), Permutation{2, 1}), opt.maximizers.end());
}

TEST(BruteForceRerankTest, FourPlayersAlternating) {
  const auto opt = brute_force_rerank(ResultVector::parse("LWLW"));
  EXPECT_EQ(opt.max_displacement, 4);
  EXPECT_EQ(opt.maximizers, (std::vector<Permutation>{{2, 1, 4, 3}}));
}

TEST(BruteForceRerankTest, GuardsInstanceSize) {
  try {
    brute_force_rerank(ResultVector::sorted(14));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kInstanceTooLarge);
  }
}

TEST(BruteForceRerankTest, ConstraintCheckRejectsKnownBadMoves) {
  const auto b = ResultVector::parse("LWLW");
  EXPECT_TRUE(satisfies_rerank_constraints(b, order_to_assignment(Permutation{2, 1, 4, 3})));
  // Swapping a single pair is feasible, just not optimal.
  EXPECT_TRUE(satisfies_rerank_constraints(b, order_to_assignment(Permutation{2, 1, 3, 4})));
  // A loser may not climb.
  EXPECT_FALSE(satisfies_rerank_constraints(b, order_to_assignment(Permutation{1, 3, 2, 4})));
  // Full sort moves too far for a single pass.
  EXPECT_FALSE(satisfies_rerank_constraints(b, order_to_assignment(Permutation{2, 4, 1, 3})));
}

TEST(OracleAgreement, RerankOnceUpToEightPlayers) {
  for (int n = 2; n <= 8; n += 2) {
    for (const auto& b : all_result_vectors(n)) {
      const auto opt = brute_force_rerank(b);
      const auto order = rerank_once(b);
      ASSERT_EQ(displacement(order), opt.max_displacement) << b.to_string();
      ASSERT_TRUE(std::binary_search(opt.maximizers.begin(), opt.maximizers.end(), order)) << b.to_string();
    }
  }
}

// Observed, not required: for every instance up to ten players the
// constrained maximum is attained by exactly one re-ranking.
TEST(OracleAgreement, RerankOptimumIsUniqueUpToTenPlayers) {
  for (int n = 2; n <= 10; n += 2) {
    for (const auto& b : all_result_vectors(n)) {
      const auto opt = brute_force_rerank(b);
      ASSERT_EQ(opt.maximizers.size(), 1u) << b.to_string();
      ASSERT_EQ(opt.maximizers.front(), rerank_once(b));
    }
  }
}

TEST(BruteForceScheduleTest, TiedOptimaIncludeTheConstructedOne) {
  const auto optima = optimal_schedules(Config{18, 5});
  EXPECT_EQ(optima, (std::vector<std::vector<int>>{{18, 12, 8, 4, 2}, {18, 12, 6, 4, 2}}));
  EXPECT_EQ(build_schedule(Config{18, 5}).counts, (std::vector<int>{18, 12, 8, 4, 2}));
}

TEST(BruteForceScheduleTest, Examples) {
  EXPECT_EQ(brute_force_schedule(Config{12, 6}), 0);
  EXPECT_EQ(brute_force_schedule(Config{8, 3}), 2);
  EXPECT_EQ(enumerate_schedules(Config{8, 3}), (std::vector<std::vector<int>>{{8, 4, 2}}));
  EXPECT_EQ(brute_force_schedule(Config{8, 4}), 0);
}

TEST(BruteForceScheduleTest, Errors) {
  auto code = [](auto fn) {
    try {
      fn();
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::kInvalidArgument;
  };
  EXPECT_EQ(code([] { brute_force_schedule(Config{22, 6}); }), ErrorCode::kInstanceTooLarge);
  EXPECT_EQ(code([] { brute_force_schedule(Config{8, 2}); }), ErrorCode::kInfeasible);
  EXPECT_EQ(code([] { brute_force_schedule(Config{7, 3}); }), ErrorCode::kInfeasible);
  EXPECT_EQ(code([] { brute_force_schedule(Config{4, 2}); }), ErrorCode::kTooShort);
}

TEST(BruteForceScheduleTest, OptimaHaveNonincreasingDecrements) {
  for (int n = 4; n <= 20; n += 2) {
    for (int m = 3; m <= n / 2; ++m) {
      if (config_violation(Config{n, m})) continue;
      for (const auto& s : optimal_schedules(Config{n, m})) {
        for (std::size_t t = 1; t + 1 < s.size(); ++t) {
          ASSERT_LE(s[t] - s[t + 1], s[t - 1] - s[t]) << "N=" << n << " M=" << m;
        }
      }
    }
  }
}

TEST(ResultVectorEnumeration, CountsAndValidity) {
  EXPECT_EQ(all_result_vectors(2).size(), 2u);
  EXPECT_EQ(all_result_vectors(10).size(), 32u);
  EXPECT_THROW(all_result_vectors(5), Error);
}

}  // namespace
}  // namespace linelim::testing
