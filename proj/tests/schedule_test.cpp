#include "linelim/schedule.hpp"

#include <gtest/gtest.h>

#include "linelim/error.hpp"

namespace linelim {
namespace {

bool has(const std::vector<ScheduleViolation>& v, ScheduleConstraint c, int index) {
  for (const auto& x : v) {
    if (x.constraint == c && x.index == index) return true;
  }
  return false;
}

TEST(BuildScheduleTest, PaperExample) {
  const auto s = build_schedule(validate_config(134, 15));
  EXPECT_EQ(s.counts, (std::vector<int>{134, 122, 110, 98, 86, 76, 66, 56, 46, 36, 26, 16, 8, 4, 2}));
  EXPECT_TRUE(validate_schedule(s, validate_config(134, 15)).empty());
}

TEST(BuildScheduleTest, PureLinearAndPureKnockout) {
  EXPECT_EQ(build_schedule(validate_config(12, 6)).counts, (std::vector<int>{12, 10, 8, 6, 4, 2}));
  EXPECT_EQ(build_schedule(validate_config(8, 3)).counts, (std::vector<int>{8, 4, 2}));
  EXPECT_EQ(build_schedule(validate_config(64, 6)).counts, (std::vector<int>{64, 32, 16, 8, 4, 2}));
}

TEST(BuildScheduleTest, DegenerateLengths) {
  EXPECT_EQ(build_schedule(validate_config(2, 1)).counts, (std::vector<int>{2}));
  EXPECT_EQ(build_schedule(validate_config(4, 2)).counts, (std::vector<int>{4, 2}));
}

TEST(BuildScheduleTest, RejectsInvalidConfig) {
  try {
    build_schedule(Config{8, 5});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kInvalidConfig);
  }
}

TEST(BuildScheduleTest, EliminatedAfter) {
  const auto s = build_schedule(validate_config(134, 15));
  EXPECT_EQ(s.eliminated_after(0), 12);
  EXPECT_EQ(s.eliminated_after(13), 2);
  EXPECT_EQ(s.eliminated_after(14), 0);
  EXPECT_THROW(s.eliminated_after(15), Error);
}

TEST(ScheduleObjectiveTest, Examples) {
  EXPECT_EQ(schedule_objective(std::vector<int>{12, 10, 8, 6, 4, 2}), 0);
  EXPECT_EQ(schedule_objective(build_schedule(validate_config(134, 15))), 10);
  EXPECT_EQ(schedule_objective(std::vector<int>{8, 4, 2}), 2);
  try {
    schedule_objective(std::vector<int>{4, 2});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kTooShort);
  }
}

TEST(ValidateScheduleTest, ReportsEachViolation) {
  const auto over_halved = validate_schedule({{8, 2}}, Config{8, 2});
  EXPECT_TRUE(has(over_halved, ScheduleConstraint::kMoreThanHalved, 0));
  EXPECT_TRUE(has(over_halved, ScheduleConstraint::kConfig, -1));

  const auto odd = validate_schedule({{8, 5, 2}}, Config{8, 3});
  EXPECT_TRUE(has(odd, ScheduleConstraint::kOddDecrement, 0));
  EXPECT_TRUE(has(odd, ScheduleConstraint::kOddDecrement, 1));
  EXPECT_FALSE(has(odd, ScheduleConstraint::kConfig, -1));

  const auto rising = validate_schedule({{12, 10, 6, 4, 2}}, Config{12, 5});
  EXPECT_TRUE(has(rising, ScheduleConstraint::kIncreasingDecrement, 1));

  const auto ends = validate_schedule({{10, 8, 4}}, Config{12, 4});
  EXPECT_TRUE(has(ends, ScheduleConstraint::kLength, -1));
  EXPECT_TRUE(has(ends, ScheduleConstraint::kFirstCount, 0));
  EXPECT_TRUE(has(ends, ScheduleConstraint::kLastCount, 2));

  const auto stalls = validate_schedule({{8, 8, 4, 2}}, Config{8, 4});
  EXPECT_TRUE(has(stalls, ScheduleConstraint::kDecrementTooSmall, 0));
}

TEST(ScheduleProperty, ValidForEveryConfigUpTo200Players) {
  for (int n = 2; n <= 200; n += 2) {
    for (int m = 1; m <= n / 2; ++m) {
      const Config cfg{n, m};
      if (config_violation(cfg)) continue;
      const auto s = build_schedule(cfg);
      const auto violations = validate_schedule(s, cfg);
      ASSERT_TRUE(violations.empty()) << "N=" << n << " M=" << m << ": " << violations.front().message;
      for (int t = 0; t + 1 < s.rounds(); ++t) ASSERT_GE(s.eliminated_after(t), 2);
      if (m >= 3) {
        // Nonincreasing decrements: objective collapses to first minus last.
        ASSERT_EQ(schedule_objective(s), s.eliminated_after(0) - 2);
      }
    }
  }
}

}  // namespace
}  // namespace linelim
