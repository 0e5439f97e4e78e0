#include "fixtures.hpp"
#include "oracles.hpp"

#include "idpcheck/cycles.hpp"
#include "idpcheck/random_ideals.hpp"

#include <gtest/gtest.h>

using namespace idpcheck;

TEST(SpecialOddCycle, Triangle) {
  auto h = build_from_ideal(testkit::tri());
  auto r = find_special_odd_cycle(h);
  ASSERT_EQ(r.status, SearchStatus::found);
  EXPECT_EQ(r.cycle->vertices, (std::vector<std::size_t>{0, 1, 2}));
  EXPECT_FALSE(cycle_violation(h, *r.cycle, true).has_value());
  EXPECT_EQ(format_cycle(*r.cycle), "1,{1,2},2,{2,3},3,{1,3}");
}

TEST(SpecialOddCycle, BipartiteHasNone) {
  auto h = build_from_ideal(testkit::k24());
  EXPECT_EQ(find_special_odd_cycle(h).status, SearchStatus::none);
  EXPECT_EQ(is_balanced(h).status, Balance::balanced);
}

TEST(SpecialOddCycle, BigEdgeBlocksTheCycle) {
  // The only way round uses an edge holding all three vertices.
  auto h = build_from_ideal(testkit::ideal("a*p*x, a*b*q*x, b*r*x"));
  EXPECT_EQ(find_special_odd_cycle(h).status, SearchStatus::none);
  EXPECT_FALSE(testkit::has_special_odd_cycle(h));
}

TEST(SpecialOddCycle, BudgetIsReported) {
  auto h = build_from_ideal(testkit::ih1());
  auto r = find_special_odd_cycle(h, 1);
  EXPECT_NE(r.status, SearchStatus::none);
  EXPECT_EQ(is_balanced(h, 1).status == Balance::unknown, r.status == SearchStatus::budget_exceeded);
}

TEST(SpecialOddCycle, AgreesWithExhaustiveSearch) {
  std::size_t found = 0;
  for (std::size_t profile = 2; profile <= 4; ++profile) {
    RandomIdealOptions opts{.max_variables = 9, .max_generators = 7, .max_edge = profile};
    for (const auto& i : random_ideals(100 + profile, 80, opts)) {
      auto h = build_from_ideal(i);
      auto r = find_special_odd_cycle(h);
      ASSERT_NE(r.status, SearchStatus::budget_exceeded);
      EXPECT_EQ(r.status == SearchStatus::found, testkit::has_special_odd_cycle(h)) << i.generators_string();
      if (r.cycle) {
        ++found;
        EXPECT_TRUE(r.cycle->odd());
        EXPECT_FALSE(cycle_violation(h, *r.cycle, true).has_value()) << format_cycle(*r.cycle);
      }
    }
  }
  EXPECT_GT(found, 10u);
}

TEST(CycleViolation, RejectsBadSequences) {
  auto h = build_from_ideal(testkit::tri());
  Cycle ok{{0, 1, 2}, {{0, 1}, {1, 2}, {0, 2}}};
  EXPECT_FALSE(cycle_violation(h, ok, true).has_value());
  Cycle missing{{0, 1, 2}, {{0, 1}, {1, 2}, {0, 1}}};
  EXPECT_TRUE(cycle_violation(h, missing, false).has_value());
  Cycle repeated{{0, 1, 0}, {{0, 1}, {0, 1}, {0, 1}}};
  EXPECT_TRUE(cycle_violation(h, repeated, false).has_value());
  Cycle not_edge{{0, 1}, {{0, 1}, {0, 1, 2}}};
  EXPECT_TRUE(cycle_violation(h, not_edge, false).has_value());

  auto big = build_from_ideal(testkit::ideal("a*p*x, a*b*q*x, b*r*x"));
  Cycle through_big{{0, 1, 2}, {{0, 1}, {1, 2}, {0, 1, 2}}};
  EXPECT_FALSE(cycle_violation(big, through_big, false).has_value());
  EXPECT_TRUE(cycle_violation(big, through_big, true).has_value());
}
