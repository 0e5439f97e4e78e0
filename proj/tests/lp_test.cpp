#include "idpcheck/lp.hpp"

#include <gtest/gtest.h>

using namespace idpcheck;

namespace {

void expect_feasible(const LpProblem& p, const LpSolution& s) {
  ASSERT_EQ(s.values.size(), p.variables);
  for (const auto& v : s.values) EXPECT_GE(v, 0);
  for (std::size_t r = 0; r < p.rows.size(); ++r) {
    Rational lhs = 0;
    for (std::size_t j = 0; j < p.variables; ++j) lhs += Rational(static_cast<long>(p.rows[r][j])) * s.values[j];
    EXPECT_EQ(lhs, Rational(static_cast<long>(p.rhs[r])));
  }
}

}  // namespace

TEST(Lp, SimpleOptimum) {
  // min -x - y  s.t.  x + 2y + s1 = 4,  3x + y + s2 = 6
  LpProblem p{{{1, 2, 1, 0}, {3, 1, 0, 1}}, {4, 6}, {-1, -1, 0, 0}, 4};
  auto s = solve_lp(p);
  ASSERT_EQ(s.status, LpStatus::optimal);
  expect_feasible(p, s);
  EXPECT_EQ(s.objective, Rational(-14, 5));
  EXPECT_EQ(s.values[0], Rational(8, 5));
  EXPECT_EQ(s.values[1], Rational(6, 5));
}

TEST(Lp, Feasibility) {
  LpProblem p{{{1, 1, 1}, {2, 0, 1}}, {1, 1}, {}, 3};
  auto s = solve_lp(p);
  ASSERT_EQ(s.status, LpStatus::optimal);
  expect_feasible(p, s);
}

TEST(Lp, Infeasible) {
  LpProblem p{{{1, 1}, {1, 1}}, {1, 2}, {}, 2};
  EXPECT_EQ(solve_lp(p).status, LpStatus::infeasible);
  LpProblem neg{{{1, 1}}, {-1}, {}, 2};
  EXPECT_EQ(solve_lp(neg).status, LpStatus::infeasible);
}

TEST(Lp, Unbounded) {
  LpProblem p{{{1, -1}}, {1}, {0, -1}, 2};
  EXPECT_EQ(solve_lp(p).status, LpStatus::unbounded);
}

TEST(Lp, RedundantRows) {
  LpProblem p{{{1, 1, 0}, {2, 2, 0}, {0, 1, 1}}, {2, 4, 1}, {1, 0, 1}, 3};
  auto s = solve_lp(p);
  ASSERT_EQ(s.status, LpStatus::optimal);
  expect_feasible(p, s);
  EXPECT_EQ(s.objective, 1);
}

TEST(Lp, LargeCoefficientsFallBackToBigIntegers) {
  const std::int64_t big = 3'000'000'007;
  LpProblem p{{{big, big - 1, 1, 0}, {big - 2, big, 0, 1}}, {big * 2, big * 3}, {-1, -1, 0, 0}, 4};
  auto s = solve_lp(p);
  ASSERT_EQ(s.status, LpStatus::optimal);
  expect_feasible(p, s);
}

TEST(Lp, ShapeMismatchThrows) {
  LpProblem p{{{1, 1}}, {1, 2}, {}, 2};
  EXPECT_THROW(solve_lp(p), std::invalid_argument);
  LpProblem q{{{1}}, {1}, {}, 2};
  EXPECT_THROW(solve_lp(q), std::invalid_argument);
}

TEST(Lp, NoRows) {
  LpProblem p{{}, {}, {1, 2}, 2};
  auto s = solve_lp(p);
  ASSERT_EQ(s.status, LpStatus::optimal);
  EXPECT_EQ(s.objective, 0);
}
