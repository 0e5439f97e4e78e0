#pragma once

#include "idpcheck/numeric.hpp"

#include <cstdint>
#include <vector>

namespace idpcheck {

/// minimize objective . x  subject to  rows x = rhs, x >= 0.
struct LpProblem {
  std::vector<std::vector<std::int64_t>> rows;
  std::vector<std::int64_t> rhs;
  std::vector<std::int64_t> objective;  // empty: pure feasibility
  std::size_t variables = 0;
};

enum class LpStatus { optimal, infeasible, unbounded };

struct LpSolution {
  LpStatus status = LpStatus::infeasible;
  std::vector<Rational> values;
  Rational objective;
};

/// Exact two-phase simplex with Bland's rule. Pivoting is fraction-free
/// (integer-preserving), first in checked 64-bit arithmetic and, on overflow,
/// again with arbitrary precision. Throws std::invalid_argument on a shape
/// mismatch.
LpSolution solve_lp(const LpProblem& problem);

}  // namespace idpcheck
