#pragma once

#include "idpcheck/model.hpp"
#include "idpcheck/witness.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace idpcheck {

struct RationalCombination {
  std::vector<Rational> coefficients;
  std::int64_t degree = 0;
};

/// Nonnegative c with sum c = t and sum c_i a_i = a, if any. Throws
/// std::invalid_argument on a dimension mismatch or t < 0.
std::optional<RationalCombination> lp_membership(const ZeroOnePolytope& polytope, const Point& point, std::int64_t t);

/// All integer points of tP, sorted lexicographically.
std::vector<Point> enumerate_lattice_points(const ZeroOnePolytope& polytope, std::int64_t t);

/// Lexicographically least d in N^s with sum d = t and sum d_i a_i = a.
std::optional<std::vector<std::int64_t>> integer_decomposition(const ZeroOnePolytope& polytope, const Point& point,
                                                               std::int64_t t);

/// min(s-1, max(1, d-1)) with d the affine dimension.
std::int64_t default_degree_bound(const ZeroOnePolytope& polytope);

struct OracleOptions {
  /// Replaces the default degree bound.
  std::optional<std::int64_t> max_degree;
  /// Stop after examining this many lattice points.
  std::optional<std::size_t> max_points;
};

enum class OracleStatus { normal, not_normal, inconclusive };

struct OracleVerdict {
  OracleStatus status = OracleStatus::inconclusive;
  std::optional<Witness> witness;
  std::int64_t degree_bound = 0;
  /// Degrees 2..degrees_checked were fully examined.
  std::int64_t degrees_checked = 1;
  std::size_t points_examined = 0;
  std::string note;
};

/// Checks every lattice point of tP for 2 <= t <= bound. The reported witness
/// is the lexicographically least failing point at the least failing degree.
OracleVerdict decide_normal_bruteforce(const ZeroOnePolytope& polytope, const OracleOptions& options = {});

struct WitnessCheck {
  bool valid = false;
  std::string reason;
};

WitnessCheck verify_witness(const ZeroOnePolytope& polytope, const Witness& witness);

/// Verifies coefficients alone, deriving the degree and point.
WitnessCheck verify_coefficients(const ZeroOnePolytope& polytope, const std::vector<Rational>& coefficients);

}  // namespace idpcheck
