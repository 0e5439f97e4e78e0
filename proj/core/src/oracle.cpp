#include "idpcheck/oracle.hpp"

#include "idpcheck/errors.hpp"
#include "idpcheck/lp.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <unordered_set>

namespace idpcheck {

namespace {

__extension__ typedef __int128 Wide;

struct PointHash {
  std::size_t operator()(const Point& p) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (auto x : p) h = (h ^ static_cast<std::size_t>(x)) * 1099511628211ull;
    return h;
  }
};

using PointSet = std::unordered_set<Point, PointHash>;

// Row 0 is the all-ones degree row, row j+1 is coordinate j over the vertices.
std::vector<std::int64_t> homogenized_row(const ZeroOnePolytope& polytope, std::size_t row) {
  std::vector<std::int64_t> out(polytope.vertex_count(), 1);
  if (row == 0) return out;
  for (std::size_t i = 0; i < polytope.vertex_count(); ++i) out[i] = polytope.vertex(i)[row - 1];
  return out;
}

// Gauss-Jordan elimination on the columns of `basis` (as rows) to express `target`.
std::optional<std::vector<Rational>> combination_of(const std::vector<std::vector<std::int64_t>>& basis,
                                                    const std::vector<std::int64_t>& target) {
  const std::size_t k = basis.size();
  const std::size_t s = target.size();
  // s equations in k unknowns: sum_j lambda_j basis[j][i] = target[i].
  std::vector<std::vector<Rational>> m(s, std::vector<Rational>(k + 1));
  for (std::size_t i = 0; i < s; ++i) {
    for (std::size_t j = 0; j < k; ++j) m[i][j] = static_cast<long>(basis[j][i]);
    m[i][k] = static_cast<long>(target[i]);
  }
  std::vector<std::size_t> pivot_col;
  std::size_t r = 0;
  for (std::size_t c = 0; c < k && r < s; ++c) {
    std::size_t p = r;
    while (p < s && m[p][c] == 0) ++p;
    if (p == s) continue;
    std::swap(m[p], m[r]);
    Rational inv = 1 / m[r][c];
    for (auto& x : m[r]) x *= inv;
    for (std::size_t i = 0; i < s; ++i) {
      if (i == r || m[i][c] == 0) continue;
      Rational f = m[i][c];
      for (std::size_t j = 0; j <= k; ++j) m[i][j] -= f * m[r][j];
    }
    pivot_col.push_back(c);
    ++r;
  }
  for (std::size_t i = r; i < s; ++i)
    if (m[i][k] != 0) return std::nullopt;
  std::vector<Rational> lambda(k, Rational(0));
  for (std::size_t i = 0; i < r; ++i) lambda[pivot_col[i]] = m[i][k];
  return lambda;
}

struct DependentCoordinate {
  std::size_t coordinate;
  // coordinate = (sum_j weights[j] * basis_value[j]) / denominator
  std::vector<std::int64_t> weights;
  std::int64_t denominator;
};

struct Enumerator {
  const ZeroOnePolytope& polytope;
  std::int64_t t;
  std::vector<std::size_t> free_coords;  // coordinates in the row basis, in order
  std::vector<DependentCoordinate> dependent;
  std::vector<std::vector<std::int64_t>> coordinate_rows;
  std::vector<Point> out;
  Point values;  // values of free coordinates

  Enumerator(const ZeroOnePolytope& p, std::int64_t degree) : polytope(p), t(degree) {
    const std::size_t n = p.ambient_dim();
    std::vector<std::vector<std::int64_t>> basis{homogenized_row(p, 0)};
    std::vector<std::vector<Rational>> basis_q{std::vector<Rational>(p.vertex_count(), Rational(1))};
    for (std::size_t j = 0; j < n; ++j) {
      auto row = homogenized_row(p, j + 1);
      coordinate_rows.push_back(row);
      auto lambda = combination_of(basis, row);
      if (!lambda) {
        basis.push_back(row);
        free_coords.push_back(j);
        continue;
      }
      DependentCoordinate dc{j, {}, 1};
      Integer den = 1;
      for (const auto& l : *lambda) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), l.get_den_mpz_t());
      for (const auto& l : *lambda) dc.weights.push_back(to_int64(Rational(l * den)));
      dc.denominator = to_int64(den);
      dependent.push_back(std::move(dc));
    }
    // Relations found early involve only the basis rows known at that point.
    for (auto& dc : dependent) dc.weights.resize(basis.size(), 0);
  }

  LpProblem base_problem() const {
    LpProblem lp;
    lp.variables = polytope.vertex_count();
    lp.rows.push_back(homogenized_row(polytope, 0));
    lp.rhs.push_back(t);
    return lp;
  }

  void recurse(LpProblem& lp, std::size_t depth) {
    if (depth == free_coords.size()) {
      emit();
      return;
    }
    const auto& row = coordinate_rows[free_coords[depth]];
    lp.objective = row;
    LpSolution lo = solve_lp(lp);
    if (lo.status != LpStatus::optimal) return;
    for (auto& x : lp.objective) x = -x;
    LpSolution hi = solve_lp(lp);
    Integer lo_i, hi_i;
    mpz_cdiv_q(lo_i.get_mpz_t(), lo.objective.get_num_mpz_t(), lo.objective.get_den_mpz_t());
    Rational up = -hi.objective;
    mpz_fdiv_q(hi_i.get_mpz_t(), up.get_num_mpz_t(), up.get_den_mpz_t());
    const std::int64_t a = to_int64(lo_i);
    const std::int64_t b = to_int64(hi_i);
    lp.rows.push_back(row);
    lp.rhs.push_back(0);
    for (std::int64_t v = a; v <= b; ++v) {
      values.push_back(v);
      lp.rhs.back() = v;
      recurse(lp, depth + 1);
      values.pop_back();
    }
    lp.rows.pop_back();
    lp.rhs.pop_back();
  }

  void emit() {
    Point point(polytope.ambient_dim(), 0);
    for (std::size_t k = 0; k < free_coords.size(); ++k) point[free_coords[k]] = values[k];
    for (const auto& dc : dependent) {
      Wide acc = static_cast<Wide>(dc.weights[0]) * t;
      for (std::size_t k = 0; k < free_coords.size(); ++k) acc += static_cast<Wide>(dc.weights[k + 1]) * values[k];
      if (acc % dc.denominator != 0) return;
      point[dc.coordinate] = static_cast<std::int64_t>(acc / dc.denominator);
    }
    out.push_back(std::move(point));
  }
};

class Decomposer {
 public:
  Decomposer(const ZeroOnePolytope& polytope) : polytope_(polytope) {
    const std::size_t s = polytope.vertex_count();
    const std::size_t n = polytope.ambient_dim();
    // covers_[i][j]: some vertex with index >= i has coordinate j set.
    covers_.assign(s + 1, std::vector<bool>(n, false));
    for (std::size_t i = s; i-- > 0;)
      for (std::size_t j = 0; j < n; ++j) covers_[i][j] = covers_[i + 1][j] || polytope.vertex(i)[j] != 0;
  }

  std::optional<std::vector<std::int64_t>> run(Point point, std::int64_t t) {
    choice_.assign(polytope_.vertex_count(), 0);
    if (search(0, point, t)) return choice_;
    return std::nullopt;
  }

 private:
  bool search(std::size_t i, Point& rest, std::int64_t k) {
    const std::size_t s = polytope_.vertex_count();
    bool zero = true;
    for (std::size_t j = 0; j < rest.size(); ++j) {
      if (rest[j] < 0 || rest[j] > k) return false;
      if (rest[j] != 0) {
        zero = false;
        if (!covers_[i][j]) return false;
      }
    }
    if (k == 0) return zero;
    if (i == s) return false;
    Point key = rest;
    key.push_back(k);
    key.push_back(static_cast<std::int64_t>(i));
    if (failed_.count(key)) return false;
    const Point& a = polytope_.vertex(i);
    std::int64_t ub = k;
    for (std::size_t j = 0; j < rest.size(); ++j)
      if (a[j] != 0) ub = std::min(ub, rest[j]);
    for (std::int64_t d = 0; d <= ub; ++d) {
      if (d > 0)
        for (std::size_t j = 0; j < rest.size(); ++j) rest[j] -= a[j];
      choice_[i] = d;
      if (search(i + 1, rest, k - d)) {
        for (std::size_t j = 0; j < rest.size(); ++j) rest[j] += d * a[j];
        return true;
      }
    }
    for (std::size_t j = 0; j < rest.size(); ++j) rest[j] += ub * a[j];
    choice_[i] = 0;
    failed_.insert(std::move(key));
    return false;
  }

  const ZeroOnePolytope& polytope_;
  std::vector<std::vector<bool>> covers_;
  std::vector<std::int64_t> choice_;
  PointSet failed_;
};

}  // namespace

std::optional<RationalCombination> lp_membership(const ZeroOnePolytope& polytope, const Point& point, std::int64_t t) {
  if (point.size() != polytope.ambient_dim()) {
    throw std::invalid_argument("point has " + std::to_string(point.size()) + " coordinates, expected " +
                                std::to_string(polytope.ambient_dim()));
  }
  if (t < 0) throw std::invalid_argument("degree must be nonnegative");
  LpProblem lp;
  lp.variables = polytope.vertex_count();
  lp.rows.push_back(homogenized_row(polytope, 0));
  lp.rhs.push_back(t);
  for (std::size_t j = 0; j < point.size(); ++j) {
    lp.rows.push_back(homogenized_row(polytope, j + 1));
    lp.rhs.push_back(point[j]);
  }
  LpSolution sol = solve_lp(lp);
  if (sol.status != LpStatus::optimal) return std::nullopt;
  return RationalCombination{std::move(sol.values), t};
}

std::vector<Point> enumerate_lattice_points(const ZeroOnePolytope& polytope, std::int64_t t) {
  if (t < 0) throw std::invalid_argument("degree must be nonnegative");
  Enumerator e(polytope, t);
  LpProblem lp = e.base_problem();
  e.recurse(lp, 0);
  std::sort(e.out.begin(), e.out.end());
  return std::move(e.out);
}

std::optional<std::vector<std::int64_t>> integer_decomposition(const ZeroOnePolytope& polytope, const Point& point,
                                                               std::int64_t t) {
  if (point.size() != polytope.ambient_dim()) throw std::invalid_argument("point dimension mismatch");
  if (t < 0) return std::nullopt;
  return Decomposer(polytope).run(point, t);
}

std::int64_t default_degree_bound(const ZeroOnePolytope& polytope) {
  const auto s = static_cast<std::int64_t>(polytope.vertex_count());
  const auto d = static_cast<std::int64_t>(affine_dimension(polytope));
  return std::min(s - 1, std::max<std::int64_t>(1, d - 1));
}

OracleVerdict decide_normal_bruteforce(const ZeroOnePolytope& polytope, const OracleOptions& options) {
  OracleVerdict verdict;
  const std::int64_t natural = default_degree_bound(polytope);
  verdict.degree_bound = options.max_degree.value_or(natural);
  PointSet sums;
  for (const auto& v : polytope.vertices()) sums.insert(v);
  for (std::int64_t t = 2; t <= verdict.degree_bound; ++t) {
    PointSet next;
    next.reserve(sums.size() * 2);
    for (const auto& p : sums) {
      for (const auto& v : polytope.vertices()) {
        Point q = p;
        for (std::size_t j = 0; j < q.size(); ++j) q[j] += v[j];
        next.insert(std::move(q));
      }
    }
    sums = std::move(next);
    for (const auto& point : enumerate_lattice_points(polytope, t)) {
      if (options.max_points && verdict.points_examined >= *options.max_points) {
        verdict.status = OracleStatus::inconclusive;
        verdict.note = "lattice point budget exhausted at degree " + std::to_string(t);
        return verdict;
      }
      ++verdict.points_examined;
      if (sums.count(point)) continue;
      auto combo = lp_membership(polytope, point, t);
      if (!combo) throw std::logic_error("enumerated point is not in the dilation");
      Witness w = make_witness(polytope, combo->coefficients);
      WitnessCheck check = verify_witness(polytope, w);
      if (!check.valid) throw std::logic_error("oracle produced an invalid witness: " + check.reason);
      verdict.status = OracleStatus::not_normal;
      verdict.witness = std::move(w);
      return verdict;
    }
    verdict.degrees_checked = t;
  }
  if (verdict.degree_bound < natural) {
    verdict.status = OracleStatus::inconclusive;
    verdict.note = "degree cap " + std::to_string(verdict.degree_bound) + " is below the bound " +
                   std::to_string(natural);
  } else {
    verdict.status = OracleStatus::normal;
  }
  return verdict;
}

WitnessCheck verify_witness(const ZeroOnePolytope& polytope, const Witness& witness) {
  if (witness.coefficients.size() != polytope.vertex_count()) {
    return {false, "witness has " + std::to_string(witness.coefficients.size()) + " coefficients for " +
                       std::to_string(polytope.vertex_count()) + " vertices"};
  }
  if (auto bad = witness_shape_violation(witness.coefficients)) return {false, *bad};
  Witness derived;
  try {
    derived = make_witness(polytope, witness.coefficients);
  } catch (const CertificateError& e) {
    return {false, e.what()};
  }
  if (derived.degree != witness.degree) {
    return {false, "stated degree " + std::to_string(witness.degree) + " differs from the coefficient sum " +
                       std::to_string(derived.degree)};
  }
  if (derived.point != witness.point) {
    return {false, "stated point " + format_point(witness.point) + " differs from the combination " +
                       format_point(derived.point)};
  }
  if (!lp_membership(polytope, derived.point, derived.degree)) {
    return {false, "point " + format_point(derived.point) + " is not in the dilation"};
  }
  if (auto d = integer_decomposition(polytope, derived.point, derived.degree)) {
    std::string text;
    for (std::size_t i = 0; i < d->size(); ++i) text += (i ? "," : "") + std::to_string((*d)[i]);
    return {false, "point " + format_point(derived.point) + " decomposes with multiplicities (" + text + ")"};
  }
  return {true, ""};
}

WitnessCheck verify_coefficients(const ZeroOnePolytope& polytope, const std::vector<Rational>& coefficients) {
  if (coefficients.size() != polytope.vertex_count()) {
    return {false, "witness has " + std::to_string(coefficients.size()) + " coefficients for " +
                       std::to_string(polytope.vertex_count()) + " vertices"};
  }
  if (auto bad = witness_shape_violation(coefficients)) return {false, *bad};
  try {
    return verify_witness(polytope, make_witness(polytope, coefficients));
  } catch (const CertificateError& e) {
    return {false, e.what()};
  }
}

}  // namespace idpcheck
