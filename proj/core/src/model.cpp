#include "idpcheck/model.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace idpcheck {

Monomial::Monomial(std::vector<std::size_t> support) : support_(std::move(support)) {
  if (support_.empty()) throw std::invalid_argument("monomial must have a nonempty support");
  std::sort(support_.begin(), support_.end());
  if (std::adjacent_find(support_.begin(), support_.end()) != support_.end()) {
    throw std::invalid_argument("monomial is not squarefree");
  }
}

bool Monomial::contains(std::size_t variable) const {
  return std::binary_search(support_.begin(), support_.end(), variable);
}

bool Monomial::divides(const Monomial& other) const {
  return std::includes(other.support_.begin(), other.support_.end(), support_.begin(), support_.end());
}

SquarefreeIdeal::SquarefreeIdeal(std::vector<std::string> variables, std::vector<Monomial> generators)
    : variables_(std::move(variables)), generators_(std::move(generators)) {
  std::set<std::string> seen;
  for (const auto& name : variables_) {
    if (name.empty()) throw std::invalid_argument("empty variable name");
    if (!seen.insert(name).second) throw std::invalid_argument("duplicate variable '" + name + "'");
  }
  for (const auto& g : generators_) {
    if (g.degree() == 0) throw std::invalid_argument("empty generator");
    if (g.support().back() >= variables_.size()) {
      throw std::invalid_argument("generator refers to an undeclared variable");
    }
  }
  for (std::size_t i = 0; i < generators_.size(); ++i) {
    for (std::size_t j = 0; j < generators_.size(); ++j) {
      if (i == j) continue;
      if (generators_[i] == generators_[j]) {
        throw std::invalid_argument("duplicate generator " + generator_string(i));
      }
      if (generators_[i].divides(generators_[j])) {
        throw std::invalid_argument("generators are not minimal: " + generator_string(i) +
                                    " divides " + generator_string(j));
      }
    }
  }
}

std::string SquarefreeIdeal::generator_string(std::size_t index) const {
  std::string out;
  for (std::size_t v : generators_.at(index).support()) {
    if (!out.empty()) out += '*';
    out += variables_.at(v);
  }
  return out;
}

std::string SquarefreeIdeal::generators_string() const {
  std::string out;
  for (std::size_t i = 0; i < generators_.size(); ++i) {
    if (i > 0) out += ", ";
    out += generator_string(i);
  }
  return out;
}

MinimalizeResult minimalize_generators(std::vector<std::string> variables,
                                       const std::vector<Monomial>& generators) {
  if (generators.empty()) throw std::invalid_argument("ideal has no generators");
  std::vector<Monomial> kept;
  std::vector<std::size_t> dropped;
  std::vector<std::string> reasons;
  auto name = [&](const Monomial& m) {
    std::string out;
    for (std::size_t v : m.support()) {
      if (!out.empty()) out += '*';
      out += v < variables.size() ? variables[v] : "?";
    }
    return out;
  };
  for (std::size_t i = 0; i < generators.size(); ++i) {
    const Monomial& g = generators[i];
    bool drop = false;
    for (std::size_t j = 0; j < generators.size() && !drop; ++j) {
      if (j == i) continue;
      const Monomial& h = generators[j];
      if (h == g) {
        if (j < i) {
          drop = true;
          reasons.push_back("dropped duplicate generator " + name(g));
        }
      } else if (h.divides(g)) {
        drop = true;
        reasons.push_back("dropped non-minimal generator " + name(g) + " (divisible by " + name(h) + ")");
      }
    }
    if (drop) {
      dropped.push_back(i);
    } else {
      kept.push_back(g);
    }
  }
  return {SquarefreeIdeal(std::move(variables), std::move(kept)), std::move(dropped), std::move(reasons)};
}

ZeroOnePolytope::ZeroOnePolytope(std::size_t ambient_dim, std::vector<Point> vertices)
    : ambient_dim_(ambient_dim), vertices_(std::move(vertices)) {
  if (vertices_.empty()) throw std::invalid_argument("polytope needs at least one vertex");
  std::set<Point> seen;
  for (const auto& v : vertices_) {
    if (v.size() != ambient_dim_) throw std::invalid_argument("vertex has the wrong dimension");
    for (auto x : v) {
      if (x != 0 && x != 1) throw std::invalid_argument("vertex coordinate outside {0,1}");
    }
    if (!seen.insert(v).second) throw std::invalid_argument("duplicate vertex");
  }
}

IntegerMatrix::IntegerMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, Integer(0)) {}

IntegerMatrix IntegerMatrix::identity(std::size_t n) {
  IntegerMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntegerMatrix IntegerMatrix::transpose() const {
  IntegerMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
  return t;
}

std::vector<Integer> IntegerMatrix::column(std::size_t c) const {
  std::vector<Integer> out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out[r] = at(r, c);
  return out;
}

std::vector<Integer> IntegerMatrix::apply(const std::vector<Integer>& x) const {
  if (x.size() != cols_) throw std::invalid_argument("matrix-vector dimension mismatch");
  std::vector<Integer> out(rows_, Integer(0));
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) out[r] += at(r, c) * x[c];
  return out;
}

IntegerMatrix operator*(const IntegerMatrix& a, const IntegerMatrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product dimension mismatch");
  IntegerMatrix out(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      if (a.at(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) out.at(i, j) += a.at(i, k) * b.at(k, j);
    }
  return out;
}

ZeroOnePolytope polytope_from_ideal(const SquarefreeIdeal& ideal) {
  std::vector<Point> vertices;
  vertices.reserve(ideal.generator_count());
  for (const auto& g : ideal.generators()) {
    Point v(ideal.variable_count(), 0);
    for (std::size_t x : g.support()) v[x] = 1;
    vertices.push_back(std::move(v));
  }
  return ZeroOnePolytope(ideal.variable_count(), std::move(vertices));
}

bool has_antichain_supports(const ZeroOnePolytope& polytope) {
  const auto& vs = polytope.vertices();
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (std::all_of(vs[i].begin(), vs[i].end(), [](auto x) { return x == 0; })) return false;
    for (std::size_t j = 0; j < vs.size(); ++j) {
      if (i == j) continue;
      bool subset = true;
      for (std::size_t k = 0; k < vs[i].size() && subset; ++k) subset = vs[i][k] <= vs[j][k];
      if (subset) return false;
    }
  }
  return true;
}

SquarefreeIdeal ideal_from_polytope(const ZeroOnePolytope& polytope) {
  if (!has_antichain_supports(polytope)) {
    throw std::invalid_argument(
        "vertex supports are not an antichain; the vertices are not the minimal generators of an ideal");
  }
  std::vector<std::string> names;
  for (std::size_t j = 0; j < polytope.ambient_dim(); ++j) names.push_back("x" + std::to_string(j + 1));
  std::vector<Monomial> gens;
  for (const auto& v : polytope.vertices()) {
    std::vector<std::size_t> support;
    for (std::size_t j = 0; j < v.size(); ++j)
      if (v[j] != 0) support.push_back(j);
    gens.emplace_back(std::move(support));
  }
  return SquarefreeIdeal(std::move(names), std::move(gens));
}

GeneratorDegrees generator_degrees(const SquarefreeIdeal& ideal) {
  GeneratorDegrees out;
  for (const auto& g : ideal.generators()) out.degrees.push_back(g.degree());
  out.uniform = std::adjacent_find(out.degrees.begin(), out.degrees.end(), std::not_equal_to<>()) ==
                out.degrees.end();
  return out;
}

std::size_t rational_rank(const std::vector<std::vector<Rational>>& input) {
  auto rows = input;
  if (rows.empty()) return 0;
  std::size_t cols = rows.front().size();
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][c] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[pivot], rows[rank]);
    for (std::size_t r = rank + 1; r < rows.size(); ++r) {
      if (rows[r][c] == 0) continue;
      Rational factor = rows[r][c] / rows[rank][c];
      for (std::size_t k = c; k < cols; ++k) rows[r][k] -= factor * rows[rank][k];
    }
    ++rank;
  }
  return rank;
}

std::size_t affine_dimension(const ZeroOnePolytope& polytope) {
  const auto& vs = polytope.vertices();
  std::vector<std::vector<Rational>> diffs;
  for (std::size_t i = 1; i < vs.size(); ++i) {
    std::vector<Rational> row(polytope.ambient_dim());
    for (std::size_t k = 0; k < row.size(); ++k) row[k] = Rational(vs[i][k] - vs[0][k]);
    diffs.push_back(std::move(row));
  }
  return rational_rank(diffs);
}

}  // namespace idpcheck
