#pragma once

#include "idpcheck/numeric.hpp"

#include <compare>
#include <cstddef>
#include <string>
#include <vector>

namespace idpcheck {

/// Squarefree monomial, stored as its sorted support of variable indices.
class Monomial {
 public:
  Monomial() = default;
  /// Throws std::invalid_argument on an empty support or a repeated index.
  explicit Monomial(std::vector<std::size_t> support);

  const std::vector<std::size_t>& support() const noexcept { return support_; }
  std::size_t degree() const noexcept { return support_.size(); }
  bool contains(std::size_t variable) const;
  /// True when this monomial divides `other`, i.e. its support is a subset.
  bool divides(const Monomial& other) const;

  friend bool operator==(const Monomial&, const Monomial&) = default;
  friend auto operator<=>(const Monomial&, const Monomial&) = default;

 private:
  std::vector<std::size_t> support_;
};

/// Minimally generated squarefree monomial ideal over a named, ordered
/// variable alphabet. Generator order is significant: generator i is vertex i
/// of the polytope and of the labeled hypergraph.
class SquarefreeIdeal {
 public:
  /// Validates names (nonempty, unique), generator indices, pairwise
  /// distinctness and minimality. Throws std::invalid_argument.
  SquarefreeIdeal(std::vector<std::string> variables, std::vector<Monomial> generators);

  const std::vector<std::string>& variables() const noexcept { return variables_; }
  const std::vector<Monomial>& generators() const noexcept { return generators_; }
  std::size_t variable_count() const noexcept { return variables_.size(); }
  std::size_t generator_count() const noexcept { return generators_.size(); }

  /// "a*f*h"
  std::string generator_string(std::size_t index) const;
  /// "a*f*h, a*e*f*g*i*j, ..."
  std::string generators_string() const;

  friend bool operator==(const SquarefreeIdeal&, const SquarefreeIdeal&) = default;

 private:
  std::vector<std::string> variables_;
  std::vector<Monomial> generators_;
};

struct MinimalizeResult {
  SquarefreeIdeal ideal;
  /// Input positions of generators that were dropped (duplicates or multiples).
  std::vector<std::size_t> dropped;
  std::vector<std::string> warnings;
};

/// Keeps the divisibility-minimal generators in first-occurrence order.
/// Throws std::invalid_argument on an empty generator list.
MinimalizeResult minimalize_generators(std::vector<std::string> variables,
                                       const std::vector<Monomial>& generators);

/// Distinct 0-1 vertices in N^n. Every lattice point of the hull of such a set
/// is one of the vertices.
class ZeroOnePolytope {
 public:
  /// Throws std::invalid_argument on an empty vertex list, a wrong length,
  /// an entry outside {0,1}, or a repeated vertex.
  ZeroOnePolytope(std::size_t ambient_dim, std::vector<Point> vertices);

  std::size_t ambient_dim() const noexcept { return ambient_dim_; }
  std::size_t vertex_count() const noexcept { return vertices_.size(); }
  const std::vector<Point>& vertices() const noexcept { return vertices_; }
  const Point& vertex(std::size_t i) const { return vertices_.at(i); }

  friend bool operator==(const ZeroOnePolytope&, const ZeroOnePolytope&) = default;

 private:
  std::size_t ambient_dim_;
  std::vector<Point> vertices_;
};

/// Dense row-major matrix of arbitrary-precision integers.
class IntegerMatrix {
 public:
  IntegerMatrix() = default;
  IntegerMatrix(std::size_t rows, std::size_t cols);

  static IntegerMatrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Integer& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Integer& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  IntegerMatrix transpose() const;
  std::vector<Integer> column(std::size_t c) const;
  std::vector<Integer> apply(const std::vector<Integer>& x) const;

  friend IntegerMatrix operator*(const IntegerMatrix& a, const IntegerMatrix& b);
  friend bool operator==(const IntegerMatrix&, const IntegerMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

/// Vertex i is the exponent vector of generator i over the ideal's variable order.
ZeroOnePolytope polytope_from_ideal(const SquarefreeIdeal& ideal);

/// Inverse direction for polytopes given by coordinates. Variables are named
/// x1..xn. Throws std::invalid_argument when a vertex support contains another
/// (the vertex set is then not the minimal generating set of an ideal) or a
/// vertex is the origin.
SquarefreeIdeal ideal_from_polytope(const ZeroOnePolytope& polytope);

/// True iff no vertex support contains another and the origin is not a vertex.
bool has_antichain_supports(const ZeroOnePolytope& polytope);

struct GeneratorDegrees {
  std::vector<std::size_t> degrees;
  bool uniform = true;
};

GeneratorDegrees generator_degrees(const SquarefreeIdeal& ideal);

/// Dimension of the affine hull of the vertices (0 for a single vertex).
std::size_t affine_dimension(const ZeroOnePolytope& polytope);

/// Rank over Q of an integer matrix given as rows.
std::size_t rational_rank(const std::vector<std::vector<Rational>>& rows);

}  // namespace idpcheck
