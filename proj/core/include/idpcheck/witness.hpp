#pragma once

#include "idpcheck/hypergraph.hpp"
#include "idpcheck/model.hpp"

#include <optional>
#include <string>
#include <vector>

namespace idpcheck {

/// Rational coefficients 0 <= c_i < 1 with integral degree t = sum c_i and
/// integral point a = sum c_i a_i that is not a sum of t vertices.
struct Witness {
  std::vector<Rational> coefficients;
  std::int64_t degree = 0;
  Point point;

  friend bool operator==(const Witness&, const Witness&) = default;
};

/// Computes degree and point from coefficients. Throws CertificateError when
/// the count differs from the vertex count, or the degree or point is not
/// integral.
Witness make_witness(const ZeroOnePolytope& polytope, const std::vector<Rational>& coefficients);

/// Same, over the polytope of ideal_of(hypergraph): the point has one
/// coordinate per label, in label order.
Witness make_witness(const LabeledHypergraph& hypergraph, const std::vector<Rational>& coefficients);

/// Checks only the coefficient range and degree clauses.
std::optional<std::string> witness_shape_violation(const std::vector<Rational>& coefficients);

/// "(1, 1/2, 1/2)"
std::string format_rational_vector(const std::vector<Rational>& values);
std::string format_point(const Point& point);

}  // namespace idpcheck
