#include "idpcheck/witness.hpp"

#include "idpcheck/errors.hpp"

namespace idpcheck {

namespace {

Witness build(const std::vector<Point>& vertices, std::size_t dim, const std::vector<Rational>& coefficients) {
  if (coefficients.size() != vertices.size()) {
    throw CertificateError("witness has " + std::to_string(coefficients.size()) + " coefficients for " +
                           std::to_string(vertices.size()) + " vertices");
  }
  Rational total = 0;
  std::vector<Rational> point(dim, Rational(0));
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    total += coefficients[i];
    for (std::size_t j = 0; j < dim; ++j)
      if (vertices[i][j] != 0) point[j] += coefficients[i];
  }
  if (!is_integral(total)) throw CertificateError("degree " + to_fraction_string(total) + " is not an integer");
  for (const auto& x : point)
    if (!is_integral(x)) throw CertificateError("point " + format_rational_vector(point) + " is not integral");
  Witness w;
  w.coefficients = coefficients;
  w.degree = to_int64(total);
  for (const auto& x : point) w.point.push_back(to_int64(x));
  return w;
}

}  // namespace

Witness make_witness(const ZeroOnePolytope& polytope, const std::vector<Rational>& coefficients) {
  return build(polytope.vertices(), polytope.ambient_dim(), coefficients);
}

Witness make_witness(const LabeledHypergraph& hypergraph, const std::vector<Rational>& coefficients) {
  std::vector<Point> vertices(hypergraph.vertex_count(), Point(hypergraph.labels().size(), 0));
  for (std::size_t l = 0; l < hypergraph.labels().size(); ++l)
    for (auto v : hypergraph.labels()[l].vertices) vertices[v][l] = 1;
  return build(vertices, hypergraph.labels().size(), coefficients);
}

std::optional<std::string> witness_shape_violation(const std::vector<Rational>& coefficients) {
  Rational total = 0;
  for (std::size_t i = 0; i < coefficients.size(); ++i) {
    const auto& c = coefficients[i];
    if (c < 0 || c >= 1) {
      return "coefficient c_" + std::to_string(i + 1) + " = " + to_fraction_string(c) + " is outside [0, 1)";
    }
    total += c;
  }
  if (!is_integral(total)) return "sum of coefficients " + to_fraction_string(total) + " is not an integer";
  return std::nullopt;
}

std::string format_rational_vector(const std::vector<Rational>& values) {
  std::string out = "(";
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i > 0) out += ", ";
    out += is_integral(values[i]) ? values[i].get_num().get_str() : values[i].get_str();
  }
  return out + ")";
}

std::string format_point(const Point& point) {
  std::string out = "(";
  for (std::size_t i = 0; i < point.size(); ++i) {
    if (i > 0) out += ", ";
    out += std::to_string(point[i]);
  }
  return out + ")";
}

}  // namespace idpcheck
