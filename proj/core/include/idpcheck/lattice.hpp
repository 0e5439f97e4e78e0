#pragma once

#include "idpcheck/model.hpp"

#include <optional>
#include <string>
#include <vector>

namespace idpcheck {

/// left * input * right == diagonal, with left and right unimodular and the
/// nonzero diagonal entries d_1 | d_2 | ... positive.
struct SmithDecomposition {
  IntegerMatrix diagonal;
  IntegerMatrix left;
  IntegerMatrix right;
  /// The nonzero diagonal entries, in order.
  std::vector<Integer> invariant_factors;
};

/// Pivoting is deterministic: smallest nonzero magnitude, first in row-major order.
SmithDecomposition smith_normal_form(const IntegerMatrix& input);

/// Integer lattice spanned by the columns of a matrix, kept as a row-style
/// Hermite basis for exact membership tests.
class Lattice {
 public:
  explicit Lattice(const IntegerMatrix& generators_as_columns);

  std::size_t dimension() const noexcept { return ambient_; }
  std::size_t rank() const noexcept { return basis_.size(); }
  /// Echelon basis; row i has its leading positive entry at pivots()[i].
  const std::vector<std::vector<Integer>>& basis() const noexcept { return basis_; }
  const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }

  bool contains(const std::vector<Integer>& vector) const;

 private:
  std::size_t ambient_ = 0;
  std::vector<std::vector<Integer>> basis_;
  std::vector<std::size_t> pivots_;
};

/// The (n+1) x s matrix whose columns are (a_i, 1).
IntegerMatrix homogenized_vertex_matrix(const ZeroOnePolytope& polytope);

/// Proof that Z^{n+1} / Z{(a_i,1)} has torsion: multiplier * vector lies in
/// the column lattice while vector does not.
struct TorsionCertificate {
  /// Length n+1; the last coordinate is the degree.
  std::vector<Integer> vector;
  Integer multiplier;
  /// Integer coefficients with sum_i combination[i] * (a_i,1) == multiplier * vector,
  /// each in [0, multiplier).
  std::vector<Integer> combination;
};

/// Returns a certificate iff some invariant factor of the homogenized vertex
/// matrix exceeds one. The certificate uses the first such factor.
std::optional<TorsionCertificate> torsion_check(const ZeroOnePolytope& polytope);

/// Empty when the certificate is valid for the polytope, otherwise the failed clause.
std::optional<std::string> torsion_certificate_violation(const ZeroOnePolytope& polytope,
                                                         const TorsionCertificate& certificate);

}  // namespace idpcheck
