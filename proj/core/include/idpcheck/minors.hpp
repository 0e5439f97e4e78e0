#pragma once

#include "idpcheck/hypergraph.hpp"
#include "idpcheck/witness.hpp"

#include <cstddef>
#include <functional>
#include <vector>

namespace idpcheck {

struct Minor {
  /// Surviving vertices, in the numbering of the hypergraph the minor was taken from.
  VertexSet surviving;
  /// Deleted edges in order, each in that same numbering.
  std::vector<VertexSet> deletions;
  LabeledHypergraph hypergraph;
};

inline constexpr std::size_t kDefaultMinorBudget = 5000;

/// Visits distinct minors (by surviving vertex set) in order of decreasing
/// vertex count, then lexicographically by surviving set, starting with the
/// hypergraph itself and ending with the empty minor. `visit` returns false to
/// stop. At most `budget` minors are visited. Returns true when the
/// enumeration ran to completion.
bool for_each_minor(const LabeledHypergraph& hypergraph, std::size_t budget,
                    const std::function<bool(const Minor&)>& visit);

std::vector<Minor> enumerate_minors(const LabeledHypergraph& hypergraph, std::size_t budget = kDefaultMinorBudget);

/// Zero-extends coefficients given on `kept` (sorted, in the numbering of
/// `larger`) and recomputes the point over the labels of `larger`. Throws
/// CertificateError when the lifted point is not integral.
Witness extend_witness(const LabeledHypergraph& larger, const VertexSet& kept, const std::vector<Rational>& coefficients);

/// Lifts through a closed-vertex reduction of `larger`.
Witness lift_witness(const LabeledHypergraph& larger, const ReductionTrace& trace, const Witness& witness);

/// Lifts through a sequence of edge deletions performed on `larger`.
Witness lift_witness(const LabeledHypergraph& larger, const std::vector<VertexSet>& deletions, const Witness& witness);

}  // namespace idpcheck
