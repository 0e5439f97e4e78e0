#pragma once

#include "idpcheck/cycles.hpp"
#include "idpcheck/hypergraph.hpp"
#include "idpcheck/lattice.hpp"
#include "idpcheck/witness.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace idpcheck {

enum class RuleVerdict { normal, not_normal, inapplicable, budget_exceeded };

struct RuleOutcome {
  RuleVerdict verdict = RuleVerdict::inapplicable;
  std::optional<Witness> witness;
  std::string reason;
};

/// Exact when the 1-skeleton is connected and has an odd cycle: normal iff the
/// vertex count is odd or some edge has an odd number of vertices. Otherwise
/// the witness is c_i = 1/2. Throws NotSeparatedError.
RuleOutcome decide_connected_odd(const LabeledHypergraph& hypergraph);

/// Normal when no special odd cycle exists and all generators share one degree.
/// Throws NotSeparatedError.
RuleOutcome balanced_uniform_rule(const LabeledHypergraph& hypergraph, std::size_t budget = kDefaultCycleBudget);

struct TwoColoring {
  /// 0 = red, 1 = blue; the smallest vertex is red.
  std::vector<int> color;
  /// (red, blue) per edge, in edge order.
  std::vector<std::pair<std::size_t, std::size_t>> edge_counts;
  std::size_t red = 0;
  std::size_t blue = 0;
  long prime = 0;
  /// Lexicographically least simple edge with unequal counts, once chosen.
  std::optional<VertexSet> simple_edge;
  std::pair<std::size_t, std::size_t> simple_edge_counts{0, 0};
};

/// Proper 2-colouring of a connected bipartite 1-skeleton with the smallest
/// prime dividing every edge difference and the total difference.
std::optional<TwoColoring> two_solvable_certificate(const LabeledHypergraph& hypergraph);

struct BicolorObstruction {
  TwoColoring coloring;
  Witness witness;
};

/// Witness c = 1/p on red and (p-1)/p on blue vertices. Throws NotSeparatedError.
std::optional<BicolorObstruction> bicolor_obstruction(const LabeledHypergraph& hypergraph);

struct ExceptionalPair {
  Cycle first;
  Cycle second;
  VertexSet first_edge;
  VertexSet second_edge;
  /// One edge in strict mode; a chain of pairwise consecutive-meeting edges otherwise.
  std::vector<VertexSet> connection;
};

struct ExceptionalSearch {
  SearchStatus status = SearchStatus::none;
  std::optional<ExceptionalPair> pair;
  std::size_t nodes = 0;
};

/// Cycles are built from a simple edge G with |G| >= 3, two of its vertices
/// l < m, and an even-length 1-skeleton path from l to m avoiding the rest of
/// G. Candidate cycles are ordered by (vertex set, G) and pairs are tried in
/// that order.
ExceptionalSearch find_exceptional_pair(const LabeledHypergraph& hypergraph, bool relaxed = false,
                                        std::size_t budget = kDefaultCycleBudget);

/// Empty when all four defining conditions hold.
std::optional<std::string> exceptional_pair_violation(const LabeledHypergraph& hypergraph, const ExceptionalPair& pair,
                                                      bool relaxed = false);

/// c = 1/2 on the vertices of both cycles. Throws CertificateError on an invalid pair.
Witness exceptional_witness(const LabeledHypergraph& hypergraph, const ExceptionalPair& pair, bool relaxed = false);

/// c_i = combination_i / multiplier.
std::vector<Rational> torsion_coefficients(const TorsionCertificate& certificate);

}  // namespace idpcheck
