#pragma once

#include "idpcheck/certificates.hpp"
#include "idpcheck/hypergraph.hpp"
#include "idpcheck/lattice.hpp"
#include "idpcheck/minors.hpp"
#include "idpcheck/model.hpp"
#include "idpcheck/oracle.hpp"
#include "idpcheck/witness.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace idpcheck {

struct RuleToggles {
  bool connected_odd = true;
  bool balanced_uniform = true;
  bool torsion = true;
  bool bicolor = true;
  bool exceptional = true;
};

struct EngineConfig {
  /// Rules applied to the reduced hypergraph itself.
  RuleToggles rules;
  /// Negative rules applied to proper minors (balanced_uniform is ignored).
  RuleToggles minor_rules;
  bool minors = true;
  std::size_t minor_budget = kDefaultMinorBudget;
  std::size_t cycle_budget = kDefaultCycleBudget;
  bool oracle = true;
  std::size_t oracle_max_vertices = 12;
  std::size_t oracle_max_variables = 24;
  std::optional<std::int64_t> oracle_max_degree;
  bool relaxed_connection = false;
  bool verify = true;
};

/// Engine rule identifiers as they appear in reports.
namespace rule_id {
inline constexpr const char* empty_after_reduction = "empty-after-reduction";
inline constexpr const char* single_vertex = "single-vertex";
inline constexpr const char* connected_odd = "thm-4.1";
inline constexpr const char* balanced_uniform = "prop-3.5";
inline constexpr const char* torsion = "remark-3.2";
inline constexpr const char* bicolor = "thm-4.5";
inline constexpr const char* exceptional = "thm-4.8";
inline constexpr const char* minor = "thm-3.8";
inline constexpr const char* oracle = "oracle";
inline constexpr const char* none = "none";
}  // namespace rule_id

/// Citation string for a rule id ("Theorem 4.1", ...).
std::string rule_citation(const std::string& id);

enum class Verdict { normal, not_normal, unknown };

std::string verdict_name(Verdict verdict);

struct Diagnostic {
  std::string rule;
  /// "normal", "not_normal", "inapplicable", "budget_exceeded", "disabled", "rejected"
  std::string outcome;
  std::string detail;
};

struct MinorHit {
  /// Deleted edges, in the numbering of the hypergraph searched.
  std::vector<VertexSet> deletions;
  VertexSet surviving;
  std::string inner_rule;
  std::string detail;
  /// Witness on the searched hypergraph (its label coordinates).
  Witness witness;
  std::size_t minors_examined = 0;
};

struct MinorSearchResult {
  std::optional<MinorHit> hit;
  std::size_t minors_examined = 0;
  bool complete = true;
};

struct EngineStats {
  double elapsed_ms = 0;
  std::size_t cycle_nodes = 0;
  std::size_t minors_examined = 0;
  std::size_t oracle_points = 0;
  std::int64_t oracle_degree_bound = 0;
};

struct VerdictReport {
  Verdict verdict = Verdict::unknown;
  std::string rule = rule_id::none;
  std::string paper_rule;
  std::string detail;
  /// Over the polytope of the input (vertex i = generator i).
  std::optional<Witness> witness;
  std::optional<TorsionCertificate> torsion_certificate;
  /// Closed-vertex reduction, in input vertex numbering.
  ReductionTrace reductions;
  /// Minor deletions, in input vertex numbering.
  std::optional<std::vector<VertexSet>> minor_trace;
  std::string minor_rule;
  /// True when the negative certificate was re-checked independently.
  bool verified = false;
  std::string verification;
  std::vector<Diagnostic> diagnostics;
  EngineStats stats;
};

VerdictReport analyze(const SquarefreeIdeal& ideal, const EngineConfig& config = {});

/// Polytopes whose vertex supports form an antichain are analyzed as ideals
/// over x1..xn; others only by the oracle.
VerdictReport analyze_polytope(const ZeroOnePolytope& polytope, const EngineConfig& config = {});

/// First proper minor (skipping the empty and one-vertex minors) on which an
/// enabled negative rule fires, with its witness lifted and re-verified.
MinorSearchResult minor_search(const LabeledHypergraph& hypergraph, const EngineConfig& config = {});

/// Polytope of ideal_of(hypergraph): one coordinate per label.
ZeroOnePolytope hypergraph_polytope(const LabeledHypergraph& hypergraph);

}  // namespace idpcheck
