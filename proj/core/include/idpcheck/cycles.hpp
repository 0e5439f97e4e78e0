#pragma once

#include "idpcheck/hypergraph.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace idpcheck {

/// Alternating sequence v_1, E_1, ..., v_m, E_m with v_i, v_{i+1 mod m} in E_i.
struct Cycle {
  std::vector<std::size_t> vertices;
  std::vector<VertexSet> edges;

  std::size_t length() const noexcept { return vertices.size(); }
  bool odd() const noexcept { return vertices.size() % 2 == 1; }
  /// Cycle vertices, sorted.
  VertexSet vertex_set() const;

  friend bool operator==(const Cycle&, const Cycle&) = default;
};

/// Empty when `cycle` is a cycle of the hypergraph (distinct vertices and
/// edges, incidence, length >= 2); with `special`, also no cycle edge holds
/// more than two cycle vertices.
std::optional<std::string> cycle_violation(const LabeledHypergraph& hypergraph, const Cycle& cycle, bool special);

inline constexpr std::size_t kDefaultCycleBudget = 1'000'000;

enum class SearchStatus { found, none, budget_exceeded };

struct CycleSearch {
  SearchStatus status = SearchStatus::none;
  std::optional<Cycle> cycle;
  std::size_t nodes = 0;
};

/// Backtracking over alternating vertex/edge sequences starting from the
/// smallest cycle vertex, trying edges in lexicographic order of their sorted
/// vertex lists and next vertices in increasing order. `budget` bounds the
/// number of extension steps.
CycleSearch find_special_odd_cycle(const LabeledHypergraph& hypergraph, std::size_t budget = kDefaultCycleBudget);

enum class Balance { balanced, unbalanced, unknown };

struct BalanceResult {
  Balance status = Balance::balanced;
  std::optional<Cycle> cycle;
  std::size_t nodes = 0;
};

BalanceResult is_balanced(const LabeledHypergraph& hypergraph, std::size_t budget = kDefaultCycleBudget);

std::string format_cycle(const Cycle& cycle);

}  // namespace idpcheck
