#include "idpcheck/cycles.hpp"

#include <algorithm>
#include <set>

namespace idpcheck {

VertexSet Cycle::vertex_set() const {
  VertexSet out = vertices;
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<std::string> cycle_violation(const LabeledHypergraph& hypergraph, const Cycle& cycle, bool special) {
  const std::size_t m = cycle.vertices.size();
  if (m < 2) return "a cycle needs at least two vertices";
  if (cycle.edges.size() != m) return "vertex and edge counts differ";
  if (std::set<std::size_t>(cycle.vertices.begin(), cycle.vertices.end()).size() != m) return "repeated vertex";
  if (std::set<VertexSet>(cycle.edges.begin(), cycle.edges.end()).size() != m) return "repeated edge";
  VertexSet on_cycle = cycle.vertex_set();
  for (std::size_t i = 0; i < m; ++i) {
    const auto& e = cycle.edges[i];
    if (!hypergraph.has_edge(e)) return format_vertex_set(e) + " is not an edge";
    auto a = cycle.vertices[i];
    auto b = cycle.vertices[(i + 1) % m];
    if (!std::binary_search(e.begin(), e.end(), a) || !std::binary_search(e.begin(), e.end(), b)) {
      return "edge " + format_vertex_set(e) + " misses a consecutive cycle vertex";
    }
    if (special) {
      std::size_t inside = 0;
      for (auto v : e) inside += std::binary_search(on_cycle.begin(), on_cycle.end(), v) ? 1 : 0;
      if (inside > 2) return "edge " + format_vertex_set(e) + " holds more than two cycle vertices";
    }
  }
  return std::nullopt;
}

namespace {

class SpecialOddCycleSearch {
 public:
  SpecialOddCycleSearch(const LabeledHypergraph& hypergraph, std::size_t budget)
      : budget_(budget), incident_(hypergraph.vertex_count()), on_path_(hypergraph.vertex_count(), false) {
    for (const auto& e : hypergraph.edges())
      if (e.vertices.size() >= 2) edges_.push_back(e.vertices);
    std::sort(edges_.begin(), edges_.end());
    for (std::size_t i = 0; i < edges_.size(); ++i)
      for (auto v : edges_[i]) incident_[v].push_back(i);
    used_edge_.assign(edges_.size(), false);
  }

  CycleSearch run() {
    CycleSearch result;
    for (std::size_t start = 0; start < incident_.size() && !exhausted_; ++start) {
      start_ = start;
      path_ = {start};
      path_edges_.clear();
      on_path_[start] = true;
      bool hit = extend();
      on_path_[start] = false;
      if (hit) {
        result.status = SearchStatus::found;
        result.cycle = found_;
        result.nodes = nodes_;
        return result;
      }
    }
    result.status = exhausted_ ? SearchStatus::budget_exceeded : SearchStatus::none;
    result.nodes = nodes_;
    return result;
  }

 private:
  std::size_t path_hits(const VertexSet& e) const {
    std::size_t n = 0;
    for (auto v : e) n += on_path_[v] ? 1 : 0;
    return n;
  }

  // Some used edge already contains w (w would become a third cycle vertex there).
  bool blocked(std::size_t w) const {
    for (auto ei : path_edges_)
      if (std::binary_search(edges_[ei].begin(), edges_[ei].end(), w)) return true;
    return false;
  }

  bool extend() {
    const std::size_t v = path_.back();
    for (auto ei : incident_[v]) {
      if (used_edge_[ei]) continue;
      if (++nodes_ > budget_) {
        exhausted_ = true;
        return false;
      }
      const VertexSet& e = edges_[ei];
      const bool has_start = v != start_ && std::binary_search(e.begin(), e.end(), start_);
      const std::size_t hits = path_hits(e);
      if (has_start) {
        // Closing edge must meet the path in exactly {v, start}.
        if (hits == 2 && path_.size() >= 3 && path_.size() % 2 == 1) {
          found_.vertices = path_;
          found_.edges.clear();
          for (auto pe : path_edges_) found_.edges.push_back(edges_[pe]);
          found_.edges.push_back(e);
          return true;
        }
        continue;
      }
      if (hits != 1) continue;
      used_edge_[ei] = true;
      path_edges_.push_back(ei);
      for (auto w : e) {
        if (w <= start_ || on_path_[w]) continue;
        // The new edge is already on the path, so blocked() also sees it; skip it.
        bool conflict = false;
        for (std::size_t k = 0; k + 1 < path_edges_.size() && !conflict; ++k) {
          const auto& pe = edges_[path_edges_[k]];
          conflict = std::binary_search(pe.begin(), pe.end(), w);
        }
        if (conflict) continue;
        on_path_[w] = true;
        path_.push_back(w);
        bool hit = extend();
        path_.pop_back();
        on_path_[w] = false;
        if (hit) return true;
        if (exhausted_) break;
      }
      path_edges_.pop_back();
      used_edge_[ei] = false;
      if (exhausted_) return false;
    }
    return false;
  }

  std::size_t budget_;
  std::size_t nodes_ = 0;
  bool exhausted_ = false;
  std::vector<VertexSet> edges_;
  std::vector<std::vector<std::size_t>> incident_;
  std::vector<bool> used_edge_;
  std::vector<bool> on_path_;
  std::size_t start_ = 0;
  std::vector<std::size_t> path_;
  std::vector<std::size_t> path_edges_;
  Cycle found_;
};

}  // namespace

CycleSearch find_special_odd_cycle(const LabeledHypergraph& hypergraph, std::size_t budget) {
  return SpecialOddCycleSearch(hypergraph, budget).run();
}

BalanceResult is_balanced(const LabeledHypergraph& hypergraph, std::size_t budget) {
  CycleSearch search = find_special_odd_cycle(hypergraph, budget);
  BalanceResult out;
  out.nodes = search.nodes;
  switch (search.status) {
    case SearchStatus::found:
      out.status = Balance::unbalanced;
      out.cycle = std::move(search.cycle);
      break;
    case SearchStatus::none:
      out.status = Balance::balanced;
      break;
    case SearchStatus::budget_exceeded:
      out.status = Balance::unknown;
      break;
  }
  return out;
}

std::string format_cycle(const Cycle& cycle) {
  std::string out;
  for (std::size_t i = 0; i < cycle.vertices.size(); ++i) {
    if (i > 0) out += ",";
    out += std::to_string(cycle.vertices[i] + 1) + "," + format_vertex_set(cycle.edges[i]);
  }
  return out;
}

}  // namespace idpcheck
