#include "idpcheck/certificates.hpp"

#include "idpcheck/errors.hpp"

#include <algorithm>
#include <deque>
#include <map>

namespace idpcheck {

namespace {

bool meets(const VertexSet& a, const VertexSet& b) {
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (*i == *j) return true;
    if (*i < *j) ++i; else ++j;
  }
  return false;
}

std::size_t overlap(const VertexSet& a, const VertexSet& b) {
  std::size_t n = 0;
  for (auto v : a) n += std::binary_search(b.begin(), b.end(), v) ? 1 : 0;
  return n;
}

VertexSet minus(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

VertexSet unite(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

struct Candidate {
  VertexSet vertices;
  VertexSet edge;
  Cycle cycle;
};

class PathSearch {
 public:
  PathSearch(const LabeledHypergraph& hypergraph, std::size_t budget) : budget_(budget) {
    OneSkeleton skeleton = one_skeleton(hypergraph);
    adjacency_ = skeleton.adjacency;
    for (auto& a : adjacency_) std::sort(a.begin(), a.end());
    on_path_.assign(hypergraph.vertex_count(), false);
  }

  // Even-length paths l -> m with interior outside `g`; first path per vertex set.
  bool collect(const VertexSet& g, std::size_t l, std::size_t m, std::map<VertexSet, Cycle>& found) {
    g_ = &g;
    target_ = m;
    found_ = &found;
    path_ = {l};
    on_path_[l] = true;
    bool ok = dfs();
    on_path_[l] = false;
    return ok;
  }

  std::size_t nodes() const { return nodes_; }

 private:
  bool dfs() {
    const std::size_t v = path_.back();
    for (auto w : adjacency_[v]) {
      if (on_path_[w]) continue;
      if (++nodes_ > budget_) return false;
      if (w == target_) {
        if (path_.size() >= 2 && path_.size() % 2 == 0) record(w);
        continue;
      }
      if (std::binary_search(g_->begin(), g_->end(), w)) continue;
      on_path_[w] = true;
      path_.push_back(w);
      bool ok = dfs();
      path_.pop_back();
      on_path_[w] = false;
      if (!ok) return false;
    }
    return true;
  }

  void record(std::size_t last) {
    Cycle c;
    c.vertices = path_;
    c.vertices.push_back(last);
    for (std::size_t i = 0; i + 1 < c.vertices.size(); ++i) {
      VertexSet e{c.vertices[i], c.vertices[i + 1]};
      std::sort(e.begin(), e.end());
      c.edges.push_back(e);
    }
    c.edges.push_back(*g_);
    found_->emplace(c.vertex_set(), std::move(c));
  }

  std::size_t budget_;
  std::size_t nodes_ = 0;
  std::vector<std::vector<std::size_t>> adjacency_;
  std::vector<bool> on_path_;
  std::vector<std::size_t> path_;
  const VertexSet* g_ = nullptr;
  std::size_t target_ = 0;
  std::map<VertexSet, Cycle>* found_ = nullptr;
};

std::vector<VertexSet> sorted_edges(const LabeledHypergraph& hypergraph) {
  std::vector<VertexSet> out;
  for (const auto& e : hypergraph.edges()) out.push_back(e.vertices);
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<std::vector<VertexSet>> connect(const std::vector<VertexSet>& edges, const VertexSet& on_cycles,
                                              const VertexSet& from, const VertexSet& to, bool relaxed) {
  std::vector<std::size_t> usable;
  for (std::size_t i = 0; i < edges.size(); ++i)
    if (!meets(edges[i], on_cycles)) usable.push_back(i);
  for (auto i : usable)
    if (meets(edges[i], from) && meets(edges[i], to)) return std::vector<VertexSet>{edges[i]};
  if (!relaxed) return std::nullopt;
  std::map<std::size_t, std::size_t> parent;
  std::deque<std::size_t> queue;
  for (auto i : usable) {
    if (meets(edges[i], from)) {
      parent[i] = i;
      queue.push_back(i);
    }
  }
  while (!queue.empty()) {
    auto i = queue.front();
    queue.pop_front();
    if (meets(edges[i], to)) {
      std::vector<VertexSet> chain;
      for (auto k = i;; k = parent[k]) {
        chain.push_back(edges[k]);
        if (parent[k] == k) break;
      }
      std::reverse(chain.begin(), chain.end());
      return chain;
    }
    for (auto j : usable) {
      if (parent.count(j) || !meets(edges[i], edges[j])) continue;
      parent[j] = i;
      queue.push_back(j);
    }
  }
  return std::nullopt;
}

}  // namespace

ExceptionalSearch find_exceptional_pair(const LabeledHypergraph& hypergraph, bool relaxed, std::size_t budget) {
  ExceptionalSearch out;
  std::vector<VertexSet> designated;
  for (const auto& e : simple_edges(hypergraph))
    if (e.size() >= 3) designated.push_back(e.vertices);
  std::sort(designated.begin(), designated.end());

  PathSearch paths(hypergraph, budget);
  std::map<std::pair<VertexSet, VertexSet>, Cycle> pool;
  for (const auto& g : designated) {
    for (std::size_t a = 0; a < g.size(); ++a) {
      for (std::size_t b = a + 1; b < g.size(); ++b) {
        std::map<VertexSet, Cycle> found;
        bool ok = paths.collect(g, g[a], g[b], found);
        for (auto& [vs, c] : found) pool.emplace(std::make_pair(vs, g), std::move(c));
        if (!ok) {
          out.status = SearchStatus::budget_exceeded;
          out.nodes = paths.nodes();
          return out;
        }
      }
    }
  }
  out.nodes = paths.nodes();

  std::vector<Candidate> candidates;
  for (auto& [key, c] : pool) candidates.push_back(Candidate{key.first, key.second, std::move(c)});
  const auto edges = sorted_edges(hypergraph);
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    const auto& c1 = candidates[i];
    for (std::size_t j = i + 1; j < candidates.size(); ++j) {
      const auto& c2 = candidates[j];
      if (c1.edge == c2.edge || meets(c1.vertices, c2.vertices)) continue;
      if (meets(c1.edge, c2.vertices) || meets(c2.edge, c1.vertices)) continue;
      const VertexSet on_cycles = unite(c1.vertices, c2.vertices);
      bool parity = true;
      for (const auto& e : edges) {
        if (overlap(e, on_cycles) % 2 == 1) {
          parity = false;
          break;
        }
      }
      if (!parity) continue;
      auto link = connect(edges, on_cycles, minus(c1.edge, c1.vertices), minus(c2.edge, c2.vertices), relaxed);
      if (!link) continue;
      out.status = SearchStatus::found;
      out.pair = ExceptionalPair{c1.cycle, c2.cycle, c1.edge, c2.edge, std::move(*link)};
      return out;
    }
  }
  out.status = SearchStatus::none;
  return out;
}

std::optional<std::string> exceptional_pair_violation(const LabeledHypergraph& hypergraph, const ExceptionalPair& pair,
                                                      bool relaxed) {
  const Cycle* cycles[2] = {&pair.first, &pair.second};
  const VertexSet* designated[2] = {&pair.first_edge, &pair.second_edge};
  for (int k = 0; k < 2; ++k) {
    const std::string which = k == 0 ? "first cycle: " : "second cycle: ";
    if (auto bad = cycle_violation(hypergraph, *cycles[k], false)) return which + *bad;
    if (!cycles[k]->odd()) return which + "even length";
    if (std::find(cycles[k]->edges.begin(), cycles[k]->edges.end(), *designated[k]) == cycles[k]->edges.end()) {
      return which + "designated edge is not a cycle edge";
    }
    if (!is_simple_edge(hypergraph, *designated[k])) return which + "designated edge is not simple";
    for (const auto& e : cycles[k]->edges)
      if (e != *designated[k] && e.size() != 2) return which + "edge " + format_vertex_set(e) + " is not 1-dimensional";
  }
  const VertexSet s1 = pair.first.vertex_set();
  const VertexSet s2 = pair.second.vertex_set();
  if (meets(s1, s2)) return "cycles share a vertex";
  for (const auto& e : pair.first.edges)
    if (std::find(pair.second.edges.begin(), pair.second.edges.end(), e) != pair.second.edges.end())
      return "cycles share the edge " + format_vertex_set(e);
  const VertexSet on_cycles = unite(s1, s2);
  for (int k = 0; k < 2; ++k)
    if (overlap(*designated[k], on_cycles) != 2)
      return "designated edge " + format_vertex_set(*designated[k]) + " does not meet the cycles in exactly two vertices";
  if (pair.connection.empty()) return "no connecting edge";
  if (!relaxed && pair.connection.size() != 1) return "connection is not a single edge";
  for (std::size_t i = 0; i < pair.connection.size(); ++i) {
    const auto& d = pair.connection[i];
    if (!hypergraph.has_edge(d)) return "connection " + format_vertex_set(d) + " is not an edge";
    if (meets(d, on_cycles)) return "connection " + format_vertex_set(d) + " touches a cycle vertex";
    if (i > 0 && !meets(pair.connection[i - 1], d)) return "connection chain is broken";
  }
  if (!meets(pair.connection.front(), minus(pair.first_edge, s1))) return "connection misses the first designated edge";
  if (!meets(pair.connection.back(), minus(pair.second_edge, s2))) return "connection misses the second designated edge";
  for (const auto& e : hypergraph.edges())
    if (overlap(e.vertices, on_cycles) % 2 == 1)
      return "edge " + format_vertex_set(e.vertices) + " meets the cycles in an odd number of vertices";
  return std::nullopt;
}

Witness exceptional_witness(const LabeledHypergraph& hypergraph, const ExceptionalPair& pair, bool relaxed) {
  if (auto bad = exceptional_pair_violation(hypergraph, pair, relaxed)) throw CertificateError("invalid exceptional pair: " + *bad);
  std::vector<Rational> c(hypergraph.vertex_count(), Rational(0));
  for (auto v : pair.first.vertices) c[v] = Rational(1, 2);
  for (auto v : pair.second.vertices) c[v] = Rational(1, 2);
  return make_witness(hypergraph, c);
}

}  // namespace idpcheck
