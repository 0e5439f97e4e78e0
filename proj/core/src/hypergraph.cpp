#include "idpcheck/hypergraph.hpp"

#include "idpcheck/errors.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace idpcheck {

LabeledHypergraph::LabeledHypergraph(std::size_t vertex_count, std::vector<Label> labels,
                                     std::vector<std::size_t> origin)
    : vertex_count_(vertex_count), origin_(std::move(origin)) {
  if (origin_.empty()) {
    origin_.resize(vertex_count_);
    std::iota(origin_.begin(), origin_.end(), std::size_t{0});
  } else if (origin_.size() != vertex_count_) {
    throw std::invalid_argument("origin map has the wrong length");
  }

  std::set<std::string> names;
  for (auto& label : labels) {
    std::sort(label.vertices.begin(), label.vertices.end());
    label.vertices.erase(std::unique(label.vertices.begin(), label.vertices.end()), label.vertices.end());
    if (label.vertices.empty()) continue;
    if (label.vertices.back() >= vertex_count_) {
      throw std::invalid_argument("label '" + label.name + "' refers to a missing vertex");
    }
    if (!names.insert(label.name).second) throw std::invalid_argument("duplicate label '" + label.name + "'");
    labels_.push_back(std::move(label));
  }

  std::map<VertexSet, std::size_t> index;
  for (const auto& label : labels_) {
    auto [it, inserted] = index.try_emplace(label.vertices, edges_.size());
    if (inserted) edges_.push_back(Edge{label.vertices, {}});
    edges_[it->second].labels.push_back(label.name);
  }
  // Edges were created in order of their first label.
  std::stable_sort(edges_.begin(), edges_.end(),
                   [](const Edge& a, const Edge& b) { return a.vertices.front() < b.vertices.front(); });

  std::vector<bool> covered(vertex_count_, false);
  for (const auto& e : edges_)
    for (auto v : e.vertices) covered[v] = true;
  for (std::size_t v = 0; v < vertex_count_; ++v) {
    if (!covered[v]) throw std::invalid_argument("vertex " + std::to_string(v + 1) + " lies in no edge");
  }
}

std::optional<std::size_t> LabeledHypergraph::find_edge(const VertexSet& vertices) const {
  for (std::size_t i = 0; i < edges_.size(); ++i)
    if (edges_[i].vertices == vertices) return i;
  return std::nullopt;
}

LabeledHypergraph build_from_ideal(const SquarefreeIdeal& ideal) {
  std::vector<Label> labels;
  for (std::size_t x = 0; x < ideal.variable_count(); ++x) {
    Label label{ideal.variables()[x], {}};
    for (std::size_t j = 0; j < ideal.generator_count(); ++j)
      if (ideal.generators()[j].contains(x)) label.vertices.push_back(j);
    if (!label.vertices.empty()) labels.push_back(std::move(label));
  }
  return LabeledHypergraph(ideal.generator_count(), std::move(labels));
}

std::optional<std::pair<std::size_t, std::size_t>> separation_violation(const LabeledHypergraph& hypergraph) {
  const std::size_t s = hypergraph.vertex_count();
  // splits[v][w]: some edge contains v but not w.
  std::vector<std::vector<bool>> splits(s, std::vector<bool>(s, false));
  for (const auto& e : hypergraph.edges()) {
    std::vector<bool> in(s, false);
    for (auto v : e.vertices) in[v] = true;
    for (auto v : e.vertices)
      for (std::size_t w = 0; w < s; ++w)
        if (!in[w]) splits[v][w] = true;
  }
  for (std::size_t v = 0; v < s; ++v)
    for (std::size_t w = v + 1; w < s; ++w)
      if (!splits[v][w] || !splits[w][v]) return std::make_pair(v, w);
  return std::nullopt;
}

bool is_separated(const LabeledHypergraph& hypergraph) { return !separation_violation(hypergraph); }

SquarefreeIdeal ideal_of(const LabeledHypergraph& hypergraph) {
  if (auto bad = separation_violation(hypergraph)) throw NotSeparatedError(*bad);
  std::vector<std::string> variables;
  std::vector<std::vector<std::size_t>> supports(hypergraph.vertex_count());
  for (std::size_t x = 0; x < hypergraph.labels().size(); ++x) {
    const auto& label = hypergraph.labels()[x];
    variables.push_back(label.name);
    for (auto v : label.vertices) supports[v].push_back(x);
  }
  std::vector<Monomial> gens;
  for (auto& s : supports) gens.emplace_back(std::move(s));
  return SquarefreeIdeal(std::move(variables), std::move(gens));
}

VertexSet closed_vertices(const LabeledHypergraph& hypergraph) {
  VertexSet out;
  for (const auto& e : hypergraph.edges())
    if (e.vertices.size() == 1) out.push_back(e.vertices.front());
  std::sort(out.begin(), out.end());
  return out;
}

VertexSet open_vertices(const LabeledHypergraph& hypergraph) {
  VertexSet closed = closed_vertices(hypergraph);
  VertexSet out;
  for (std::size_t v = 0; v < hypergraph.vertex_count(); ++v)
    if (!std::binary_search(closed.begin(), closed.end(), v)) out.push_back(v);
  return out;
}

namespace {

bool proper_subset(const VertexSet& a, const VertexSet& b) {
  return a.size() < b.size() && std::includes(b.begin(), b.end(), a.begin(), a.end());
}

}  // namespace

bool is_simple_edge(const LabeledHypergraph& hypergraph, const VertexSet& edge) {
  for (const auto& other : hypergraph.edges())
    if (proper_subset(other.vertices, edge)) return false;
  return true;
}

std::vector<Edge> simple_edges(const LabeledHypergraph& hypergraph) {
  std::vector<Edge> out;
  for (const auto& e : hypergraph.edges())
    if (is_simple_edge(hypergraph, e.vertices)) out.push_back(e);
  return out;
}

IntegerMatrix incidence_matrix(const LabeledHypergraph& hypergraph, bool expand_labels) {
  const auto& columns_source = hypergraph.edges();
  if (expand_labels) {
    IntegerMatrix m(hypergraph.vertex_count(), hypergraph.labels().size());
    for (std::size_t c = 0; c < hypergraph.labels().size(); ++c)
      for (auto v : hypergraph.labels()[c].vertices) m.at(v, c) = 1;
    return m;
  }
  IntegerMatrix m(hypergraph.vertex_count(), columns_source.size());
  for (std::size_t c = 0; c < columns_source.size(); ++c)
    for (auto v : columns_source[c].vertices) m.at(v, c) = 1;
  return m;
}

bool OneSkeleton::bipartite() const {
  return std::none_of(odd_cycles.begin(), odd_cycles.end(), [](const auto& c) { return c.has_value(); });
}

OneSkeleton one_skeleton(const LabeledHypergraph& hypergraph) {
  OneSkeleton g;
  const std::size_t s = hypergraph.vertex_count();
  g.vertex_count = s;
  g.adjacency.assign(s, {});
  for (const auto& e : hypergraph.edges()) {
    if (e.vertices.size() != 2) continue;
    g.edges.emplace_back(e.vertices[0], e.vertices[1]);
    g.adjacency[e.vertices[0]].push_back(e.vertices[1]);
    g.adjacency[e.vertices[1]].push_back(e.vertices[0]);
  }
  std::sort(g.edges.begin(), g.edges.end());
  for (auto& adj : g.adjacency) std::sort(adj.begin(), adj.end());

  g.color.assign(s, -1);
  std::vector<std::size_t> parent(s, s), depth(s, 0), component_of(s, 0);
  for (std::size_t root = 0; root < s; ++root) {
    if (g.color[root] != -1) continue;
    VertexSet members;
    std::deque<std::size_t> queue{root};
    g.color[root] = 0;
    component_of[root] = g.components.size();
    while (!queue.empty()) {
      auto v = queue.front();
      queue.pop_front();
      members.push_back(v);
      for (auto w : g.adjacency[v]) {
        if (g.color[w] != -1) continue;
        g.color[w] = 1 - g.color[v];
        parent[w] = v;
        depth[w] = depth[v] + 1;
        component_of[w] = g.components.size();
        queue.push_back(w);
      }
    }
    std::sort(members.begin(), members.end());
    g.components.push_back(std::move(members));
    g.odd_cycles.emplace_back();
  }
  for (auto [u, w] : g.edges) {
    auto c = component_of[u];
    if (g.color[u] != g.color[w] || g.odd_cycles[c]) continue;
    // Climb both BFS tree paths to the lowest common ancestor.
    std::vector<std::size_t> up_u{u}, up_w{w};
    std::size_t a = u, b = w;
    while (depth[a] > depth[b]) up_u.push_back(a = parent[a]);
    while (depth[b] > depth[a]) up_w.push_back(b = parent[b]);
    while (a != b) {
      up_u.push_back(a = parent[a]);
      up_w.push_back(b = parent[b]);
    }
    // up_u ends at the ancestor; emit ancestor .. u, then w .. child of ancestor.
    std::vector<std::size_t> cycle(up_u.rbegin(), up_u.rend());
    for (std::size_t i = 0; i + 1 < up_w.size(); ++i) cycle.push_back(up_w[i]);
    g.odd_cycles[c] = std::move(cycle);
  }
  return g;
}

LabeledHypergraph induced_subhypergraph(const LabeledHypergraph& hypergraph, const VertexSet& subset_input) {
  VertexSet subset = subset_input;
  std::sort(subset.begin(), subset.end());
  subset.erase(std::unique(subset.begin(), subset.end()), subset.end());
  const std::size_t s = hypergraph.vertex_count();
  std::vector<std::size_t> renumber(s, s);
  std::vector<std::size_t> origin;
  for (std::size_t i = 0; i < subset.size(); ++i) {
    if (subset[i] >= s) throw std::invalid_argument("restriction to a vertex outside the hypergraph");
    renumber[subset[i]] = i;
    origin.push_back(hypergraph.origin()[subset[i]]);
  }
  std::vector<Label> labels;
  for (const auto& label : hypergraph.labels()) {
    Label contracted{label.name, {}};
    for (auto v : label.vertices)
      if (renumber[v] != s) contracted.vertices.push_back(renumber[v]);
    if (!contracted.vertices.empty()) labels.push_back(std::move(contracted));
  }
  return LabeledHypergraph(subset.size(), std::move(labels), std::move(origin));
}

LabeledHypergraph delete_edge(const LabeledHypergraph& hypergraph, const VertexSet& edge) {
  if (!hypergraph.has_edge(edge)) {
    throw std::invalid_argument(format_vertex_set(edge) + " is not an edge of the hypergraph");
  }
  VertexSet rest;
  for (std::size_t v = 0; v < hypergraph.vertex_count(); ++v)
    if (!std::binary_search(edge.begin(), edge.end(), v)) rest.push_back(v);
  return induced_subhypergraph(hypergraph, rest);
}

VertexSet ReductionTrace::removed_vertices() const {
  VertexSet out;
  for (const auto& round : rounds)
    for (const auto& r : round) out.push_back(r.vertex);
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

// One round on `current`, whose vertex i corresponds to to_input[i].
bool reduce_round(LabeledHypergraph& current, std::vector<std::size_t>& to_input, ReductionTrace& trace) {
  std::vector<RemovedVertex> removed;
  std::vector<bool> drop(current.vertex_count(), false);
  for (std::size_t v = 0; v < current.vertex_count(); ++v) {
    for (const auto& label : current.labels()) {
      if (label.vertices.size() == 1 && label.vertices.front() == v) {
        removed.push_back({to_input[v], label.name});
        drop[v] = true;
        break;
      }
    }
  }
  if (removed.empty()) return false;
  VertexSet keep;
  std::vector<std::size_t> next_map;
  for (std::size_t v = 0; v < current.vertex_count(); ++v) {
    if (drop[v]) continue;
    keep.push_back(v);
    next_map.push_back(to_input[v]);
  }
  current = induced_subhypergraph(current, keep);
  to_input = std::move(next_map);
  trace.rounds.push_back(std::move(removed));
  return true;
}

Reduction reduce(const LabeledHypergraph& hypergraph, bool fixpoint) {
  Reduction out{hypergraph, {}};
  std::vector<std::size_t> to_input(hypergraph.vertex_count());
  std::iota(to_input.begin(), to_input.end(), std::size_t{0});
  while (reduce_round(out.hypergraph, to_input, out.trace) && fixpoint) {
  }
  return out;
}

}  // namespace

Reduction reduce_closed_once(const LabeledHypergraph& hypergraph) { return reduce(hypergraph, false); }

Reduction reduce_closed_fixpoint(const LabeledHypergraph& hypergraph) { return reduce(hypergraph, true); }

std::string format_vertex_set(const VertexSet& vertices) {
  std::string out = "{";
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(vertices[i] + 1);
  }
  return out + "}";
}

}  // namespace idpcheck
