#pragma once

#include "idpcheck/model.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace idpcheck {

/// Sorted set of 0-based vertex indices.
using VertexSet = std::vector<std::size_t>;

struct Label {
  std::string name;
  VertexSet vertices;

  friend bool operator==(const Label&, const Label&) = default;
};

/// An edge is identified by its vertex set; all labels mapping onto it are kept.
struct Edge {
  VertexSet vertices;
  std::vector<std::string> labels;

  std::size_t size() const noexcept { return vertices.size(); }
  std::size_t dimension() const noexcept { return vertices.size() - 1; }

  friend bool operator==(const Edge&, const Edge&) = default;
};

/// A labeled hypergraph on vertices 0..s-1: a map from label names to vertex
/// subsets. Edges are the distinct nonempty images, ordered by (smallest
/// vertex, first label), with labels listed in label order.
///
/// `origin()` maps every vertex to its index in the root hypergraph it was
/// restricted from; restrictions compose, and fresh hypergraphs get the identity.
class LabeledHypergraph {
 public:
  LabeledHypergraph() = default;

  /// Labels with an empty image are dropped. Throws std::invalid_argument on a
  /// duplicate label name, an out-of-range vertex, or a vertex covered by no edge.
  LabeledHypergraph(std::size_t vertex_count, std::vector<Label> labels, std::vector<std::size_t> origin = {});

  std::size_t vertex_count() const noexcept { return vertex_count_; }
  bool empty() const noexcept { return vertex_count_ == 0; }
  const std::vector<Label>& labels() const noexcept { return labels_; }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  const std::vector<std::size_t>& origin() const noexcept { return origin_; }

  std::optional<std::size_t> find_edge(const VertexSet& vertices) const;
  bool has_edge(const VertexSet& vertices) const { return find_edge(vertices).has_value(); }

  /// Structural equality: same vertex count and the same label map. Origins are ignored.
  friend bool operator==(const LabeledHypergraph& a, const LabeledHypergraph& b) {
    return a.vertex_count_ == b.vertex_count_ && a.labels_ == b.labels_;
  }

 private:
  std::size_t vertex_count_ = 0;
  std::vector<Label> labels_;
  std::vector<Edge> edges_;
  std::vector<std::size_t> origin_;
};

/// Label x maps to the set of generators divisible by x. Unused variables are
/// not labels.
LabeledHypergraph build_from_ideal(const SquarefreeIdeal& ideal);

/// Generator of vertex v is the product of all labels whose edge contains v.
/// Variables are the labels in label order. Throws NotSeparatedError.
SquarefreeIdeal ideal_of(const LabeledHypergraph& hypergraph);

/// First pair (v, w), v < w in lexicographic order, not split by two edges.
std::optional<std::pair<std::size_t, std::size_t>> separation_violation(const LabeledHypergraph& hypergraph);
bool is_separated(const LabeledHypergraph& hypergraph);

VertexSet closed_vertices(const LabeledHypergraph& hypergraph);
VertexSet open_vertices(const LabeledHypergraph& hypergraph);

/// Edges containing no other edge as a proper subset, in edge order.
std::vector<Edge> simple_edges(const LabeledHypergraph& hypergraph);
bool is_simple_edge(const LabeledHypergraph& hypergraph, const VertexSet& edge);

/// Rows are vertices. Columns are edges in edge order, or one column per
/// label in label order when `expand_labels` is set.
IntegerMatrix incidence_matrix(const LabeledHypergraph& hypergraph, bool expand_labels);

/// Ordinary graph formed by the 2-vertex edges.
struct OneSkeleton {
  std::size_t vertex_count = 0;
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  std::vector<std::vector<std::size_t>> adjacency;
  std::vector<VertexSet> components;
  /// BFS colouring from the smallest vertex of each component (0 = red, 1 = blue);
  /// proper on bipartite components.
  std::vector<int> color;
  /// Per component: an odd cycle as a vertex sequence, when the component is not bipartite.
  std::vector<std::optional<std::vector<std::size_t>>> odd_cycles;

  bool connected() const noexcept { return components.size() <= 1; }
  bool bipartite() const;
};

OneSkeleton one_skeleton(const LabeledHypergraph& hypergraph);

/// Contracts every label onto `subset` and renumbers the surviving vertices in
/// increasing order. Labels whose contraction is empty are dropped.
LabeledHypergraph induced_subhypergraph(const LabeledHypergraph& hypergraph, const VertexSet& subset);

/// Restriction to the complement of `edge`. Throws std::invalid_argument when
/// `edge` is not an edge of the hypergraph.
LabeledHypergraph delete_edge(const LabeledHypergraph& hypergraph, const VertexSet& edge);

struct RemovedVertex {
  /// Index in the hypergraph passed to the reduction.
  std::size_t vertex;
  /// A label whose edge is exactly {vertex} at removal time.
  std::string label;

  friend bool operator==(const RemovedVertex&, const RemovedVertex&) = default;
};

struct ReductionTrace {
  std::vector<std::vector<RemovedVertex>> rounds;

  bool empty() const noexcept { return rounds.empty(); }
  /// All removed vertices, sorted.
  VertexSet removed_vertices() const;
};

struct Reduction {
  LabeledHypergraph hypergraph;
  ReductionTrace trace;
};

/// Removes all currently closed vertices at once (one round).
Reduction reduce_closed_once(const LabeledHypergraph& hypergraph);

/// Repeats rounds until no closed vertex remains.
Reduction reduce_closed_fixpoint(const LabeledHypergraph& hypergraph);

std::string format_vertex_set(const VertexSet& vertices);

}  // namespace idpcheck
