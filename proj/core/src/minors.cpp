#include "idpcheck/minors.hpp"

#include "idpcheck/errors.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace idpcheck {

namespace {

struct Order {
  bool operator()(const VertexSet& a, const VertexSet& b) const {
    if (a.size() != b.size()) return a.size() > b.size();
    return a < b;
  }
};

VertexSet complement(std::size_t n, const VertexSet& removed) {
  VertexSet out;
  for (std::size_t v = 0; v < n; ++v)
    if (!std::binary_search(removed.begin(), removed.end(), v)) out.push_back(v);
  return out;
}

}  // namespace

bool for_each_minor(const LabeledHypergraph& hypergraph, std::size_t budget,
                    const std::function<bool(const Minor&)>& visit) {
  std::map<VertexSet, std::vector<VertexSet>, Order> pending;
  std::set<VertexSet> seen;
  VertexSet all = complement(hypergraph.vertex_count(), {});
  pending.emplace(all, std::vector<VertexSet>{});
  seen.insert(all);
  std::size_t visited = 0;
  while (!pending.empty()) {
    if (visited == budget) return false;
    auto node = pending.extract(pending.begin());
    Minor minor{std::move(node.key()), std::move(node.mapped()), {}};
    minor.hypergraph = induced_subhypergraph(hypergraph, minor.surviving);
    ++visited;
    for (const auto& e : minor.hypergraph.edges()) {
      VertexSet deleted;
      for (auto v : e.vertices) deleted.push_back(minor.surviving[v]);
      VertexSet rest;
      std::set_difference(minor.surviving.begin(), minor.surviving.end(), deleted.begin(), deleted.end(),
                          std::back_inserter(rest));
      if (!seen.insert(rest).second) continue;
      auto trace = minor.deletions;
      trace.push_back(std::move(deleted));
      pending.emplace(std::move(rest), std::move(trace));
    }
    if (!visit(minor)) return false;
  }
  return true;
}

std::vector<Minor> enumerate_minors(const LabeledHypergraph& hypergraph, std::size_t budget) {
  std::vector<Minor> out;
  for_each_minor(hypergraph, budget, [&](const Minor& m) {
    out.push_back(m);
    return true;
  });
  return out;
}

Witness extend_witness(const LabeledHypergraph& larger, const VertexSet& kept, const std::vector<Rational>& coefficients) {
  if (kept.size() != coefficients.size()) {
    throw CertificateError("lift: " + std::to_string(coefficients.size()) + " coefficients for " +
                           std::to_string(kept.size()) + " surviving vertices");
  }
  std::vector<Rational> full(larger.vertex_count(), Rational(0));
  for (std::size_t i = 0; i < kept.size(); ++i) {
    if (kept[i] >= full.size()) throw CertificateError("lift: vertex outside the hypergraph");
    full[kept[i]] = coefficients[i];
  }
  return make_witness(larger, full);
}

Witness lift_witness(const LabeledHypergraph& larger, const ReductionTrace& trace, const Witness& witness) {
  return extend_witness(larger, complement(larger.vertex_count(), trace.removed_vertices()), witness.coefficients);
}

Witness lift_witness(const LabeledHypergraph& larger, const std::vector<VertexSet>& deletions, const Witness& witness) {
  VertexSet removed;
  for (const auto& e : deletions) removed.insert(removed.end(), e.begin(), e.end());
  std::sort(removed.begin(), removed.end());
  removed.erase(std::unique(removed.begin(), removed.end()), removed.end());
  return extend_witness(larger, complement(larger.vertex_count(), removed), witness.coefficients);
}

}  // namespace idpcheck
