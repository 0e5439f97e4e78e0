#include "idpcheck/certificates.hpp"

#include "idpcheck/errors.hpp"

#include <algorithm>
#include <numeric>

namespace idpcheck {

namespace {

void require_separated(const LabeledHypergraph& hypergraph) {
  if (auto bad = separation_violation(hypergraph)) throw NotSeparatedError(*bad);
}

bool covers_all(const OneSkeleton& skeleton) {
  return skeleton.vertex_count > 0 && skeleton.connected();
}

long smallest_prime_factor(long g) {
  for (long p = 2; p * p <= g; ++p)
    if (g % p == 0) return p;
  return g;
}

}  // namespace

RuleOutcome decide_connected_odd(const LabeledHypergraph& hypergraph) {
  require_separated(hypergraph);
  RuleOutcome out;
  OneSkeleton skeleton = one_skeleton(hypergraph);
  if (!covers_all(skeleton)) {
    out.reason = "1-skeleton is not connected";
    return out;
  }
  if (skeleton.bipartite()) {
    out.reason = "1-skeleton has no odd cycle";
    return out;
  }
  const std::size_t s = hypergraph.vertex_count();
  if (s % 2 == 1) {
    out.verdict = RuleVerdict::normal;
    out.reason = "odd vertex count " + std::to_string(s);
    return out;
  }
  for (const auto& e : hypergraph.edges()) {
    if (e.size() % 2 == 1) {
      out.verdict = RuleVerdict::normal;
      out.reason = "even-dimensional edge " + format_vertex_set(e.vertices);
      return out;
    }
  }
  out.verdict = RuleVerdict::not_normal;
  out.reason = "even vertex count, no even-dimensional edge";
  out.witness = make_witness(hypergraph, std::vector<Rational>(s, Rational(1, 2)));
  return out;
}

RuleOutcome balanced_uniform_rule(const LabeledHypergraph& hypergraph, std::size_t budget) {
  require_separated(hypergraph);
  RuleOutcome out;
  BalanceResult balance = is_balanced(hypergraph, budget);
  if (balance.status == Balance::unknown) {
    out.verdict = RuleVerdict::budget_exceeded;
    out.reason = "special odd cycle search exceeded its budget";
    return out;
  }
  if (balance.status == Balance::unbalanced) {
    out.reason = "special odd cycle " + format_cycle(*balance.cycle);
    return out;
  }
  GeneratorDegrees degrees = generator_degrees(ideal_of(hypergraph));
  if (!degrees.uniform) {
    std::string text;
    for (std::size_t i = 0; i < degrees.degrees.size(); ++i)
      text += (i ? "," : "") + std::to_string(degrees.degrees[i]);
    out.reason = "balanced, but generator degrees (" + text + ") differ";
    return out;
  }
  out.verdict = RuleVerdict::normal;
  out.reason = "balanced with all generators of degree " +
               std::to_string(degrees.degrees.empty() ? 0 : degrees.degrees.front());
  return out;
}

std::optional<TwoColoring> two_solvable_certificate(const LabeledHypergraph& hypergraph) {
  OneSkeleton skeleton = one_skeleton(hypergraph);
  if (!covers_all(skeleton) || !skeleton.bipartite()) return std::nullopt;
  TwoColoring coloring;
  coloring.color = skeleton.color;
  long g = 0;
  for (const auto& e : hypergraph.edges()) {
    std::size_t r = 0;
    std::size_t b = 0;
    for (auto v : e.vertices) (coloring.color[v] == 0 ? r : b) += 1;
    coloring.edge_counts.emplace_back(r, b);
    g = std::gcd(g, std::labs(static_cast<long>(r) - static_cast<long>(b)));
  }
  for (auto c : coloring.color) (c == 0 ? coloring.red : coloring.blue) += 1;
  g = std::gcd(g, std::labs(static_cast<long>(coloring.red) - static_cast<long>(coloring.blue)));
  if (g == 1) return std::nullopt;
  coloring.prime = g == 0 ? 2 : smallest_prime_factor(g);
  return coloring;
}

std::optional<BicolorObstruction> bicolor_obstruction(const LabeledHypergraph& hypergraph) {
  require_separated(hypergraph);
  auto coloring = two_solvable_certificate(hypergraph);
  if (!coloring) return std::nullopt;
  std::vector<VertexSet> candidates;
  for (const auto& e : simple_edges(hypergraph)) candidates.push_back(e.vertices);
  std::sort(candidates.begin(), candidates.end());
  for (const auto& g : candidates) {
    std::size_t r = 0;
    std::size_t b = 0;
    for (auto v : g) (coloring->color[v] == 0 ? r : b) += 1;
    if (r == b) continue;
    coloring->simple_edge = g;
    coloring->simple_edge_counts = {r, b};
    const long p = coloring->prime;
    std::vector<Rational> c;
    for (auto color : coloring->color) c.push_back(color == 0 ? Rational(1, p) : Rational(p - 1, p));
    for (auto& x : c) x.canonicalize();
    Witness w = make_witness(hypergraph, c);
    return BicolorObstruction{std::move(*coloring), std::move(w)};
  }
  return std::nullopt;
}

std::vector<Rational> torsion_coefficients(const TorsionCertificate& certificate) {
  std::vector<Rational> out;
  for (const auto& l : certificate.combination) {
    Rational c(l, certificate.multiplier);
    c.canonicalize();
    out.push_back(c);
  }
  return out;
}

}  // namespace idpcheck
