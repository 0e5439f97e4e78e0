#include "idpcheck/random_ideals.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace idpcheck {

namespace {

// One draw; `complete` reports whether minimalization kept every generator.
SquarefreeIdeal draw(std::mt19937_64& rng, const RandomIdealOptions& options, bool& complete) {
  auto uniform = [&](std::size_t lo, std::size_t hi) { return std::uniform_int_distribution<std::size_t>(lo, hi)(rng); };
  const std::size_t s = uniform(std::min<std::size_t>(2, options.max_generators), std::max<std::size_t>(1, options.max_generators));
  const std::size_t n = uniform(1, std::max<std::size_t>(1, options.max_variables));
  std::bernoulli_distribution single(options.private_probability);
  std::vector<std::size_t> order(s);
  std::iota(order.begin(), order.end(), 0);
  std::vector<std::vector<std::size_t>> supports(s);
  for (std::size_t x = 0; x < n; ++x) {
    std::size_t k = 1;
    if (s >= 2 && !single(rng)) k = uniform(2, std::min(s, std::max<std::size_t>(2, options.max_edge)));
    std::shuffle(order.begin(), order.end(), rng);
    for (std::size_t i = 0; i < k; ++i) supports[order[i]].push_back(x);
  }
  std::vector<Monomial> drawn;
  for (auto& support : supports)
    if (!support.empty()) drawn.emplace_back(std::move(support));
  std::vector<std::string> names;
  for (std::size_t v = 0; v < n; ++v) names.push_back("x" + std::to_string(v + 1));
  const std::size_t drawn_count = drawn.size();
  SquarefreeIdeal minimal = minimalize_generators(names, drawn).ideal;
  complete = drawn_count == s && minimal.generator_count() == s;

  std::vector<bool> used(n, false);
  for (const auto& g : minimal.generators())
    for (auto v : g.support()) used[v] = true;
  std::vector<std::size_t> rename(n, 0);
  std::vector<std::string> compressed;
  for (std::size_t v = 0; v < n; ++v) {
    if (!used[v]) continue;
    rename[v] = compressed.size();
    compressed.push_back("x" + std::to_string(compressed.size() + 1));
  }
  std::vector<Monomial> generators;
  for (const auto& g : minimal.generators()) {
    std::vector<std::size_t> support;
    for (auto v : g.support()) support.push_back(rename[v]);
    generators.emplace_back(std::move(support));
  }
  return SquarefreeIdeal(std::move(compressed), std::move(generators));
}

}  // namespace

SquarefreeIdeal random_ideal(std::mt19937_64& rng, const RandomIdealOptions& options) {
  bool complete = false;
  for (int attempt = 0; attempt < 1000; ++attempt) {
    SquarefreeIdeal ideal = draw(rng, options, complete);
    if (complete) return ideal;
  }
  return draw(rng, options, complete);
}

std::vector<SquarefreeIdeal> random_ideals(std::uint64_t seed, std::size_t count, const RandomIdealOptions& options) {
  std::mt19937_64 rng(seed);
  std::vector<SquarefreeIdeal> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) out.push_back(random_ideal(rng, options));
  return out;
}

}  // namespace idpcheck
