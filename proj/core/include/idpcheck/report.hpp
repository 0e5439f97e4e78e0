#pragma once

#include "idpcheck/engine.hpp"
#include "idpcheck/hypergraph.hpp"
#include "idpcheck/oracle.hpp"

#include <string>
#include <vector>

namespace idpcheck {

enum class Format { text, json };

/// Vertices are printed 1-based everywhere. JSON output is stable for equal
/// inputs apart from the "stats" object.
std::string render_verdict(const VerdictReport& report, Format format);

std::string render_oracle(const OracleVerdict& verdict, Format format);

std::string render_hypergraph(const LabeledHypergraph& hypergraph, Format format,
                              std::size_t cycle_budget = kDefaultCycleBudget);

/// `result` is ideal_of(reduction.hypergraph) when it is nonempty.
std::string render_reduction(const Reduction& reduction, const std::optional<SquarefreeIdeal>& result, Format format);

std::string render_verification(const WitnessCheck& check, const std::vector<Rational>& coefficients, Format format);

}  // namespace idpcheck
