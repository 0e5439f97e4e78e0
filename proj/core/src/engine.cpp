#include "idpcheck/engine.hpp"

#include "idpcheck/errors.hpp"

#include <chrono>
#include <map>

namespace idpcheck {

std::string rule_citation(const std::string& id) {
  static const std::map<std::string, std::string> table{
      {rule_id::empty_after_reduction, "Proposition 3.3"},
      {rule_id::connected_odd, "Theorem 4.1"},
      {rule_id::balanced_uniform, "Proposition 3.5"},
      {rule_id::torsion, "Remark 3.2"},
      {rule_id::bicolor, "Theorem 4.5"},
      {rule_id::exceptional, "Theorem 4.8"},
      {rule_id::minor, "Theorem 3.8"},
      {rule_id::oracle, "Proposition 3.1"},
  };
  auto it = table.find(id);
  return it == table.end() ? "" : it->second;
}

std::string verdict_name(Verdict verdict) {
  switch (verdict) {
    case Verdict::normal: return "normal";
    case Verdict::not_normal: return "not_normal";
    case Verdict::unknown: return "unknown";
  }
  return "unknown";
}

ZeroOnePolytope hypergraph_polytope(const LabeledHypergraph& hypergraph) {
  return polytope_from_ideal(ideal_of(hypergraph));
}

namespace {

std::string outcome_name(RuleVerdict v) {
  switch (v) {
    case RuleVerdict::normal: return "normal";
    case RuleVerdict::not_normal: return "not_normal";
    case RuleVerdict::inapplicable: return "inapplicable";
    case RuleVerdict::budget_exceeded: return "budget_exceeded";
  }
  return "inapplicable";
}

// A rule result on some hypergraph, before lifting.
struct Finding {
  std::string rule;
  RuleVerdict verdict = RuleVerdict::inapplicable;
  std::string detail;
  std::vector<Rational> coefficients;
  std::optional<TorsionCertificate> torsion;
};

std::string pair_detail(const ExceptionalPair& pair) {
  std::string out = "cycles " + format_vertex_set(pair.first.vertex_set()) + " via " +
                    format_vertex_set(pair.first_edge) + " and " + format_vertex_set(pair.second.vertex_set()) +
                    " via " + format_vertex_set(pair.second_edge) + ", connected by ";
  for (std::size_t i = 0; i < pair.connection.size(); ++i) out += (i ? "," : "") + format_vertex_set(pair.connection[i]);
  return out;
}

std::string coloring_detail(const TwoColoring& c) {
  return "2-solvable mod " + std::to_string(c.prime) + ", simple edge " + format_vertex_set(*c.simple_edge) + " has " +
         std::to_string(c.simple_edge_counts.first) + " red and " + std::to_string(c.simple_edge_counts.second) +
         " blue vertices";
}

// Negative rules shared by the top level and minors. Torsion is done by the caller.
std::vector<Finding> negative_rules(const LabeledHypergraph& h, const RuleToggles& toggles, const EngineConfig& config,
                                    bool include_torsion, EngineStats& stats) {
  std::vector<Finding> out;
  if (toggles.connected_odd) {
    RuleOutcome o = decide_connected_odd(h);
    Finding f{rule_id::connected_odd, o.verdict, o.reason, {}, {}};
    if (o.witness) f.coefficients = o.witness->coefficients;
    out.push_back(std::move(f));
  }
  if (toggles.bicolor) {
    Finding f{rule_id::bicolor, RuleVerdict::inapplicable, "no 2-solvable colouring with an unbalanced simple edge", {}, {}};
    if (auto b = bicolor_obstruction(h)) {
      f.verdict = RuleVerdict::not_normal;
      f.detail = coloring_detail(b->coloring);
      f.coefficients = b->witness.coefficients;
    }
    out.push_back(std::move(f));
  }
  if (toggles.exceptional) {
    Finding f{rule_id::exceptional, RuleVerdict::inapplicable, "no exceptional pair of odd cycles", {}, {}};
    ExceptionalSearch search = find_exceptional_pair(h, config.relaxed_connection, config.cycle_budget);
    stats.cycle_nodes += search.nodes;
    if (search.status == SearchStatus::budget_exceeded) {
      f.verdict = RuleVerdict::budget_exceeded;
      f.detail = "exceptional pair search exceeded its budget";
    } else if (search.pair) {
      f.verdict = RuleVerdict::not_normal;
      f.detail = pair_detail(*search.pair);
      f.coefficients = exceptional_witness(h, *search.pair, config.relaxed_connection).coefficients;
    }
    out.push_back(std::move(f));
  }
  if (include_torsion && toggles.torsion) {
    Finding f{rule_id::torsion, RuleVerdict::inapplicable, "lattice is torsion-free", {}, {}};
    if (auto cert = torsion_check(hypergraph_polytope(h))) {
      f.verdict = RuleVerdict::not_normal;
      f.detail = "torsion element of order " + cert->multiplier.get_str();
      f.coefficients = torsion_coefficients(*cert);
      f.torsion = std::move(cert);
    }
    out.push_back(std::move(f));
  }
  return out;
}

VertexSet to_input(const LabeledHypergraph& reduced, const VertexSet& local) {
  VertexSet out;
  for (auto v : local) out.push_back(reduced.origin()[v]);
  std::sort(out.begin(), out.end());
  return out;
}

// Full-length coefficients for the input from coefficients on the reduced hypergraph.
std::vector<Rational> expand(std::size_t s, const LabeledHypergraph& reduced, const std::vector<Rational>& local) {
  std::vector<Rational> full(s, Rational(0));
  for (std::size_t i = 0; i < local.size(); ++i) full[reduced.origin()[i]] = local[i];
  return full;
}

struct Checked {
  std::optional<Witness> witness;
  bool verified = false;
  std::string message;
};

Checked check(const ZeroOnePolytope& polytope, const std::vector<Rational>& coefficients, bool verify) {
  Checked out;
  try {
    out.witness = make_witness(polytope, coefficients);
  } catch (const CertificateError& e) {
    out.message = e.what();
    return out;
  }
  if (!verify) {
    out.message = "verification disabled";
    return out;
  }
  WitnessCheck c = verify_witness(polytope, *out.witness);
  out.verified = c.valid;
  out.message = c.valid ? "witness verified by the oracle" : c.reason;
  if (!c.valid) out.witness.reset();
  return out;
}

void run_oracle(const ZeroOnePolytope& polytope, const EngineConfig& config, VerdictReport& report) {
  if (!config.oracle) {
    report.diagnostics.push_back({rule_id::oracle, "disabled", ""});
    return;
  }
  if (polytope.vertex_count() > config.oracle_max_vertices || polytope.ambient_dim() > config.oracle_max_variables) {
    report.diagnostics.push_back({rule_id::oracle, "budget_exceeded",
                                  "instance exceeds the oracle size limits (" +
                                      std::to_string(config.oracle_max_vertices) + " vertices, " +
                                      std::to_string(config.oracle_max_variables) + " variables)"});
    return;
  }
  OracleVerdict v = decide_normal_bruteforce(polytope, OracleOptions{config.oracle_max_degree, std::nullopt});
  report.stats.oracle_points = v.points_examined;
  report.stats.oracle_degree_bound = v.degree_bound;
  const std::string checked = "degrees 2.." + std::to_string(v.degree_bound) + " checked, " +
                              std::to_string(v.points_examined) + " lattice points";
  switch (v.status) {
    case OracleStatus::normal:
      report.diagnostics.push_back({rule_id::oracle, "normal", checked});
      report.verdict = Verdict::normal;
      report.rule = rule_id::oracle;
      report.detail = "every lattice point of tP is a sum of t vertices (" + checked + ")";
      return;
    case OracleStatus::not_normal:
      report.diagnostics.push_back({rule_id::oracle, "not_normal", ""});
      report.verdict = Verdict::not_normal;
      report.rule = rule_id::oracle;
      report.detail = "point " + format_point(v.witness->point) + " of " + std::to_string(v.witness->degree) +
                      "P is not a sum of " + std::to_string(v.witness->degree) + " vertices";
      report.witness = v.witness;
      report.verified = true;
      report.verification = "witness verified by the oracle";
      return;
    case OracleStatus::inconclusive:
      report.diagnostics.push_back({rule_id::oracle, "budget_exceeded", v.note});
      return;
  }
}

double since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
}

void finish(VerdictReport& report, std::chrono::steady_clock::time_point start) {
  report.paper_rule = rule_citation(report.rule);
  if (report.rule == rule_id::minor && !report.minor_rule.empty())
    report.paper_rule += " (via " + rule_citation(report.minor_rule) + ")";
  report.stats.elapsed_ms = since(start);
}

}  // namespace

MinorSearchResult minor_search(const LabeledHypergraph& hypergraph, const EngineConfig& config) {
  MinorSearchResult result;
  ZeroOnePolytope polytope = hypergraph_polytope(hypergraph);
  EngineStats scratch;
  result.complete = for_each_minor(hypergraph, config.minor_budget, [&](const Minor& minor) {
    ++result.minors_examined;
    if (minor.surviving.size() == hypergraph.vertex_count() || minor.surviving.size() <= 1) return true;
    for (auto& f : negative_rules(minor.hypergraph, config.minor_rules, config, true, scratch)) {
      if (f.verdict != RuleVerdict::not_normal) continue;
      Witness lifted;
      try {
        lifted = extend_witness(hypergraph, minor.surviving, f.coefficients);
      } catch (const CertificateError&) {
        continue;
      }
      if (!verify_witness(polytope, lifted).valid) continue;
      result.hit = MinorHit{minor.deletions, minor.surviving, f.rule, f.detail, std::move(lifted), result.minors_examined};
      return false;
    }
    return true;
  });
  if (result.hit) result.complete = true;
  return result;
}

VerdictReport analyze(const SquarefreeIdeal& ideal, const EngineConfig& config) {
  const auto start = std::chrono::steady_clock::now();
  VerdictReport report;
  const LabeledHypergraph h = build_from_ideal(ideal);
  const ZeroOnePolytope polytope = polytope_from_ideal(ideal);
  const std::size_t s = h.vertex_count();

  Reduction reduction = reduce_closed_fixpoint(h);
  report.reductions = reduction.trace;
  const LabeledHypergraph& reduced = reduction.hypergraph;
  if (reduced.empty()) {
    report.verdict = Verdict::normal;
    report.rule = rule_id::empty_after_reduction;
    report.detail = "removing closed vertices leaves the empty hypergraph";
    finish(report, start);
    return report;
  }
  if (reduced.vertex_count() == 1) {
    report.verdict = Verdict::normal;
    report.rule = rule_id::single_vertex;
    report.detail = "the reduced hypergraph has a single vertex";
    finish(report, start);
    return report;
  }

  std::vector<Finding> findings;
  const RuleToggles& rules = config.rules;
  {
    RuleToggles first = rules;
    first.torsion = first.bicolor = first.exceptional = false;
    for (auto& f : negative_rules(reduced, first, config, false, report.stats)) findings.push_back(std::move(f));
  }
  if (rules.balanced_uniform) {
    RuleOutcome o = balanced_uniform_rule(reduced, config.cycle_budget);
    findings.push_back(Finding{rule_id::balanced_uniform, o.verdict, o.reason, {}, {}});
  }
  {
    RuleToggles rest = rules;
    rest.connected_odd = rest.torsion = false;
    for (auto& f : negative_rules(reduced, rest, config, false, report.stats)) findings.push_back(std::move(f));
  }
  if (rules.torsion) {
    Finding f{rule_id::torsion, RuleVerdict::inapplicable, "lattice is torsion-free", {}, {}};
    if (auto cert = torsion_check(polytope)) {
      f.verdict = RuleVerdict::not_normal;
      f.detail = "torsion element of order " + cert->multiplier.get_str();
      f.torsion = std::move(cert);
    }
    findings.push_back(std::move(f));
  }

  bool decided = false;
  for (auto& f : findings) {
    Diagnostic d{f.rule, outcome_name(f.verdict), f.detail};
    if (!decided && f.verdict == RuleVerdict::normal) {
      report.verdict = Verdict::normal;
      report.rule = f.rule;
      report.detail = f.detail;
      decided = true;
    } else if (f.verdict == RuleVerdict::not_normal) {
      Checked c;
      if (f.torsion) {
        auto bad = torsion_certificate_violation(polytope, *f.torsion);
        c = check(polytope, torsion_coefficients(*f.torsion), config.verify);
        if (bad) {
          c.witness.reset();
          c.verified = false;
          c.message = *bad;
        }
      } else {
        c = check(polytope, expand(s, reduced, f.coefficients), config.verify);
      }
      if (!c.witness) {
        d.outcome = "rejected";
        d.detail += "; " + c.message;
      } else if (!decided) {
        report.verdict = Verdict::not_normal;
        report.rule = f.rule;
        report.detail = f.detail;
        report.witness = std::move(c.witness);
        report.torsion_certificate = f.torsion;
        report.verified = c.verified;
        report.verification = c.message;
        decided = true;
      }
    }
    report.diagnostics.push_back(std::move(d));
  }
  if (decided) {
    finish(report, start);
    return report;
  }

  if (config.minors) {
    MinorSearchResult m = minor_search(reduced, config);
    report.stats.minors_examined = m.minors_examined;
    if (m.hit) {
      Checked c = check(polytope, expand(s, reduced, m.hit->witness.coefficients), config.verify);
      Diagnostic d{rule_id::minor, "not_normal", m.hit->detail};
      if (c.witness) {
        report.verdict = Verdict::not_normal;
        report.rule = rule_id::minor;
        report.minor_rule = m.hit->inner_rule;
        std::vector<VertexSet> trace;
        for (const auto& e : m.hit->deletions) trace.push_back(to_input(reduced, e));
        report.minor_trace = trace;
        report.detail = "minor on " + format_vertex_set(to_input(reduced, m.hit->surviving)) + ": " + m.hit->detail;
        report.witness = std::move(c.witness);
        report.verified = c.verified;
        report.verification = c.message;
        report.diagnostics.push_back(std::move(d));
        finish(report, start);
        return report;
      }
      d.outcome = "rejected";
      d.detail += "; " + c.message;
      report.diagnostics.push_back(std::move(d));
    } else {
      report.diagnostics.push_back({rule_id::minor, m.complete ? "inapplicable" : "budget_exceeded",
                                    std::to_string(m.minors_examined) + " minors examined"});
    }
  } else {
    report.diagnostics.push_back({rule_id::minor, "disabled", ""});
  }

  run_oracle(polytope, config, report);
  if (report.verdict == Verdict::unknown) report.detail = "no rule applied within the configured budgets";
  finish(report, start);
  return report;
}

VerdictReport analyze_polytope(const ZeroOnePolytope& polytope, const EngineConfig& config) {
  if (has_antichain_supports(polytope)) return analyze(ideal_from_polytope(polytope), config);
  const auto start = std::chrono::steady_clock::now();
  VerdictReport report;
  report.diagnostics.push_back({"structure", "inapplicable",
                                "vertex supports are not an antichain; only polytope-level checks apply"});
  if (polytope.vertex_count() <= 1) {
    report.verdict = Verdict::normal;
    report.rule = rule_id::single_vertex;
    report.detail = "the polytope is a single point";
    finish(report, start);
    return report;
  }
  if (config.rules.torsion) {
    if (auto cert = torsion_check(polytope)) {
      Checked c = check(polytope, torsion_coefficients(*cert), config.verify);
      if (c.witness && !torsion_certificate_violation(polytope, *cert)) {
        report.diagnostics.push_back({rule_id::torsion, "not_normal", "torsion element of order " + cert->multiplier.get_str()});
        report.verdict = Verdict::not_normal;
        report.rule = rule_id::torsion;
        report.detail = "torsion element of order " + cert->multiplier.get_str();
        report.witness = std::move(c.witness);
        report.torsion_certificate = std::move(cert);
        report.verified = c.verified;
        report.verification = c.message;
        finish(report, start);
        return report;
      }
    }
    report.diagnostics.push_back({rule_id::torsion, "inapplicable", "lattice is torsion-free"});
  }
  run_oracle(polytope, config, report);
  if (report.verdict == Verdict::unknown) report.detail = "no rule applied within the configured budgets";
  finish(report, start);
  return report;
}

}  // namespace idpcheck
