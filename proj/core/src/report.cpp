#include "idpcheck/report.hpp"

#include "idpcheck/cycles.hpp"

#include <json.hpp>

#include <sstream>

namespace idpcheck {

namespace {

using Json = nlohmann::ordered_json;

Json one_based(const VertexSet& vs) {
  Json out = Json::array();
  for (auto v : vs) out.push_back(v + 1);
  return out;
}

Json rationals(const std::vector<Rational>& values) {
  Json out = Json::array();
  for (const auto& v : values) out.push_back(to_fraction_string(v));
  return out;
}

Json integers(const std::vector<Integer>& values) {
  Json out = Json::array();
  for (const auto& v : values) out.push_back(v.get_str());
  return out;
}

Json witness_json(const std::optional<Witness>& w) {
  if (!w) return nullptr;
  return Json{{"coefficients", rationals(w->coefficients)}, {"degree", w->degree}, {"point", w->point}};
}

Json reductions_json(const ReductionTrace& trace) {
  Json out = Json::array();
  for (const auto& round : trace.rounds) {
    Json removed = Json::array();
    Json labels = Json::array();
    for (const auto& r : round) {
      removed.push_back(r.vertex + 1);
      labels.push_back(r.label);
    }
    out.push_back(Json{{"removed", removed}, {"labels", labels}});
  }
  return out;
}

std::string rounds_text(const ReductionTrace& trace) {
  std::string out;
  for (std::size_t i = 0; i < trace.rounds.size(); ++i) {
    VertexSet vs;
    for (const auto& r : trace.rounds[i]) vs.push_back(r.vertex);
    out += "  round " + std::to_string(i + 1) + ": removed " + format_vertex_set(vs) + "\n";
  }
  return out;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace

std::string render_verdict(const VerdictReport& report, Format format) {
  if (format == Format::json) {
    Json j;
    j["verdict"] = verdict_name(report.verdict);
    j["rule"] = report.rule;
    j["paper_rule"] = report.paper_rule.empty() ? Json(nullptr) : Json(report.paper_rule);
    j["detail"] = report.detail;
    j["witness"] = witness_json(report.witness);
    if (report.torsion_certificate) {
      const auto& t = *report.torsion_certificate;
      j["torsion_certificate"] = Json{{"vector", integers(t.vector)},
                                      {"multiplier", t.multiplier.get_str()},
                                      {"combination", integers(t.combination)}};
    } else {
      j["torsion_certificate"] = nullptr;
    }
    j["reductions"] = reductions_json(report.reductions);
    if (report.minor_trace) {
      Json trace = Json::array();
      for (const auto& e : *report.minor_trace) trace.push_back(one_based(e));
      j["minor_trace"] = Json{{"deleted_edges", trace}, {"rule", report.minor_rule}};
    } else {
      j["minor_trace"] = nullptr;
    }
    j["verified"] = report.verified;
    j["verification"] = report.verification;
    Json diags = Json::array();
    for (const auto& d : report.diagnostics)
      diags.push_back(Json{{"rule", d.rule}, {"outcome", d.outcome}, {"detail", d.detail}});
    j["diagnostics"] = diags;
    j["stats"] = Json{{"elapsed_ms", report.stats.elapsed_ms},
                      {"cycle_nodes", report.stats.cycle_nodes},
                      {"minors_examined", report.stats.minors_examined},
                      {"oracle_points", report.stats.oracle_points},
                      {"oracle_degree_bound", report.stats.oracle_degree_bound}};
    return dump(j);
  }
  std::ostringstream out;
  out << "verdict: " << verdict_name(report.verdict) << "\n";
  out << "rule: " << report.rule;
  if (!report.paper_rule.empty()) out << " (" << report.paper_rule << ")";
  out << "\n";
  if (!report.paper_rule.empty() && !report.detail.empty()) out << report.paper_rule << ": " << report.detail << "\n";
  else if (!report.detail.empty()) out << report.detail << "\n";
  if (!report.reductions.empty()) out << "reductions:\n" << rounds_text(report.reductions);
  if (report.minor_trace) {
    out << "minor: deleted";
    for (const auto& e : *report.minor_trace) out << " " << format_vertex_set(e);
    out << " (" << rule_citation(report.minor_rule) << ")\n";
  }
  if (report.witness) {
    out << "witness:\n";
    out << "  coefficients: " << format_rational_vector(report.witness->coefficients) << "\n";
    out << "  degree: " << report.witness->degree << "\n";
    out << "  point: " << format_point(report.witness->point) << "\n";
  }
  if (report.torsion_certificate) {
    out << "torsion: order " << report.torsion_certificate->multiplier.get_str() << ", u = (";
    for (std::size_t i = 0; i < report.torsion_certificate->vector.size(); ++i)
      out << (i ? ", " : "") << report.torsion_certificate->vector[i].get_str();
    out << ")\n";
  }
  if (report.verdict == Verdict::not_normal) out << "verified: " << (report.verified ? "yes" : "no") << "\n";
  return out.str();
}

std::string render_oracle(const OracleVerdict& v, Format format) {
  const char* status = v.status == OracleStatus::normal ? "normal"
                       : v.status == OracleStatus::not_normal ? "not_normal"
                                                              : "unknown";
  if (format == Format::json) {
    Json j;
    j["verdict"] = status;
    j["rule"] = rule_id::oracle;
    j["paper_rule"] = rule_citation(rule_id::oracle);
    j["witness"] = witness_json(v.witness);
    j["verified"] = v.witness.has_value();
    j["degree_bound"] = v.degree_bound;
    j["degrees_checked"] = v.degrees_checked;
    j["note"] = v.note;
    j["stats"] = Json{{"oracle_points", v.points_examined}};
    return dump(j);
  }
  std::ostringstream out;
  out << "verdict: " << status << "\n";
  out << "degree bound: " << v.degree_bound << "\n";
  out << "lattice points examined: " << v.points_examined << "\n";
  if (v.witness) {
    out << "witness:\n";
    out << "  coefficients: " << format_rational_vector(v.witness->coefficients) << "\n";
    out << "  degree: " << v.witness->degree << "\n";
    out << "  point: " << format_point(v.witness->point) << "\n";
  }
  if (!v.note.empty()) out << v.note << "\n";
  return out.str();
}

std::string render_hypergraph(const LabeledHypergraph& h, Format format, std::size_t cycle_budget) {
  OneSkeleton skeleton = one_skeleton(h);
  BalanceResult balance = is_balanced(h, cycle_budget);
  const char* balanced = balance.status == Balance::balanced     ? "yes"
                         : balance.status == Balance::unbalanced ? "no"
                                                                 : "unknown";
  std::vector<VertexSet> simple;
  for (const auto& e : simple_edges(h)) simple.push_back(e.vertices);
  if (format == Format::json) {
    Json j;
    j["vertices"] = h.vertex_count();
    Json edges = Json::array();
    for (const auto& e : h.edges()) edges.push_back(Json{{"vertices", one_based(e.vertices)}, {"labels", e.labels}});
    j["edges"] = edges;
    j["open_vertices"] = one_based(open_vertices(h));
    j["closed_vertices"] = one_based(closed_vertices(h));
    Json simple_json = Json::array();
    for (const auto& e : simple) simple_json.push_back(one_based(e));
    j["simple_edges"] = simple_json;
    Json sk = Json::array();
    for (auto [a, b] : skeleton.edges) sk.push_back(Json::array({a + 1, b + 1}));
    Json comps = Json::array();
    for (const auto& c : skeleton.components) comps.push_back(one_based(c));
    j["one_skeleton"] = Json{{"edges", sk}, {"components", comps}, {"bipartite", skeleton.bipartite()}};
    j["balanced"] = balanced;
    if (balance.cycle) {
      Json cyc = Json::array();
      for (auto v : balance.cycle->vertices) cyc.push_back(v + 1);
      j["special_odd_cycle"] = cyc;
    } else {
      j["special_odd_cycle"] = nullptr;
    }
    j["separated"] = is_separated(h);
    return dump(j);
  }
  std::ostringstream out;
  out << "vertices: " << h.vertex_count() << "\n";
  out << "edges: " << h.edges().size() << "\n";
  for (const auto& e : h.edges()) {
    out << "  " << format_vertex_set(e.vertices) << ":";
    for (std::size_t i = 0; i < e.labels.size(); ++i) out << (i ? ", " : " ") << e.labels[i];
    out << "\n";
  }
  out << "open vertices: " << format_vertex_set(open_vertices(h)) << "\n";
  out << "closed vertices: " << format_vertex_set(closed_vertices(h)) << "\n";
  out << "simple edges:";
  for (const auto& e : simple) out << " " << format_vertex_set(e);
  out << "\n";
  out << "1-skeleton:";
  for (auto [a, b] : skeleton.edges) out << " " << a + 1 << "-" << b + 1;
  out << "\n";
  out << "  components: " << skeleton.components.size() << ", bipartite: " << (skeleton.bipartite() ? "yes" : "no")
      << "\n";
  out << "balanced: " << balanced;
  if (balance.cycle) out << " (special odd cycle " << format_cycle(*balance.cycle) << ")";
  out << "\n";
  return out.str();
}

std::string render_reduction(const Reduction& reduction, const std::optional<SquarefreeIdeal>& result, Format format) {
  const bool empty = reduction.hypergraph.empty();
  if (format == Format::json) {
    Json j;
    j["reductions"] = reductions_json(reduction.trace);
    j["remaining_vertices"] = reduction.hypergraph.vertex_count();
    j["ideal"] = result ? Json(result->generators_string()) : Json(nullptr);
    j["verdict"] = empty ? "normal" : "unknown";
    j["rule"] = empty ? Json(rule_id::empty_after_reduction) : Json(nullptr);
    return dump(j);
  }
  std::ostringstream out;
  if (reduction.trace.empty()) out << "no closed vertices\n";
  else out << "reductions:\n" << rounds_text(reduction.trace);
  out << "remaining vertices: " << reduction.hypergraph.vertex_count() << "\n";
  if (result) out << "ideal: " << result->generators_string() << "\n";
  if (empty) out << "hypergraph is empty\nverdict: normal (" << rule_citation(rule_id::empty_after_reduction) << ")\n";
  return out.str();
}

std::string render_verification(const WitnessCheck& check, const std::vector<Rational>& coefficients, Format format) {
  if (format == Format::json) {
    Json j;
    j["valid"] = check.valid;
    j["reason"] = check.reason;
    j["coefficients"] = rationals(coefficients);
    return dump(j);
  }
  if (check.valid) return "valid\n";
  return "invalid: " + check.reason + "\n";
}

}  // namespace idpcheck
