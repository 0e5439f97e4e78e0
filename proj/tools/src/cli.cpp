#include "idpcheck_cli/cli.hpp"

#include "idpcheck/engine.hpp"
#include "idpcheck/errors.hpp"
#include "idpcheck/io.hpp"
#include "idpcheck/random_ideals.hpp"
#include "idpcheck/report.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

namespace idpcheck::cli {

namespace {

struct Options {
  std::string file;
  std::string witness_file;
  std::string format = "text";
  bool no_oracle = false;
  std::optional<std::int64_t> oracle_max_degree;
  bool no_minors = false;
  std::size_t minor_budget = kDefaultMinorBudget;
  bool relaxed = false;
  bool no_verify = false;
  std::uint64_t seed = 1;
  std::size_t count = 100;
};

struct Input {
  std::optional<SquarefreeIdeal> ideal;
  ZeroOnePolytope polytope{1, {Point{1}}};
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

Input load(const std::string& path, std::ostream& err) {
  const std::string text = read_file(path);
  Input input;
  if (looks_like_matrix(path, text)) {
    input.polytope = parse_matrix_file(text);
    if (has_antichain_supports(input.polytope)) {
      input.ideal = ideal_from_polytope(input.polytope);
    } else {
      err << "warning: vertex supports are not an antichain; only polytope-level checks apply\n";
    }
    return input;
  }
  ParsedIdeal parsed = parse_ideal_text(text);
  for (const auto& w : parsed.warnings) err << "warning: " << w << "\n";
  input.polytope = polytope_from_ideal(parsed.ideal);
  input.ideal = std::move(parsed.ideal);
  return input;
}

const SquarefreeIdeal& require_ideal(const Input& input) {
  if (!input.ideal) throw InputError("this command needs a squarefree monomial ideal, not an arbitrary 0-1 matrix");
  return *input.ideal;
}

EngineConfig engine_config(const Options& o) {
  EngineConfig c;
  c.oracle = !o.no_oracle;
  c.oracle_max_degree = o.oracle_max_degree;
  c.minors = !o.no_minors;
  c.minor_budget = o.minor_budget;
  c.relaxed_connection = o.relaxed;
  c.verify = !o.no_verify;
  return c;
}

Format format_of(const Options& o) { return o.format == "json" ? Format::json : Format::text; }

int cmd_analyze(const Options& o, std::ostream& out, std::ostream& err) {
  Input input = load(o.file, err);
  VerdictReport r = input.ideal ? analyze(*input.ideal, engine_config(o)) : analyze_polytope(input.polytope, engine_config(o));
  out << render_verdict(r, format_of(o));
  return r.verdict == Verdict::unknown ? kExitUndecided : kExitOk;
}

int cmd_oracle(const Options& o, std::ostream& out, std::ostream& err) {
  Input input = load(o.file, err);
  OracleVerdict v = decide_normal_bruteforce(input.polytope, OracleOptions{o.oracle_max_degree, std::nullopt});
  out << render_oracle(v, format_of(o));
  return v.status == OracleStatus::inconclusive ? kExitUndecided : kExitOk;
}

int cmd_hypergraph(const Options& o, std::ostream& out, std::ostream& err) {
  Input input = load(o.file, err);
  out << render_hypergraph(build_from_ideal(require_ideal(input)), format_of(o));
  return kExitOk;
}

int cmd_reduce(const Options& o, std::ostream& out, std::ostream& err) {
  Input input = load(o.file, err);
  Reduction red = reduce_closed_fixpoint(build_from_ideal(require_ideal(input)));
  std::optional<SquarefreeIdeal> rest;
  if (!red.hypergraph.empty()) rest = ideal_of(red.hypergraph);
  out << render_reduction(red, rest, format_of(o));
  return kExitOk;
}

int cmd_verify(const Options& o, std::ostream& out, std::ostream& err) {
  Input input = load(o.file, err);
  std::vector<Rational> c = parse_witness_file(read_file(o.witness_file));
  out << render_verification(verify_coefficients(input.polytope, c), c, format_of(o));
  return kExitOk;
}

int cmd_crosscheck(const Options& o, std::ostream& out) {
  std::size_t mismatches = 0, unknown = 0, not_normal = 0;
  EngineConfig config = engine_config(o);
  config.oracle = false;
  for (const auto& ideal : random_ideals(o.seed, o.count)) {
    VerdictReport r = analyze(ideal, config);
    if (r.verdict == Verdict::unknown) {
      ++unknown;
      continue;
    }
    OracleVerdict v = decide_normal_bruteforce(polytope_from_ideal(ideal));
    const bool oracle_normal = v.status == OracleStatus::normal;
    if (r.verdict == Verdict::not_normal) ++not_normal;
    if (oracle_normal != (r.verdict == Verdict::normal)) {
      ++mismatches;
      out << "mismatch (" << r.rule << "): " << ideal.generators_string() << "\n";
    }
  }
  out << "instances: " << o.count << ", decided by rules: " << (o.count - unknown) << ", not normal: " << not_normal
      << ", mismatches: " << mismatches << "\n";
  return mismatches == 0 ? kExitOk : kExitMismatch;
}

void common_flags(CLI::App* sub, Options& o) {
  sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  sub->add_flag("--no-oracle", o.no_oracle, "Skip the brute-force fallback");
  sub->add_option("--oracle-max-degree", o.oracle_max_degree, "Override the oracle degree bound")
      ->check(CLI::NonNegativeNumber);
  sub->add_flag("--no-minors", o.no_minors, "Skip the minor search");
  sub->add_option("--minor-budget", o.minor_budget, "Maximum number of minors examined");
  sub->add_flag("--relaxed-connection", o.relaxed, "Allow an edge path between exceptional cycles");
  sub->add_flag("--no-verify", o.no_verify, "Do not re-verify negative certificates");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Normality checker for 0-1 polytopes of squarefree monomial ideals", "idpcheck"};
  app.require_subcommand(1);
  Options o;
  auto* analyze_cmd = app.add_subcommand("analyze", "Run the full decision pipeline");
  auto* oracle_cmd = app.add_subcommand("oracle", "Brute-force lattice point check only");
  auto* hyper_cmd = app.add_subcommand("hypergraph", "Print the labeled hypergraph");
  auto* reduce_cmd = app.add_subcommand("reduce", "Remove closed vertices to a fixpoint");
  auto* verify_cmd = app.add_subcommand("verify", "Check a witness file");
  auto* cross_cmd = app.add_subcommand("crosscheck", "Compare rules with the oracle on random ideals");
  for (auto* sub : {analyze_cmd, oracle_cmd, hyper_cmd, reduce_cmd, verify_cmd}) {
    sub->add_option("file", o.file, "Ideal file, or 0-1 matrix file (.mat)")->required();
    common_flags(sub, o);
  }
  verify_cmd->add_option("--witness", o.witness_file, "One rational coefficient per line")->required();
  common_flags(cross_cmd, o);
  cross_cmd->add_option("--seed", o.seed, "Random seed")->required();
  cross_cmd->add_option("--count", o.count, "Number of random ideals");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  }

  try {
    if (analyze_cmd->parsed()) return cmd_analyze(o, out, err);
    if (oracle_cmd->parsed()) return cmd_oracle(o, out, err);
    if (hyper_cmd->parsed()) return cmd_hypergraph(o, out, err);
    if (reduce_cmd->parsed()) return cmd_reduce(o, out, err);
    if (verify_cmd->parsed()) return cmd_verify(o, out, err);
    if (cross_cmd->parsed()) return cmd_crosscheck(o, out);
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  return kExitInputError;
}

}  // namespace idpcheck::cli
