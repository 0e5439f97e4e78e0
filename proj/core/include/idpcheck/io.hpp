#pragma once

#include "idpcheck/model.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace idpcheck {

struct ParsedIdeal {
  SquarefreeIdeal ideal;
  /// Non-fatal notes: undeclared variables, dropped non-minimal generators.
  std::vector<std::string> warnings;
};

/// Grammar:
///   file      := [ "vars:" name+ newline ] generator ( ("," | newline) generator )*
///   generator := name ( "*" name )*
///   name      := [A-Za-z_][A-Za-z0-9_]*
/// `#` starts a comment. Without a declaration variables are ordered
/// lexicographically; undeclared names after a declaration are appended in
/// lexicographic order. Non-minimal generator lists are minimalized.
/// Throws InputError with a 1-based line and column.
ParsedIdeal parse_ideal_text(std::string_view text);

/// Declaration line plus one generator per line; re-parses to an equal ideal.
std::string format_ideal_text(const SquarefreeIdeal& ideal);

/// Header "s n", then s lines of n entries in {0,1}, one vertex per line.
ZeroOnePolytope parse_matrix_file(std::string_view text);

/// True for a ".mat" path, or when the first content line is two integers.
bool looks_like_matrix(std::string_view path, std::string_view text);

/// One rational per line; `#` comments and blank lines are ignored.
std::vector<Rational> parse_witness_file(std::string_view text);

}  // namespace idpcheck
