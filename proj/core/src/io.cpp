#include "idpcheck/io.hpp"

#include "idpcheck/errors.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <optional>
#include <set>
#include <sstream>

namespace idpcheck {

namespace {

struct Line {
  std::size_t number;
  std::string text;  // comment stripped
};

std::vector<Line> split_lines(std::string_view text) {
  std::vector<Line> out;
  std::size_t number = 1;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string line(text.substr(pos, end - pos));
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    out.push_back({number, line});
    ++number;
    pos = end + 1;
  }
  return out;
}

bool blank(const std::string& s) {
  return std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isspace(c); });
}

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

struct RawGenerator {
  std::vector<std::string> names;
  std::size_t line;
  std::size_t column;
};

class GeneratorScanner {
 public:
  GeneratorScanner(const Line& line) : line_(line) {}

  // Appends generators on this line; `open` holds the position of a trailing
  // comma that still waits for a generator on a later line.
  void scan(std::vector<RawGenerator>& out, std::optional<std::pair<std::size_t, std::size_t>>& open) {
    skip_space();
    if (at_end()) return;
    for (;;) {
      RawGenerator g{{}, line_.number, pos_ + 1};
      for (;;) {
        skip_space();
        if (at_end() || !ident_start(peek())) fail("expected a variable name");
        std::size_t start = pos_;
        while (!at_end() && ident_char(peek())) ++pos_;
        std::string name = line_.text.substr(start, pos_ - start);
        if (std::find(g.names.begin(), g.names.end(), name) != g.names.end()) {
          throw InputError("variable '" + name + "' repeated in a generator (monomials must be squarefree)",
                           line_.number, start + 1);
        }
        g.names.push_back(std::move(name));
        skip_space();
        if (!at_end() && peek() == '*') {
          ++pos_;
          continue;
        }
        break;
      }
      out.push_back(std::move(g));
      open.reset();
      if (at_end()) return;
      if (peek() != ',') fail(std::string("unexpected character '") + peek() + "'");
      const std::size_t comma = pos_ + 1;
      ++pos_;
      skip_space();
      if (at_end()) {
        open.emplace(line_.number, comma);
        return;
      }
    }
  }

 private:
  bool at_end() const { return pos_ >= line_.text.size(); }
  char peek() const { return line_.text[pos_]; }
  void skip_space() {
    while (!at_end() && (peek() == ' ' || peek() == '\t')) ++pos_;
  }
  [[noreturn]] void fail(const std::string& message) { throw InputError(message, line_.number, pos_ + 1); }

  const Line& line_;
  std::size_t pos_ = 0;
};

std::vector<std::string> parse_declaration(const Line& line, std::size_t start) {
  std::vector<std::string> names;
  std::set<std::string> seen;
  std::size_t pos = start;
  const std::string& t = line.text;
  while (pos < t.size()) {
    if (std::isspace(static_cast<unsigned char>(t[pos])) || t[pos] == ',') {
      ++pos;
      continue;
    }
    if (!ident_start(t[pos])) throw InputError("expected a variable name in the declaration", line.number, pos + 1);
    std::size_t begin = pos;
    while (pos < t.size() && ident_char(t[pos])) ++pos;
    std::string name = t.substr(begin, pos - begin);
    if (!seen.insert(name).second) throw InputError("variable '" + name + "' declared twice", line.number, begin + 1);
    names.push_back(std::move(name));
  }
  if (names.empty()) throw InputError("empty variable declaration", line.number, start + 1);
  return names;
}

long parse_int(const std::string& token, std::size_t line, std::size_t column) {
  if (token.empty() || !std::all_of(token.begin(), token.end(), [](unsigned char c) { return std::isdigit(c); }))
    throw InputError("expected a nonnegative integer, got '" + token + "'", line, column);
  if (token.size() > 9) throw InputError("integer '" + token + "' is too large", line, column);
  return std::stol(token);
}

struct Token {
  std::string text;
  std::size_t column;
};

std::vector<Token> tokens(const std::string& s) {
  std::vector<Token> out;
  std::size_t pos = 0;
  while (pos < s.size()) {
    if (std::isspace(static_cast<unsigned char>(s[pos]))) {
      ++pos;
      continue;
    }
    std::size_t begin = pos;
    while (pos < s.size() && !std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    out.push_back({s.substr(begin, pos - begin), begin + 1});
  }
  return out;
}

}  // namespace

ParsedIdeal parse_ideal_text(std::string_view text) {
  std::vector<Line> lines = split_lines(text);
  std::vector<std::string> declared;
  bool has_declaration = false;
  std::vector<RawGenerator> raw;
  std::optional<std::pair<std::size_t, std::size_t>> open;
  bool first = true;
  for (const auto& line : lines) {
    if (blank(line.text)) continue;
    std::size_t lead = line.text.find_first_not_of(" \t");
    if (line.text.compare(lead, 5, "vars:") == 0) {
      if (!first) throw InputError("variable declaration must be the first line", line.number, lead + 1);
      declared = parse_declaration(line, lead + 5);
      has_declaration = true;
      first = false;
      continue;
    }
    first = false;
    GeneratorScanner(line).scan(raw, open);
  }
  if (open) throw InputError("trailing comma without a generator", open->first, open->second);
  if (raw.empty()) throw InputError("the ideal has no generators", 1, 1);

  std::vector<std::string> warnings;
  std::set<std::string> used;
  for (const auto& g : raw) used.insert(g.names.begin(), g.names.end());
  std::vector<std::string> variables = declared;
  std::set<std::string> known(declared.begin(), declared.end());
  std::vector<std::string> extra;
  for (const auto& name : used)
    if (!known.count(name)) extra.push_back(name);
  if (has_declaration && !extra.empty()) {
    std::string list;
    for (const auto& e : extra) list += (list.empty() ? "" : ", ") + e;
    warnings.push_back("undeclared variables appended: " + list);
  }
  variables.insert(variables.end(), extra.begin(), extra.end());
  std::map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < variables.size(); ++i) index[variables[i]] = i;

  std::vector<Monomial> generators;
  for (const auto& g : raw) {
    std::vector<std::size_t> support;
    for (const auto& n : g.names) support.push_back(index.at(n));
    generators.emplace_back(std::move(support));
  }
  MinimalizeResult minimal = minimalize_generators(variables, generators);
  warnings.insert(warnings.end(), minimal.warnings.begin(), minimal.warnings.end());
  return ParsedIdeal{std::move(minimal.ideal), std::move(warnings)};
}

std::string format_ideal_text(const SquarefreeIdeal& ideal) {
  std::string out = "vars:";
  for (const auto& v : ideal.variables()) out += " " + v;
  out += "\n";
  for (std::size_t i = 0; i < ideal.generator_count(); ++i) out += ideal.generator_string(i) + "\n";
  return out;
}

ZeroOnePolytope parse_matrix_file(std::string_view text) {
  std::vector<Line> lines = split_lines(text);
  std::size_t i = 0;
  while (i < lines.size() && blank(lines[i].text)) ++i;
  if (i == lines.size()) throw InputError("missing matrix header", 1, 1);
  auto header = tokens(lines[i].text);
  if (header.size() != 2) throw InputError("matrix header must be 's n'", lines[i].number, 1);
  const long s = parse_int(header[0].text, lines[i].number, header[0].column);
  const long n = parse_int(header[1].text, lines[i].number, header[1].column);
  if (s < 1) throw InputError("matrix needs at least one row", lines[i].number, header[0].column);
  std::vector<Point> rows;
  std::map<Point, std::size_t> seen;
  for (++i; i < lines.size(); ++i) {
    if (blank(lines[i].text)) continue;
    auto row = tokens(lines[i].text);
    if (static_cast<long>(rows.size()) == s) throw InputError("more rows than the header declares", lines[i].number, 1);
    if (static_cast<long>(row.size()) != n) {
      throw InputError("row has " + std::to_string(row.size()) + " entries, expected " + std::to_string(n),
                       lines[i].number, 1);
    }
    Point p;
    for (const auto& tok : row) {
      if (tok.text != "0" && tok.text != "1") {
        throw InputError("entry '" + tok.text + "' is not 0 or 1", lines[i].number, tok.column);
      }
      p.push_back(tok.text == "1" ? 1 : 0);
    }
    if (auto it = seen.find(p); it != seen.end()) {
      throw InputError("duplicate vertex (same as line " + std::to_string(it->second) + ")", lines[i].number, 1);
    }
    seen.emplace(p, lines[i].number);
    rows.push_back(std::move(p));
  }
  if (static_cast<long>(rows.size()) != s) {
    throw InputError("expected " + std::to_string(s) + " rows, found " + std::to_string(rows.size()),
                     lines.back().number, 1);
  }
  return ZeroOnePolytope(static_cast<std::size_t>(n), std::move(rows));
}

bool looks_like_matrix(std::string_view path, std::string_view text) {
  if (path.size() >= 4 && path.substr(path.size() - 4) == ".mat") return true;
  for (const auto& line : split_lines(text)) {
    if (blank(line.text)) continue;
    auto t = tokens(line.text);
    if (t.size() != 2) return false;
    return std::all_of(t.begin(), t.end(), [](const Token& tok) {
      return !tok.text.empty() && std::all_of(tok.text.begin(), tok.text.end(), [](unsigned char c) { return std::isdigit(c); });
    });
  }
  return false;
}

std::vector<Rational> parse_witness_file(std::string_view text) {
  std::vector<Rational> out;
  for (const auto& line : split_lines(text)) {
    auto t = tokens(line.text);
    if (t.empty()) continue;
    if (t.size() != 1) throw InputError("expected one rational per line", line.number, t[1].column);
    try {
      out.push_back(parse_rational(t[0].text));
    } catch (const std::invalid_argument& e) {
      throw InputError(e.what(), line.number, t[0].column);
    }
  }
  if (out.empty()) throw InputError("the witness file has no coefficients", 1, 1);
  return out;
}

}  // namespace idpcheck
