#include "idpcheck/numeric.hpp"

#include "idpcheck/errors.hpp"

#include <limits>
#include <stdexcept>

namespace idpcheck {

std::string to_fraction_string(const Rational& value) {
  Rational canonical = value;
  canonical.canonicalize();
  return canonical.get_num().get_str() + "/" + canonical.get_den().get_str();
}

namespace {

bool valid_integer_text(std::string_view text) {
  if (text.empty()) return false;
  std::size_t start = (text.front() == '-' || text.front() == '+') ? 1 : 0;
  if (start == text.size()) return false;
  for (std::size_t i = start; i < text.size(); ++i) {
    if (text[i] < '0' || text[i] > '9') return false;
  }
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  while (!text.empty() && (text.front() == ' ' || text.front() == '\t')) text.remove_prefix(1);
  while (!text.empty() && (text.back() == ' ' || text.back() == '\t' || text.back() == '\r')) {
    text.remove_suffix(1);
  }
  auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!valid_integer_text(num) || !valid_integer_text(den) || den.front() == '-' || den.front() == '+') {
    throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
  }
  std::string num_text(num.front() == '+' ? num.substr(1) : num);
  Integer n(num_text, 10);
  Integer d(std::string(den), 10);
  if (d == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  Rational result(n, d);
  result.canonicalize();
  return result;
}

bool is_integral(const Rational& value) { return value.get_den() == 1; }

std::int64_t to_int64(const Integer& value) {
  if (!value.fits_slong_p()) throw std::overflow_error("integer does not fit in int64");
  return static_cast<std::int64_t>(value.get_si());
}

std::int64_t to_int64(const Rational& value) {
  if (!is_integral(value)) throw std::overflow_error("rational is not integral");
  return to_int64(value.get_num());
}

InputError::InputError(const std::string& message, std::size_t line, std::size_t column)
    : std::runtime_error(line == 0 ? message
                                   : "line " + std::to_string(line) + ", column " +
                                         std::to_string(column) + ": " + message),
      line_(line),
      column_(column) {}

NotSeparatedError::NotSeparatedError(std::pair<std::size_t, std::size_t> pair)
    : std::runtime_error("hypergraph is not separated: vertices " + std::to_string(pair.first + 1) +
                         " and " + std::to_string(pair.second + 1) + " are not split by any edges"),
      pair_(pair) {}

}  // namespace idpcheck
