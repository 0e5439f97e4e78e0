#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace idpcheck {

using Integer = mpz_class;
using Rational = mpq_class;

/// Integer lattice point. Coordinates of dilated 0-1 polytopes stay tiny, so
/// machine integers suffice here; lattice algebra uses Integer.
using Point = std::vector<std::int64_t>;

/// Serializes a rational as "p/q" in lowest terms with q > 0 (integers as "p/1").
std::string to_fraction_string(const Rational& value);

/// Parses "p", "p/q" or "-p/q". Throws std::invalid_argument on malformed text
/// or a zero denominator.
Rational parse_rational(std::string_view text);

bool is_integral(const Rational& value);

/// Exact conversion; throws std::overflow_error when the value is not an
/// integer fitting in int64.
std::int64_t to_int64(const Rational& value);
std::int64_t to_int64(const Integer& value);

}  // namespace idpcheck
