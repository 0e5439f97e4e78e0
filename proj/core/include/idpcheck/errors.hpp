#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>

namespace idpcheck {

/// Malformed user input. Line and column are 1-based; 0 means unknown.
class InputError : public std::runtime_error {
 public:
  InputError(const std::string& message, std::size_t line = 0, std::size_t column = 0);

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// Raised when an operation needs a separated hypergraph. The pair holds
/// 0-based vertex indices of a pair that no two edges split.
class NotSeparatedError : public std::runtime_error {
 public:
  explicit NotSeparatedError(std::pair<std::size_t, std::size_t> pair);

  std::pair<std::size_t, std::size_t> pair() const noexcept { return pair_; }

 private:
  std::pair<std::size_t, std::size_t> pair_;
};

/// A certificate (witness, pair, trace) that does not satisfy its own invariants.
class CertificateError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace idpcheck
