#include "idpcheck/lattice.hpp"

#include <stdexcept>

namespace idpcheck {

namespace {

void swap_rows(IntegerMatrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m.at(a, c), m.at(b, c));
}

void swap_cols(IntegerMatrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t r = 0; r < m.rows(); ++r) std::swap(m.at(r, a), m.at(r, b));
}

// row[target] += factor * row[source]
void add_row(IntegerMatrix& m, std::size_t target, std::size_t source, const Integer& factor) {
  for (std::size_t c = 0; c < m.cols(); ++c) m.at(target, c) += factor * m.at(source, c);
}

// col[target] += factor * col[source]
void add_col(IntegerMatrix& m, std::size_t target, std::size_t source, const Integer& factor) {
  for (std::size_t r = 0; r < m.rows(); ++r) m.at(r, target) += factor * m.at(r, source);
}

}  // namespace

SmithDecomposition smith_normal_form(const IntegerMatrix& input) {
  IntegerMatrix a = input;
  IntegerMatrix u = IntegerMatrix::identity(a.rows());
  IntegerMatrix v = IntegerMatrix::identity(a.cols());
  const std::size_t limit = std::min(a.rows(), a.cols());
  std::vector<Integer> factors;

  for (std::size_t k = 0; k < limit; ++k) {
    bool finished = false;
    while (true) {
      // Smallest nonzero magnitude in the trailing block, first in row-major order.
      std::size_t pr = 0, pc = 0;
      bool found = false;
      for (std::size_t r = k; r < a.rows(); ++r)
        for (std::size_t c = k; c < a.cols(); ++c) {
          if (a.at(r, c) == 0) continue;
          if (!found || abs(a.at(r, c)) < abs(a.at(pr, pc))) {
            pr = r;
            pc = c;
            found = true;
          }
        }
      if (!found) {
        finished = true;
        break;
      }
      swap_rows(a, k, pr);
      swap_rows(u, k, pr);
      swap_cols(a, k, pc);
      swap_cols(v, k, pc);

      bool clean = true;
      for (std::size_t r = k + 1; r < a.rows(); ++r) {
        if (a.at(r, k) == 0) continue;
        Integer q;
        mpz_tdiv_q(q.get_mpz_t(), a.at(r, k).get_mpz_t(), a.at(k, k).get_mpz_t());
        add_row(a, r, k, -q);
        add_row(u, r, k, -q);
        if (a.at(r, k) != 0) clean = false;
      }
      for (std::size_t c = k + 1; c < a.cols(); ++c) {
        if (a.at(k, c) == 0) continue;
        Integer q;
        mpz_tdiv_q(q.get_mpz_t(), a.at(k, c).get_mpz_t(), a.at(k, k).get_mpz_t());
        add_col(a, c, k, -q);
        add_col(v, c, k, -q);
        if (a.at(k, c) != 0) clean = false;
      }
      if (!clean) continue;

      // The pivot must divide the whole trailing block.
      bool divides_all = true;
      for (std::size_t r = k + 1; r < a.rows() && divides_all; ++r)
        for (std::size_t c = k + 1; c < a.cols(); ++c) {
          if (!mpz_divisible_p(a.at(r, c).get_mpz_t(), a.at(k, k).get_mpz_t())) {
            add_row(a, k, r, 1);
            add_row(u, k, r, 1);
            divides_all = false;
            break;
          }
        }
      if (divides_all) break;
    }
    if (finished) break;
    if (a.at(k, k) < 0) {
      for (std::size_t c = 0; c < a.cols(); ++c) a.at(k, c) = -a.at(k, c);
      for (std::size_t c = 0; c < u.cols(); ++c) u.at(k, c) = -u.at(k, c);
    }
    factors.push_back(a.at(k, k));
  }
  return {std::move(a), std::move(u), std::move(v), std::move(factors)};
}

Lattice::Lattice(const IntegerMatrix& generators_as_columns) : ambient_(generators_as_columns.rows()) {
  // Rows of the transpose are the generators; reduce them to echelon form.
  std::vector<std::vector<Integer>> rows;
  for (std::size_t c = 0; c < generators_as_columns.cols(); ++c) rows.push_back(generators_as_columns.column(c));

  std::size_t next = 0;
  for (std::size_t col = 0; col < ambient_ && next < rows.size(); ++col) {
    // Euclid on column `col` among rows next.. until a single nonzero remains.
    while (true) {
      std::size_t best = rows.size();
      for (std::size_t r = next; r < rows.size(); ++r) {
        if (rows[r][col] == 0) continue;
        if (best == rows.size() || abs(rows[r][col]) < abs(rows[best][col])) best = r;
      }
      if (best == rows.size()) break;
      std::swap(rows[next], rows[best]);
      bool others = false;
      for (std::size_t r = next + 1; r < rows.size(); ++r) {
        if (rows[r][col] == 0) continue;
        Integer q;
        mpz_tdiv_q(q.get_mpz_t(), rows[r][col].get_mpz_t(), rows[next][col].get_mpz_t());
        for (std::size_t k = col; k < ambient_; ++k) rows[r][k] -= q * rows[next][k];
        if (rows[r][col] != 0) others = true;
      }
      if (!others) {
        if (rows[next][col] < 0)
          for (auto& x : rows[next]) x = -x;
        // Reduce entries above the pivot into [0, pivot).
        for (std::size_t r = 0; r < next; ++r) {
          Integer q;
          mpz_fdiv_q(q.get_mpz_t(), rows[r][col].get_mpz_t(), rows[next][col].get_mpz_t());
          if (q != 0)
            for (std::size_t k = col; k < ambient_; ++k) rows[r][k] -= q * rows[next][k];
        }
        pivots_.push_back(col);
        ++next;
        break;
      }
    }
  }
  rows.resize(next);
  basis_ = std::move(rows);
}

bool Lattice::contains(const std::vector<Integer>& vector) const {
  if (vector.size() != ambient_) throw std::invalid_argument("lattice membership dimension mismatch");
  std::vector<Integer> residual = vector;
  std::size_t col = 0;
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    for (; col < pivots_[i]; ++col)
      if (residual[col] != 0) return false;
    const Integer& pivot = basis_[i][col];
    if (!mpz_divisible_p(residual[col].get_mpz_t(), pivot.get_mpz_t())) return false;
    Integer q = residual[col] / pivot;
    for (std::size_t k = col; k < ambient_; ++k) residual[k] -= q * basis_[i][k];
    ++col;
  }
  for (; col < ambient_; ++col)
    if (residual[col] != 0) return false;
  return true;
}

IntegerMatrix homogenized_vertex_matrix(const ZeroOnePolytope& polytope) {
  const std::size_t n = polytope.ambient_dim();
  IntegerMatrix m(n + 1, polytope.vertex_count());
  for (std::size_t i = 0; i < polytope.vertex_count(); ++i) {
    for (std::size_t j = 0; j < n; ++j) m.at(j, i) = static_cast<long>(polytope.vertex(i)[j]);
    m.at(n, i) = 1;
  }
  return m;
}

std::optional<TorsionCertificate> torsion_check(const ZeroOnePolytope& polytope) {
  IntegerMatrix a = homogenized_vertex_matrix(polytope);
  SmithDecomposition snf = smith_normal_form(a);
  for (std::size_t k = 0; k < snf.invariant_factors.size(); ++k) {
    const Integer& m = snf.invariant_factors[k];
    if (m <= 1) continue;
    // a * (right e_k) = m * left^{-1} e_k, and left^{-1} e_k is outside the lattice.
    std::vector<Integer> combination = snf.right.column(k);
    for (auto& x : combination) mpz_fdiv_r(x.get_mpz_t(), x.get_mpz_t(), m.get_mpz_t());
    std::vector<Integer> image = a.apply(combination);
    for (auto& x : image) {
      if (!mpz_divisible_p(x.get_mpz_t(), m.get_mpz_t())) {
        throw std::logic_error("torsion extraction produced a non-divisible image");
      }
      x /= m;
    }
    return TorsionCertificate{std::move(image), m, std::move(combination)};
  }
  return std::nullopt;
}

std::optional<std::string> torsion_certificate_violation(const ZeroOnePolytope& polytope,
                                                         const TorsionCertificate& certificate) {
  IntegerMatrix a = homogenized_vertex_matrix(polytope);
  if (certificate.multiplier < 2) return "multiplier must be at least 2";
  if (certificate.vector.size() != a.rows()) return "certificate vector has the wrong length";
  Lattice lattice(a);
  std::vector<Integer> scaled = certificate.vector;
  for (auto& x : scaled) x *= certificate.multiplier;
  if (!lattice.contains(scaled)) return "multiplier * vector is not in the vertex lattice";
  if (!certificate.combination.empty()) {
    if (certificate.combination.size() != a.cols()) return "combination has the wrong length";
    if (a.apply(certificate.combination) != scaled) return "combination does not reproduce multiplier * vector";
  }
  if (lattice.contains(certificate.vector)) return "vector already lies in the vertex lattice";
  return std::nullopt;
}

}  // namespace idpcheck
