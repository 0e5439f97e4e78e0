#include "idpcheck/lp.hpp"

#include <limits>
#include <stdexcept>

namespace idpcheck {

namespace {

__extension__ typedef __int128 Wide;

struct Overflow {};

struct Checked64 {
  using Value = std::int64_t;

  static Value from(std::int64_t v) { return v; }

  static Value narrow(Wide v) {
    if (v > std::numeric_limits<std::int64_t>::max() || v < std::numeric_limits<std::int64_t>::min()) throw Overflow{};
    return static_cast<Value>(v);
  }
  // (a*b - c*d) / e, exact.
  static Value pivot(Value a, Value b, Value c, Value d, Value e) {
    Wide num = static_cast<Wide>(a) * b - static_cast<Wide>(c) * d;
    return narrow(num / e);
  }
  static Value add(Value a, Value b) { return narrow(static_cast<Wide>(a) + b); }
  static Value neg(Value a) { return narrow(-static_cast<Wide>(a)); }
  // sign of a/b - c/d for b, d > 0
  static int compare_ratio(Value a, Value b, Value c, Value d) {
    Wide l = static_cast<Wide>(a) * d;
    Wide r = static_cast<Wide>(c) * b;
    return l < r ? -1 : (l > r ? 1 : 0);
  }
  static int sign(Value a) { return a < 0 ? -1 : (a > 0 ? 1 : 0); }
  static Rational ratio(Value a, Value b) {
    Rational q(Integer(static_cast<long>(a)), Integer(static_cast<long>(b)));
    q.canonicalize();
    return q;
  }
};

struct Big {
  using Value = Integer;

  static Value from(std::int64_t v) { return Integer(static_cast<long>(v)); }
  static Value pivot(const Value& a, const Value& b, const Value& c, const Value& d, const Value& e) {
    Value out = a * b - c * d;
    mpz_divexact(out.get_mpz_t(), out.get_mpz_t(), e.get_mpz_t());
    return out;
  }
  static Value add(const Value& a, const Value& b) { return a + b; }
  static Value neg(const Value& a) { return -a; }
  static int compare_ratio(const Value& a, const Value& b, const Value& c, const Value& d) {
    return cmp(a * d, c * b);
  }
  static int sign(const Value& a) { return sgn(a); }
  static Rational ratio(const Value& a, const Value& b) {
    Rational q(a, b);
    q.canonicalize();
    return q;
  }
};

// Integer-preserving tableau: true entries are cell / det for every row.
// Rows 0..m-1 are constraints, row m the phase-one and row m+1 the phase-two
// reduced costs. Columns 0..k-1 structural, k..k+m-1 artificial, last rhs.
template <class Ops>
class Tableau {
  using V = typename Ops::Value;

 public:
  Tableau(const LpProblem& p) : k_(p.variables), m_(p.rows.size()) {
    width_ = k_ + m_ + 1;
    cells_.assign((m_ + 2) * width_, Ops::from(0));
    basis_.resize(m_);
    det_ = Ops::from(1);
    for (std::size_t i = 0; i < m_; ++i) {
      const bool flip = p.rhs[i] < 0;
      for (std::size_t j = 0; j < k_; ++j) at(i, j) = Ops::from(flip ? -p.rows[i][j] : p.rows[i][j]);
      at(i, k_ + i) = Ops::from(1);
      at(i, rhs_col()) = Ops::from(flip ? -p.rhs[i] : p.rhs[i]);
      basis_[i] = k_ + i;
      for (std::size_t j = 0; j < k_; ++j) at(m_, j) = Ops::add(at(m_, j), Ops::neg(at(i, j)));
      at(m_, rhs_col()) = Ops::add(at(m_, rhs_col()), Ops::neg(at(i, rhs_col())));
    }
    for (std::size_t j = 0; j < p.objective.size(); ++j) at(m_ + 1, j) = Ops::from(p.objective[j]);
    alive_.assign(m_, true);
  }

  LpSolution solve() {
    LpSolution out;
    run(m_, k_ + m_);
    if (Ops::sign(at(m_, rhs_col())) != 0) {
      out.status = LpStatus::infeasible;
      return out;
    }
    evict_artificials();
    if (!run(m_ + 1, k_)) {
      out.status = LpStatus::unbounded;
      return out;
    }
    out.status = LpStatus::optimal;
    out.values.assign(k_, Rational(0));
    for (std::size_t i = 0; i < m_; ++i)
      if (alive_[i] && basis_[i] < k_) out.values[basis_[i]] = Ops::ratio(at(i, rhs_col()), det_);
    out.objective = -Ops::ratio(at(m_ + 1, rhs_col()), det_);
    return out;
  }

 private:
  V& at(std::size_t r, std::size_t c) { return cells_[r * width_ + c]; }
  std::size_t rhs_col() const { return width_ - 1; }

  void pivot(std::size_t pr, std::size_t pc) {
    const V p = at(pr, pc);
    for (std::size_t i = 0; i < m_ + 2; ++i) {
      if (i == pr || (i < m_ && !alive_[i])) continue;
      const V f = at(i, pc);
      if (Ops::sign(f) == 0) {
        for (std::size_t j = 0; j < width_; ++j) at(i, j) = Ops::pivot(p, at(i, j), f, f, det_);
      } else {
        for (std::size_t j = 0; j < width_; ++j) at(i, j) = Ops::pivot(p, at(i, j), f, at(pr, j), det_);
      }
    }
    det_ = p;
    basis_[pr] = pc;
  }

  // Bland's rule on cost row `cost`, entering among columns < `limit`.
  // Returns false when unbounded.
  bool run(std::size_t cost, std::size_t limit) {
    for (;;) {
      std::size_t enter = limit;
      for (std::size_t j = 0; j < limit; ++j) {
        if (Ops::sign(at(cost, j)) < 0) {
          enter = j;
          break;
        }
      }
      if (enter == limit) return true;
      std::size_t leave = m_;
      for (std::size_t i = 0; i < m_; ++i) {
        if (!alive_[i] || Ops::sign(at(i, enter)) <= 0) continue;
        if (leave == m_) {
          leave = i;
          continue;
        }
        int c = Ops::compare_ratio(at(i, rhs_col()), at(i, enter), at(leave, rhs_col()), at(leave, enter));
        if (c < 0 || (c == 0 && basis_[i] < basis_[leave])) leave = i;
      }
      if (leave == m_) return false;
      pivot(leave, enter);
    }
  }

  void evict_artificials() {
    for (std::size_t i = 0; i < m_; ++i) {
      if (basis_[i] < k_) continue;
      std::size_t col = k_;
      for (std::size_t j = 0; j < k_; ++j) {
        if (Ops::sign(at(i, j)) != 0) {
          col = j;
          break;
        }
      }
      if (col == k_) {
        alive_[i] = false;
        continue;
      }
      if (Ops::sign(at(i, col)) < 0)
        for (std::size_t j = 0; j < width_; ++j) at(i, j) = Ops::neg(at(i, j));
      pivot(i, col);
    }
  }

  std::size_t k_;
  std::size_t m_;
  std::size_t width_;
  std::vector<V> cells_;
  std::vector<std::size_t> basis_;
  std::vector<bool> alive_;
  V det_;
};

}  // namespace

LpSolution solve_lp(const LpProblem& problem) {
  if (problem.rhs.size() != problem.rows.size()) throw std::invalid_argument("lp: rhs size differs from row count");
  for (const auto& row : problem.rows)
    if (row.size() != problem.variables) throw std::invalid_argument("lp: row length differs from variable count");
  if (!problem.objective.empty() && problem.objective.size() != problem.variables)
    throw std::invalid_argument("lp: objective length differs from variable count");
  try {
    return Tableau<Checked64>(problem).solve();
  } catch (const Overflow&) {
    return Tableau<Big>(problem).solve();
  }
}

}  // namespace idpcheck
