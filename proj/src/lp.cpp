#include "mmpw/lp.hpp"

#include <optional>

#include "mmpw/errors.hpp"

namespace mmpw {

namespace {

class Tableau {
 public:
  Tableau(const QMatrix& a, const QVector& b, std::size_t pivot_cap)
      : m_(a.rows()), n_(a.cols()), cap_(pivot_cap) {
    // Columns: n structural, m artificial, then the right-hand side.
    rows_.assign(m_, std::vector<Rat>(n_ + m_ + 1));
    basis_.resize(m_);
    for (std::size_t i = 0; i < m_; ++i) {
      const bool flip = b[i] < 0;
      for (std::size_t j = 0; j < n_; ++j) rows_[i][j] = flip ? Rat(-a(i, j)) : a(i, j);
      rows_[i][n_ + i] = 1;
      rows_[i][rhs()] = flip ? Rat(-b[i]) : b[i];
      basis_[i] = n_ + i;
    }
  }

  // Runs simplex on cost (indexed by column) over columns < allowed.
  // Returns false when unbounded.
  bool optimize(const std::vector<Rat>& cost, std::size_t allowed) {
    for (;;) {
      std::optional<std::size_t> entering;
      for (std::size_t j = 0; j < allowed && !entering; ++j) {
        if (is_basic(j)) continue;
        Rat reduced = cost[j];
        for (std::size_t i = 0; i < rows_.size(); ++i) reduced -= cost[basis_[i]] * rows_[i][j];
        if (reduced < 0) entering = j;
      }
      if (!entering) return true;
      const std::size_t col = *entering;

      std::optional<std::size_t> leave;
      Rat best;
      for (std::size_t i = 0; i < rows_.size(); ++i) {
        if (rows_[i][col] <= 0) continue;
        Rat ratio = rows_[i][rhs()] / rows_[i][col];
        if (!leave || ratio < best || (ratio == best && basis_[i] < basis_[*leave])) {
          leave = i;
          best = ratio;
        }
      }
      if (!leave) return false;
      pivot(*leave, col);
    }
  }

  void pivot(std::size_t row, std::size_t col) {
    if (++pivots_ > cap_) throw BudgetExceeded("LP pivot cap of " + std::to_string(cap_) + " exceeded");
    auto& pr = rows_[row];
    const Rat inv = 1 / pr[col];
    for (auto& x : pr) x *= inv;
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      if (i == row || rows_[i][col] == 0) continue;
      const Rat f = rows_[i][col];
      for (std::size_t j = 0; j < pr.size(); ++j) rows_[i][j] -= f * pr[j];
    }
    basis_[row] = col;
  }

  // After phase 1: replace artificial basics by structural columns, dropping
  // rows that turn out to be linearly dependent.
  void expel_artificials() {
    for (std::size_t i = 0; i < rows_.size();) {
      if (basis_[i] < n_) {
        ++i;
        continue;
      }
      std::optional<std::size_t> col;
      for (std::size_t j = 0; j < n_ && !col; ++j)
        if (!is_basic(j) && rows_[i][j] != 0) col = j;
      if (col) {
        pivot(i, *col);
        ++i;
      } else {
        rows_.erase(rows_.begin() + static_cast<long>(i));
        basis_.erase(basis_.begin() + static_cast<long>(i));
      }
    }
  }

  Rat objective(const std::vector<Rat>& cost) const {
    Rat v = 0;
    for (std::size_t i = 0; i < rows_.size(); ++i) v += cost[basis_[i]] * rows_[i][rhs()];
    return v;
  }

  std::vector<Rat> solution() const {
    std::vector<Rat> x(n_);
    for (std::size_t i = 0; i < rows_.size(); ++i)
      if (basis_[i] < n_) x[basis_[i]] = rows_[i][rhs()];
    return x;
  }

  std::size_t pivots() const { return pivots_; }

 private:
  std::size_t rhs() const { return n_ + m_; }
  bool is_basic(std::size_t j) const {
    for (auto b : basis_)
      if (b == j) return true;
    return false;
  }

  std::size_t m_, n_, cap_;
  std::size_t pivots_ = 0;
  std::vector<std::vector<Rat>> rows_;
  std::vector<std::size_t> basis_;
};

}  // namespace

LpSolution solve_lp(const QMatrix& a, const QVector& b, const std::vector<Rat>& c, std::size_t pivot_cap) {
  if (b.size() != a.rows() || c.size() != a.cols()) throw DimensionError("solve_lp: inconsistent dimensions");
  const std::size_t m = a.rows(), n = a.cols();
  Tableau t(a, b, pivot_cap);

  std::vector<Rat> phase1(n + m);
  for (std::size_t i = 0; i < m; ++i) phase1[n + i] = 1;
  t.optimize(phase1, n + m);
  LpSolution out;
  if (t.objective(phase1) != 0) {
    out.status = LpStatus::Infeasible;
    out.pivots = t.pivots();
    return out;
  }
  t.expel_artificials();

  std::vector<Rat> cost(n + m);
  for (std::size_t j = 0; j < n; ++j) cost[j] = c[j];
  const bool bounded = t.optimize(cost, n);
  out.pivots = t.pivots();
  if (!bounded) {
    out.status = LpStatus::Unbounded;
    return out;
  }
  out.status = LpStatus::Optimal;
  out.value = t.objective(cost);
  out.x = t.solution();
  return out;
}

}  // namespace mmpw
