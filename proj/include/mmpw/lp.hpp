#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "mmpw/linalg.hpp"
#include "mmpw/rational.hpp"

namespace mmpw {

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpSolution {
  LpStatus status = LpStatus::Infeasible;
  Rat value;
  /// Optimal basic solution (empty unless Optimal).
  std::vector<Rat> x;
  std::size_t pivots = 0;
};

/// minimize <c, x> subject to A x = b, x >= 0.
///
/// Two-phase tableau simplex over the rationals with Bland's rule, so the
/// returned vertex is deterministic. Throws BudgetExceeded after
/// `pivot_cap` pivots.
LpSolution solve_lp(const QMatrix& a, const QVector& b, const std::vector<Rat>& c,
                    std::size_t pivot_cap = 100000);

}  // namespace mmpw
