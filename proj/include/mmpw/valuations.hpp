#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "mmpw/fan.hpp"
#include "mmpw/ring.hpp"

namespace mmpw {

/// Asymptotic order of vanishing at a point of the support cone.
struct OValue {
  Rat value;
  /// Optimal basic coefficients a with sum a_i e_i = x.
  std::vector<Rat> witness;
};

/// A valuation's domains of linearity. functionals[i] is the linear form that
/// agrees with o_value on fan.cells[i].
struct LinearityFan {
  Fan fan;
  std::vector<QVector> functionals;
  ValuationId valuation;
};

/// Chamber fan plus, per valuation, the linear form of o on each cell.
struct ChamberDecomposition {
  Fan fan;
  std::map<std::string, std::vector<QVector>> functionals;
};

struct Budgets {
  std::size_t lp_pivots = 100000;
  std::uint64_t enumeration_nodes = 50'000'000;
};

/// min sum a_i v_i subject to sum a_i e_i = x, a >= 0, solved exactly.
/// Throws OutsideSupport when x is not in the support cone.
OValue o_value(const RingDatum& d, const std::string& valuation, const QVector& x, const Budgets& budgets = {});

/// Regular subdivision of the support cone induced by lifting each e_i to
/// height v_i; its cells are the projected lower facets of the lifted cone.
LinearityFan linearity_fan(const RingDatum& d, const std::string& valuation);

/// Common refinement of all linearity fans, then (when `refine`) the
/// hyperplane refinement. Every o is linear on every cell.
ChamberDecomposition chamber_decomposition(const RingDatum& d, bool refine = true);
inline Fan chamber_fan(const RingDatum& d, bool refine = true) { return chamber_decomposition(d, refine).fan; }

/// (1/k) min sum a_i v_i over integer a >= 0 with sum a_i e_i = k x, by
/// exhaustive branch-and-bound enumeration. nullopt when k x has no integer
/// representation. Requires k x integral; throws BudgetExceeded.
std::optional<Rat> ip_value(const RingDatum& d, const std::string& valuation, const QVector& x, long k,
                            const Budgets& budgets = {});

struct Stabilization {
  /// Smallest k <= k_max with ip_value(k) == o_value, if any.
  std::optional<long> k;
  OValue lp;
  /// lcm of the witness denominators; equality is guaranteed at this k.
  Int witness_denominator_lcm;
};

Stabilization stabilization_multiple(const RingDatum& d, const std::string& valuation, const QVector& x, long k_max,
                                     const Budgets& budgets = {});

}  // namespace mmpw
