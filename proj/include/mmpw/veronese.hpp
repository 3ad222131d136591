#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "mmpw/fan.hpp"
#include "mmpw/ring.hpp"
#include "mmpw/valuations.hpp"

namespace mmpw {

/// Degree-semigroup shadow of R_{dm} = R_d^m, verified for m <= verified_up_to.
struct VeroneseResult {
  long d = 0;
  int verified_up_to = 0;
  /// Always false: the result is a bounded verification, not a proof.
  bool certified = false;
};

struct VeroneseOptions {
  /// Candidates d = j * lcm(degrees) for j = 1..max_multiple.
  long max_multiple = 64;
  std::uint64_t node_budget = 20'000'000;
};

/// All a in N^n with sum a_i g_i = total, in lexicographic order.
std::vector<std::vector<long>> degree_representations(std::span<const long> degrees, long total);

/// True when every representation of d*m splits into m representations of d,
/// for every 1 <= m <= max_m.
bool veronese_property_holds(std::span<const long> degrees, long d, int max_m, std::uint64_t node_budget);

/// Smallest multiple d of lcm(degrees) passing veronese_property_holds.
/// Throws NotFound when no candidate passes and BudgetExceeded when the
/// splitting search runs out of nodes.
VeroneseResult veronese_degree(std::span<const long> degrees, int max_m, const VeroneseOptions& options = {});

/// Hilbert basis of the monoid cone ∩ Z^n, found by reducing the rays plus
/// the lattice points of the half-open fundamental parallelepipeds of a
/// pulling triangulation. nullopt when some parallelepiped holds more than `lattice_budget` points.
std::optional<std::vector<QVector>> monoid_generators(const PolyCone& cone, std::uint64_t lattice_budget);

struct GridPoint {
  std::vector<long> p;
  QVector point;
  Rat value;
  Rat expected;
  bool additive = true;
};

struct GridCellReport {
  std::size_t cell = 0;
  std::string valuation;
  std::vector<QVector> generators;
  std::vector<GridPoint> points;
  /// Set when the cell was skipped (enumeration infeasible).
  std::optional<std::string> skipped;
};

struct GridReport {
  std::vector<GridCellReport> entries;

  std::size_t failures() const;
  std::size_t tested() const;
  std::size_t skipped() const;
  bool passed() const { return failures() == 0; }
};

struct GridOptions {
  std::uint64_t lattice_budget = 4096;
  Budgets budgets;
};

/// Checks o(dscale * sum p_j g_j) == sum p_j o(dscale * g_j) on every cell,
/// for every valuation and every p in N^s with 1 <= |p| <= depth, where g_j
/// are the cell's monoid generators.
GridReport grid_additivity_check(const RingDatum& d, const Fan& fan, long dscale, int depth,
                                 const GridOptions& options = {});

}  // namespace mmpw
