#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "mmpw/fan.hpp"
#include "mmpw/ring.hpp"
#include "mmpw/valuations.hpp"
#include "mmpw/veronese.hpp"

namespace mmpw {

struct CheckResult {
  std::string name;
  std::size_t tested = 0;
  std::size_t failures = 0;
  std::vector<std::string> messages;  // first few failures

  bool passed() const { return failures == 0; }
  void fail(std::string message);
};

struct CheckOptions {
  std::uint64_t seed = 1;
  std::size_t points_per_cell = 10;
  std::size_t pairs = 200;
  std::size_t partition_points = 100;
  int grid_depth = 3;
  long grid_dscale = 1;
  GridOptions grid;
};

struct CheckSuite {
  std::vector<CheckResult> results;
  GridReport grid;

  bool passed() const;
};

using Rng = std::mt19937_64;

/// Positive rational in [1/den_max, num_max].
Rat random_weight(Rng& rng, long num_max = 20, long den_max = 5);
/// Random positive combination of all rays plus a random lineality part.
QVector random_interior_point(const PolyCone& cone, Rng& rng);
/// Random nonnegative combination of the generator multidegrees; never zero.
QVector random_support_point(const RingDatum& d, Rng& rng);

/// o agrees with the stored functional at random interior points of every cell.
CheckResult check_linearity(const RingDatum& d, const ChamberDecomposition& dec, std::size_t points_per_cell,
                            Rng& rng);
/// o(x + y) <= o(x) + o(y) and o(lambda x) = lambda o(x) on random pairs.
CheckResult check_convexity(const RingDatum& d, std::size_t pairs, Rng& rng);
/// Cells lie in the support, random support points lie in some cell and in
/// the interior of at most one.
CheckResult check_partition(const RingDatum& d, const Fan& fan, std::size_t points, Rng& rng);

CheckSuite run_checks(const RingDatum& d, const ChamberDecomposition& dec, const CheckOptions& options);

}  // namespace mmpw
