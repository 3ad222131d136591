#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "mmpw/ring.hpp"

namespace mmpw {

struct InstanceSpec {
  int r = 1;
  int generator_count = 3;
  int valuation_count = 1;
  long coordinate_bound = 3;
  std::uint64_t seed = 1;
};

struct RandomInstance {
  RingDatum datum;
  std::vector<std::string> warnings;
};

/// Deterministic in the seed. Generators are the r+1 unit multidegrees plus
/// random ones with entries in [0, coordinate_bound]; heights are random
/// rationals in [0, coordinate_bound]. The numerical map is the identity.
/// A generator count below r+1 is clamped up with a warning.
RandomInstance random_instance(const InstanceSpec& spec);

/// (1/k) min sum a_i v_i over integer a >= 0 with sum a_i e_i = k x for
/// every k in k_list, by memoized recursion over (generator, residual).
/// nullopt entries mean no representation. Throws BudgetExceeded when more
/// than `state_budget` states are visited.
std::vector<std::optional<Rat>> o_value_oracle(const RingDatum& d, const std::string& valuation, const QVector& x,
                                               const std::vector<long>& k_list,
                                               std::uint64_t state_budget = 5'000'000);

/// Hand-built desk-scale data sets, by name. Includes "blowup-P2".
const std::map<std::string, RingDatum>& builtin_examples();

}  // namespace mmpw
