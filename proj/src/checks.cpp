#include "mmpw/checks.hpp"

#include <algorithm>

namespace mmpw {

void CheckResult::fail(std::string message) {
  ++failures;
  if (messages.size() < 8) messages.push_back(std::move(message));
}

bool CheckSuite::passed() const {
  return std::all_of(results.begin(), results.end(), [](const CheckResult& r) { return r.passed(); });
}

Rat random_weight(Rng& rng, long num_max, long den_max) {
  const long num = 1 + static_cast<long>(rng() % static_cast<std::uint64_t>(num_max));
  const long den = 1 + static_cast<long>(rng() % static_cast<std::uint64_t>(den_max));
  return make_rat(num, den);
}

QVector random_interior_point(const PolyCone& cone, Rng& rng) {
  QVector x(cone.ambient_dim());
  for (const auto& r : cone.rays()) x += random_weight(rng) * r;
  for (const auto& l : cone.lineality()) {
    const Rat w = random_weight(rng);
    x += (rng() % 2 ? w : -w) * l;
  }
  return x;
}

QVector random_support_point(const RingDatum& d, Rng& rng) {
  const auto degrees = d.degrees();
  QVector x(d.grading_dim());
  while (x.is_zero()) {
    for (const auto& e : degrees) {
      if (rng() % 3 == 0) continue;
      x += random_weight(rng, 10, 4) * e;
    }
  }
  return x;
}

CheckResult check_linearity(const RingDatum& d, const ChamberDecomposition& dec, std::size_t points_per_cell,
                            Rng& rng) {
  CheckResult res{"linearity"};
  for (std::size_t c = 0; c < dec.fan.cells.size(); ++c) {
    for (std::size_t p = 0; p < points_per_cell; ++p) {
      const QVector x = random_interior_point(dec.fan.cells[c], rng);
      for (const auto& [name, forms] : dec.functionals) {
        ++res.tested;
        const Rat got = o_value(d, name, x).value;
        const Rat want = dot(forms[c], x);
        if (got != want) {
          res.fail("cell " + std::to_string(c) + ", o_" + name + format_vector(x) + " = " + format_rat(got) +
                   " but the functional gives " + format_rat(want));
        }
      }
    }
  }
  return res;
}

CheckResult check_convexity(const RingDatum& d, std::size_t pairs, Rng& rng) {
  CheckResult res{"convexity"};
  for (std::size_t i = 0; i < pairs; ++i) {
    const QVector x = random_support_point(d, rng);
    const QVector y = random_support_point(d, rng);
    const Rat lambda = random_weight(rng);
    for (const auto& v : d.valuations) {
      ++res.tested;
      const Rat ox = o_value(d, v.name, x).value;
      const Rat oy = o_value(d, v.name, y).value;
      const Rat oxy = o_value(d, v.name, x + y).value;
      const Rat olx = o_value(d, v.name, lambda * x).value;
      if (oxy > ox + oy) {
        res.fail("subadditivity fails for o_" + v.name + " at " + format_vector(x) + " + " + format_vector(y));
      }
      if (olx != lambda * ox) {
        res.fail("homogeneity fails for o_" + v.name + " at " + format_vector(x) + ", lambda " + format_rat(lambda));
      }
    }
  }
  return res;
}

CheckResult check_partition(const RingDatum& d, const Fan& fan, std::size_t points, Rng& rng) {
  CheckResult res{"partition"};
  const PolyCone support = support_cone(d);
  if (!(fan.support == support)) res.fail("fan support differs from the support cone");
  for (std::size_t c = 0; c < fan.cells.size(); ++c) {
    ++res.tested;
    if (!is_subcone(fan.cells[c], support)) res.fail("cell " + std::to_string(c) + " leaves the support");
    if (fan.cells[c].dim() != support.dim()) res.fail("cell " + std::to_string(c) + " is not full-dimensional");
  }
  for (std::size_t i = 0; i < points; ++i) {
    ++res.tested;
    const QVector x = random_support_point(d, rng);
    std::size_t closed = 0, open = 0;
    for (const auto& cell : fan.cells) {
      closed += contains(cell, x) ? 1 : 0;
      open += contains(cell, x, true) ? 1 : 0;
    }
    if (closed == 0) res.fail(format_vector(x) + " lies in no cell");
    if (open > 1) res.fail(format_vector(x) + " lies in the interior of " + std::to_string(open) + " cells");
  }
  return res;
}

CheckSuite run_checks(const RingDatum& d, const ChamberDecomposition& dec, const CheckOptions& options) {
  CheckSuite suite;
  Rng rng(options.seed);
  suite.results.push_back(check_linearity(d, dec, options.points_per_cell, rng));
  suite.results.push_back(check_convexity(d, options.pairs, rng));
  suite.results.push_back(check_partition(d, dec.fan, options.partition_points, rng));
  suite.grid = grid_additivity_check(d, dec.fan, options.grid_dscale, options.grid_depth, options.grid);
  CheckResult grid{"grid-additivity"};
  grid.tested = suite.grid.tested();
  for (const auto& e : suite.grid.entries) {
    for (const auto& p : e.points) {
      if (!p.additive) {
        grid.fail("cell " + std::to_string(e.cell) + ", o_" + e.valuation + format_vector(p.point) + " = " +
                  format_rat(p.value) + ", additive prediction " + format_rat(p.expected));
      }
    }
  }
  suite.results.push_back(std::move(grid));
  return suite;
}

}  // namespace mmpw
