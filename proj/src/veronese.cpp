#include "mmpw/veronese.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "mmpw/errors.hpp"
#include "mmpw/linalg.hpp"

namespace mmpw {

namespace {

void collect(std::span<const long> g, std::size_t i, long left, std::vector<long>& cur,
             std::vector<std::vector<long>>& out) {
  if (i == g.size()) {
    if (left == 0) out.push_back(cur);
    return;
  }
  for (long a = 0; a * g[i] <= left; ++a) {
    cur[i] = a;
    collect(g, i + 1, left - a * g[i], cur, out);
  }
  cur[i] = 0;
}

class Splitter {
 public:
  Splitter(std::span<const long> degrees, long d, std::uint64_t budget)
      : parts_(degree_representations(degrees, d)), budget_(budget) {}

  bool splits(const std::vector<long>& a, int m) {
    if (m <= 1) return true;
    if (auto it = memo_.find(a); it != memo_.end()) return it->second;
    if (++nodes_ > budget_) throw BudgetExceeded("veronese: splitting budget of " + std::to_string(budget_) +
                                                 " nodes exceeded");
    bool ok = false;
    std::vector<long> rest(a.size());
    for (const auto& b : parts_) {
      bool fits = true;
      for (std::size_t i = 0; i < a.size() && fits; ++i) {
        rest[i] = a[i] - b[i];
        fits = rest[i] >= 0;
      }
      if (fits && splits(rest, m - 1)) {
        ok = true;
        break;
      }
    }
    memo_.emplace(a, ok);
    return ok;
  }

 private:
  std::vector<std::vector<long>> parts_;
  std::map<std::vector<long>, bool> memo_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
};

Rat frac(const Rat& q) {
  Int fl;
  mpz_fdiv_q(fl.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return q - Rat(fl);
}

// Lattice points of the half-open parallelepiped of a linearly independent
// set of integer vectors, excluding the origin.
std::optional<std::vector<QVector>> parallelepiped_points(const std::vector<QVector>& basis,
                                                          std::uint64_t budget) {
  const std::size_t s = basis.size();
  const std::size_t n = basis.front().size();
  // Pick s coordinates on which the basis is invertible.
  std::vector<std::size_t> coords;
  std::vector<QVector> rows;
  for (std::size_t j = 0; j < n && coords.size() < s; ++j) {
    QVector row(s);
    for (std::size_t b = 0; b < s; ++b) row[b] = basis[b][j];
    rows.push_back(row);
    if (rank(rows) == rows.size()) {
      coords.push_back(j);
    } else {
      rows.pop_back();
    }
  }
  const QMatrix square(rows, s);

  // The coefficient vectors lambda in [0,1)^s with integral B_I lambda form
  // a finite group generated by the fractional parts of the columns of B_I^{-1}.
  std::vector<QVector> group_gens;
  for (std::size_t c = 0; c < s; ++c) {
    const QVector col = *solve_square(square, QVector::unit(s, c));
    QVector g(s);
    for (std::size_t i = 0; i < s; ++i) g[i] = frac(col[i]);
    if (!g.is_zero()) group_gens.push_back(g);
  }
  std::set<QVector> seen{QVector(s)};
  std::vector<QVector> queue{QVector(s)};
  for (std::size_t head = 0; head < queue.size(); ++head) {
    for (const auto& g : group_gens) {
      QVector next = queue[head] + g;
      for (std::size_t i = 0; i < s; ++i) next[i] = frac(next[i]);
      if (seen.insert(next).second) {
        if (seen.size() > budget) return std::nullopt;
        queue.push_back(next);
      }
    }
  }

  std::vector<QVector> out;
  for (const auto& lambda : seen) {
    if (lambda.is_zero()) continue;
    QVector x(n);
    for (std::size_t b = 0; b < s; ++b) x += lambda[b] * basis[b];
    if (x.is_integral()) out.push_back(x);
  }
  return out;
}

void compositions(std::size_t slots, int depth, std::vector<long>& cur, std::size_t i, int used,
                  std::vector<std::vector<long>>& out) {
  if (i == slots) {
    if (used > 0) out.push_back(cur);
    return;
  }
  for (int a = 0; used + a <= depth; ++a) {
    cur[i] = a;
    compositions(slots, depth, cur, i + 1, used + a, out);
  }
  cur[i] = 0;
}

}  // namespace

std::vector<std::vector<long>> degree_representations(std::span<const long> degrees, long total) {
  std::vector<std::vector<long>> out;
  std::vector<long> cur(degrees.size());
  collect(degrees, 0, total, cur, out);
  return out;
}

bool veronese_property_holds(std::span<const long> degrees, long d, int max_m, std::uint64_t node_budget) {
  Splitter splitter(degrees, d, node_budget);
  for (int m = 2; m <= max_m; ++m) {
    for (const auto& a : degree_representations(degrees, d * m)) {
      if (!splitter.splits(a, m)) return false;
    }
  }
  return true;
}

VeroneseResult veronese_degree(std::span<const long> degrees, int max_m, const VeroneseOptions& options) {
  if (degrees.empty()) throw std::invalid_argument("veronese_degree: no degrees given");
  if (std::any_of(degrees.begin(), degrees.end(), [](long g) { return g <= 0; })) {
    throw std::invalid_argument("veronese_degree: degrees must be positive");
  }
  const long base = std::accumulate(degrees.begin(), degrees.end(), 1L, [](long a, long b) { return std::lcm(a, b); });
  for (long j = 1; j <= options.max_multiple; ++j) {
    if (veronese_property_holds(degrees, base * j, max_m, options.node_budget)) {
      return VeroneseResult{base * j, max_m, false};
    }
  }
  throw NotFound("veronese_degree: no d <= " + std::to_string(options.max_multiple) + " * " + std::to_string(base) +
                 " passes");
}

std::optional<std::vector<QVector>> monoid_generators(const PolyCone& cone, std::uint64_t lattice_budget) {
  std::set<QVector> gens(cone.rays().begin(), cone.rays().end());
  for (const auto& simplex : pulling_triangulation(cone)) {
    auto pts = parallelepiped_points(simplex, lattice_budget);
    if (!pts) return std::nullopt;
    gens.insert(pts->begin(), pts->end());
  }
  // keep the irreducible elements only
  const std::vector<QVector> all(gens.begin(), gens.end());
  std::vector<QVector> basis;
  for (std::size_t i = 0; i < all.size(); ++i) {
    bool reducible = false;
    for (std::size_t j = 0; j < all.size() && !reducible; ++j) {
      reducible = j != i && contains(cone, all[i] - all[j]);
    }
    if (!reducible) basis.push_back(all[i]);
  }
  return basis;
}

std::size_t GridReport::failures() const {
  std::size_t n = 0;
  for (const auto& e : entries)
    for (const auto& p : e.points) n += p.additive ? 0 : 1;
  return n;
}

std::size_t GridReport::tested() const {
  std::size_t n = 0;
  for (const auto& e : entries) n += e.points.size();
  return n;
}

std::size_t GridReport::skipped() const {
  return static_cast<std::size_t>(
      std::count_if(entries.begin(), entries.end(), [](const GridCellReport& e) { return e.skipped.has_value(); }));
}

GridReport grid_additivity_check(const RingDatum& d, const Fan& fan, long dscale, int depth,
                                 const GridOptions& options) {
  if (dscale < 1) throw std::invalid_argument("grid_additivity_check: dscale must be positive");
  GridReport report;
  for (std::size_t c = 0; c < fan.cells.size(); ++c) {
    const auto gens = monoid_generators(fan.cells[c], options.lattice_budget);
    std::vector<std::vector<long>> ps;
    if (gens) {
      std::vector<long> cur(gens->size());
      compositions(gens->size(), depth, cur, 0, 0, ps);
    }
    for (const auto& v : d.valuations) {
      GridCellReport entry;
      entry.cell = c;
      entry.valuation = v.name;
      if (!gens) {
        entry.skipped = "parallelepiped enumeration exceeds " + std::to_string(options.lattice_budget) + " points";
        report.entries.push_back(std::move(entry));
        continue;
      }
      entry.generators = *gens;
      std::vector<Rat> base;
      for (const auto& g : *gens) base.push_back(o_value(d, v.name, Rat(dscale) * g, options.budgets).value);
      for (const auto& p : ps) {
        GridPoint gp;
        gp.p = p;
        gp.point = QVector(d.grading_dim());
        gp.expected = 0;
        for (std::size_t j = 0; j < p.size(); ++j) {
          if (p[j] == 0) continue;
          gp.point += Rat(p[j] * dscale) * (*gens)[j];
          gp.expected += Rat(p[j]) * base[j];
        }
        gp.value = o_value(d, v.name, gp.point, options.budgets).value;
        gp.additive = gp.value == gp.expected;
        entry.points.push_back(std::move(gp));
      }
      report.entries.push_back(std::move(entry));
    }
  }
  return report;
}

}  // namespace mmpw
