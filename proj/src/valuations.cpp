#include "mmpw/valuations.hpp"

#include <algorithm>
#include <limits>
#include <utility>

#include "mmpw/errors.hpp"
#include "mmpw/lp.hpp"

namespace mmpw {

OValue o_value(const RingDatum& d, const std::string& valuation, const QVector& x, const Budgets& budgets) {
  if (x.size() != d.grading_dim()) throw DimensionError("o_value: point has wrong dimension");
  const auto degrees = d.degrees();
  const QMatrix a = QMatrix::from_columns(degrees, d.grading_dim());
  const LpSolution sol = solve_lp(a, x, d.heights(valuation), budgets.lp_pivots);
  if (sol.status == LpStatus::Infeasible) {
    throw OutsideSupport("o_value: " + format_vector(x) + " is outside the support cone");
  }
  if (sol.status == LpStatus::Unbounded) throw InconsistentInput("o_value: LP unbounded (negative valuation data)");
  return OValue{sol.value, sol.x};
}

LinearityFan linearity_fan(const RingDatum& d, const std::string& valuation) {
  const std::size_t n = d.grading_dim();
  const PolyCone support = support_cone(d);
  const auto heights = d.heights(valuation);
  const auto degrees = d.degrees();

  std::vector<QVector> lifted;
  for (std::size_t i = 0; i < degrees.size(); ++i) {
    QVector v(n + 1);
    for (std::size_t j = 0; j < n; ++j) v[j] = degrees[i][j];
    v[n] = heights[i];
    lifted.push_back(std::move(v));
  }
  lifted.push_back(QVector::unit(n + 1, n));
  const PolyCone upper = PolyCone::from_rays(n + 1, lifted);

  std::vector<std::pair<PolyCone, QVector>> cells;
  for (const auto& f : upper.facets()) {
    const Rat& up = f.normal[n];
    if (up <= 0) continue;  // vertical facet: lies over the boundary of the support
    std::vector<QVector> base;
    for (const auto& r : upper.rays()) {
      if (dot(f.normal, r) != 0) continue;
      QVector p(n);
      for (std::size_t j = 0; j < n; ++j) p[j] = r[j];
      base.push_back(std::move(p));
    }
    // On the facet, <f', x> + up * h = 0, so h = <-f'/up, x>.
    QVector g(n);
    for (std::size_t j = 0; j < n; ++j) g[j] = -f.normal[j] / up;
    cells.emplace_back(PolyCone::from_rays(n, base), project_out(g, support.equations()));
  }
  std::sort(cells.begin(), cells.end(), [](const auto& a, const auto& b) { return cell_less(a.first, b.first); });

  LinearityFan out;
  out.valuation = ValuationId{valuation};
  std::vector<PolyCone> cones;
  for (auto& [c, g] : cells) {
    cones.push_back(c);
    out.functionals.push_back(g);
  }
  out.fan = make_fan(support, std::move(cones));
  if (out.fan.cells.size() != out.functionals.size()) {
    throw std::logic_error("linearity_fan: lower facets did not project to distinct full cells");
  }
  return out;
}

ChamberDecomposition chamber_decomposition(const RingDatum& d, bool refine) {
  const PolyCone support = support_cone(d);
  std::vector<LinearityFan> per_valuation;
  std::vector<Fan> fans;
  for (const auto& v : d.valuations) {
    per_valuation.push_back(linearity_fan(d, v.name));
    fans.push_back(per_valuation.back().fan);
  }
  ChamberDecomposition out;
  out.fan = fans.empty() ? trivial_fan(support) : common_refinement(fans);
  if (refine) out.fan = hyperplane_refinement(out.fan);

  for (const auto& lf : per_valuation) {
    auto& forms = out.functionals[lf.valuation.name];
    for (const auto& cell : out.fan.cells) {
      const auto at = locate_interior(lf.fan, relative_interior_point(cell));
      if (!at) throw std::logic_error("chamber cell not inside any linearity cell");
      forms.push_back(lf.functionals[*at]);
    }
  }
  return out;
}

namespace {

long to_long(const Int& v, const char* what) {
  if (!v.fits_slong_p()) throw BudgetExceeded(std::string("ip_value: ") + what + " too large for enumeration");
  return v.get_si();
}

// Exhaustive branch-and-bound over integer coefficient vectors.
class IntegerRepresentations {
 public:
  IntegerRepresentations(const std::vector<QVector>& degrees, const std::vector<Rat>& heights, std::uint64_t budget)
      : budget_(budget) {
    dim_ = degrees.front().size();
    Int scale = 1;
    for (const auto& h : heights) scale = lcm(scale, h.get_den());
    scale_ = scale;
    for (std::size_t i = 0; i < degrees.size(); ++i) {
      std::vector<long> e(dim_);
      for (std::size_t j = 0; j < dim_; ++j) e[j] = to_long(degrees[i][j].get_num(), "multidegree");
      gens_.push_back(std::move(e));
      costs_.push_back(to_long(heights[i].get_num() * (scale / heights[i].get_den()), "height"));
    }

    // The last generators, a maximal independent subset, are solved for
    // directly at the leaves; only the others are enumerated.
    std::vector<QVector> chosen;
    for (std::size_t i = 0; i < degrees.size(); ++i) {
      chosen.push_back(degrees[i]);
      if (rank(chosen) == chosen.size()) {
        basis_.push_back(i);
      } else {
        chosen.pop_back();
        free_.push_back(i);
      }
    }
    // Rows on which the basis is invertible.
    std::vector<QVector> rows;
    for (std::size_t j = 0; j < dim_ && rows_.size() < basis_.size(); ++j) {
      QVector row(basis_.size());
      for (std::size_t b = 0; b < basis_.size(); ++b) row[b] = degrees[basis_[b]][j];
      rows.push_back(row);
      if (rank(rows) == rows.size()) {
        rows_.push_back(j);
      } else {
        rows.pop_back();
      }
    }
    const std::size_t s = basis_.size();
    inverse_ = QMatrix(s, s);
    for (std::size_t c = 0; c < s; ++c) {
      QMatrix sq(s, s);
      for (std::size_t i = 0; i < s; ++i)
        for (std::size_t b = 0; b < s; ++b) sq(i, b) = degrees[basis_[b]][rows_[i]];
      auto col = solve_square(sq, QVector::unit(s, c));
      for (std::size_t i = 0; i < s; ++i) inverse_(i, c) = (*col)[i];
    }
  }

  /// Minimal scaled cost over representations of target, or nullopt.
  std::optional<long> minimize(std::vector<long> target) {
    best_.reset();
    nodes_ = 0;
    search(0, target, 0);
    return best_;
  }

  const Int& scale() const { return scale_; }

 private:
  void search(std::size_t level, std::vector<long>& residual, long partial) {
    if (++nodes_ > budget_) throw BudgetExceeded("ip_value: enumeration budget of " + std::to_string(budget_) +
                                                 " nodes exceeded");
    if (level == free_.size()) {
      leaf(residual, partial);
      return;
    }
    const auto& e = gens_[free_[level]];
    const long cost = costs_[free_[level]];
    long most = std::numeric_limits<long>::max();
    for (std::size_t j = 0; j < dim_; ++j)
      if (e[j] > 0) most = std::min(most, residual[j] / e[j]);
    for (long a = 0; a <= most; ++a) {
      const long total = partial + cost * a;
      if (best_ && total >= *best_) break;
      for (std::size_t j = 0; j < dim_; ++j) residual[j] -= a * e[j];
      search(level + 1, residual, total);
      for (std::size_t j = 0; j < dim_; ++j) residual[j] += a * e[j];
    }
  }

  void leaf(const std::vector<long>& residual, long partial) {
    const std::size_t s = basis_.size();
    std::vector<long> coeff(s);
    for (std::size_t i = 0; i < s; ++i) {
      Rat v = 0;
      for (std::size_t c = 0; c < s; ++c) v += inverse_(i, c) * residual[rows_[c]];
      if (v < 0 || v.get_den() != 1) return;
      coeff[i] = v.get_num().get_si();
    }
    for (std::size_t j = 0; j < dim_; ++j) {
      long sum = 0;
      for (std::size_t i = 0; i < s; ++i) sum += coeff[i] * gens_[basis_[i]][j];
      if (sum != residual[j]) return;
    }
    long total = partial;
    for (std::size_t i = 0; i < s; ++i) total += coeff[i] * costs_[basis_[i]];
    if (!best_ || total < *best_) best_ = total;
  }

  std::size_t dim_ = 0;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  Int scale_;
  std::vector<std::vector<long>> gens_;
  std::vector<long> costs_;
  std::vector<std::size_t> basis_, free_, rows_;
  QMatrix inverse_;
  std::optional<long> best_;
};

}  // namespace

std::optional<Rat> ip_value(const RingDatum& d, const std::string& valuation, const QVector& x, long k,
                            const Budgets& budgets) {
  if (k < 1) throw std::invalid_argument("ip_value: k must be positive");
  if (x.size() != d.grading_dim()) throw DimensionError("ip_value: point has wrong dimension");
  const QVector target = Rat(k) * x;
  if (!target.is_integral()) throw std::invalid_argument("ip_value: k*x is not integral");
  std::vector<long> t(target.size());
  for (std::size_t j = 0; j < t.size(); ++j) {
    t[j] = to_long(target[j].get_num(), "target");
    if (t[j] < 0) return std::nullopt;  // multidegrees are nonnegative
  }
  IntegerRepresentations reps(d.degrees(), d.heights(valuation), budgets.enumeration_nodes);
  const auto best = reps.minimize(t);
  if (!best) return std::nullopt;
  return Rat(Int(*best)) / (Rat(reps.scale()) * k);
}

Stabilization stabilization_multiple(const RingDatum& d, const std::string& valuation, const QVector& x, long k_max,
                                     const Budgets& budgets) {
  Stabilization out;
  out.lp = o_value(d, valuation, x, budgets);
  out.witness_denominator_lcm = denominator_lcm(QVector(out.lp.witness));
  for (long k = 1; k <= k_max; ++k) {
    const auto ip = ip_value(d, valuation, x, k, budgets);
    if (ip && *ip < out.lp.value) throw std::logic_error("integer optimum below the LP optimum");
    if (ip && *ip == out.lp.value) {
      out.k = k;
      break;
    }
  }
  return out;
}

}  // namespace mmpw
