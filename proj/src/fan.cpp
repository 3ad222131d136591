#include "mmpw/fan.hpp"

#include <algorithm>
#include <set>
#include <utility>

#include "mmpw/errors.hpp"

namespace mmpw {

bool cell_less(const PolyCone& a, const PolyCone& b) {
  if (a.rays() != b.rays()) return a.rays() < b.rays();
  return a.lineality() < b.lineality();
}

Fan make_fan(PolyCone support, std::vector<PolyCone> cells) {
  const std::size_t dim = support.dim();
  std::erase_if(cells, [&](const PolyCone& c) { return c.dim() != dim; });
  std::sort(cells.begin(), cells.end(), cell_less);
  cells.erase(std::unique(cells.begin(), cells.end()), cells.end());
  return Fan{std::move(cells), std::move(support)};
}

Fan trivial_fan(const PolyCone& support) { return make_fan(support, {support}); }

std::optional<std::size_t> locate_interior(const Fan& fan, const QVector& x) {
  for (std::size_t i = 0; i < fan.cells.size(); ++i)
    if (contains(fan.cells[i], x, true)) return i;
  return std::nullopt;
}

Fan common_refinement(std::span<const Fan> fans) {
  if (fans.empty()) throw std::invalid_argument("common_refinement: no fans given");
  for (const auto& f : fans) {
    if (f.support != fans.front().support) throw SupportMismatch("common_refinement: fans have different supports");
  }
  const std::size_t dim = fans.front().support.dim();
  std::vector<PolyCone> cells = fans.front().cells;
  for (std::size_t i = 1; i < fans.size(); ++i) {
    std::vector<PolyCone> next;
    for (const auto& a : cells) {
      for (const auto& b : fans[i].cells) {
        PolyCone c = intersect(a, b);
        if (c.dim() == dim) next.push_back(std::move(c));
      }
    }
    cells = std::move(next);
  }
  return make_fan(fans.front().support, std::move(cells));
}

namespace {

bool straddles(const PolyCone& c, const QVector& normal) {
  bool pos = false, neg = false;
  for (const auto& r : c.rays()) {
    const int s = sgn(dot(normal, r));
    pos = pos || s > 0;
    neg = neg || s < 0;
  }
  for (const auto& l : c.lineality()) {
    if (dot(normal, l) != 0) return true;
  }
  return pos && neg;
}

}  // namespace

Fan hyperplane_refinement(const Fan& fan) {
  std::set<QVector> hyperplanes;
  for (const auto& c : fan.cells)
    for (const auto& f : c.facets()) hyperplanes.insert(f.hyperplane_key());

  const std::size_t dim = fan.support.dim();
  std::vector<PolyCone> out;
  for (const auto& cell : fan.cells) {
    std::vector<PolyCone> pieces{cell};
    for (const auto& h : hyperplanes) {
      std::vector<PolyCone> next;
      for (auto& p : pieces) {
        if (!straddles(p, h)) {
          next.push_back(std::move(p));
          continue;
        }
        for (const QVector& side : {h, -h}) {
          PolyCone half = intersect(p, PolyCone::from_inequalities(p.ambient_dim(), std::vector<QVector>{side}));
          if (half.dim() == dim) next.push_back(std::move(half));
        }
      }
      pieces = std::move(next);
    }
    for (auto& p : pieces) out.push_back(std::move(p));
  }
  return make_fan(fan.support, std::move(out));
}

std::vector<std::vector<QVector>> pulling_triangulation(const PolyCone& cone) {
  if (!cone.is_pointed()) throw InvalidCone("pulling_triangulation: cone has a lineality space");
  if (cone.is_zero()) return {};
  if (cone.rays().size() == cone.dim()) return {cone.rays()};
  // rays() is sorted, so front() is the first ray in the global order.
  const QVector& apex = cone.rays().front();
  std::vector<std::vector<QVector>> out;
  for (const auto& f : cone.facets()) {
    if (dot(f.normal, apex) == 0) continue;
    std::vector<QVector> face_rays;
    for (const auto& r : cone.rays())
      if (dot(f.normal, r) == 0) face_rays.push_back(r);
    for (auto simplex : pulling_triangulation(PolyCone::from_rays(cone.ambient_dim(), face_rays))) {
      simplex.push_back(apex);
      std::sort(simplex.begin(), simplex.end());
      out.push_back(std::move(simplex));
    }
  }
  return out;
}

Fan simplicial_refinement(const Fan& fan) {
  std::vector<PolyCone> cells;
  for (const auto& c : fan.cells)
    for (const auto& s : pulling_triangulation(c)) cells.push_back(PolyCone::from_rays(c.ambient_dim(), s));
  return make_fan(fan.support, std::move(cells));
}

}  // namespace mmpw
