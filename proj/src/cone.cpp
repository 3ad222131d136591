#include "mmpw/cone.hpp"

#include <algorithm>
#include <utility>

#include "mmpw/errors.hpp"
#include "mmpw/linalg.hpp"

namespace mmpw {

HalfSpace HalfSpace::from_normal(const QVector& normal) {
  if (normal.is_zero()) throw InvalidCone("half-space normal is zero");
  return HalfSpace{primitive(normal)};
}

namespace {

void check_dims(std::span<const QVector> vs, std::size_t dim) {
  for (const auto& v : vs) {
    if (v.size() != dim) throw DimensionError("vector of dimension " + std::to_string(v.size()) +
                                              " in ambient dimension " + std::to_string(dim));
  }
}

void sort_unique(std::vector<QVector>& vs) {
  std::sort(vs.begin(), vs.end());
  vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
}

}  // namespace

ConeGenerators double_description(std::size_t dim, std::span<const QVector> inequalities) {
  check_dims(inequalities, dim);

  std::vector<QVector> lineality;
  for (std::size_t i = 0; i < dim; ++i) lineality.push_back(QVector::unit(dim, i));
  std::vector<QVector> rays;
  std::vector<QVector> done;

  for (const auto& a : inequalities) {
    if (a.is_zero()) continue;

    // Lineality direction not orthogonal to a: it becomes a ray and the rest
    // of the cone is sheared into the hyperplane <a, x> = 0.
    auto pivot = std::find_if(lineality.begin(), lineality.end(), [&](const QVector& l) { return dot(a, l) != 0; });
    if (pivot != lineality.end()) {
      QVector l0 = *pivot;
      lineality.erase(pivot);
      Rat al0 = dot(a, l0);
      if (al0 < 0) {
        l0 = -l0;
        al0 = -al0;
      }
      auto shear = [&](QVector& v) {
        const Rat s = dot(a, v) / al0;
        if (s != 0) v = primitive(v - s * l0);
      };
      for (auto& l : lineality) shear(l);
      for (auto& r : rays) shear(r);
      rays.push_back(primitive(l0));
      done.push_back(a);
      continue;
    }

    std::vector<Rat> value(rays.size());
    std::vector<std::size_t> pos, neg;
    std::vector<QVector> next;
    for (std::size_t i = 0; i < rays.size(); ++i) {
      value[i] = dot(a, rays[i]);
      if (value[i] < 0) {
        neg.push_back(i);
      } else {
        if (value[i] > 0) pos.push_back(i);
        next.push_back(rays[i]);
      }
    }
    if (neg.empty()) {
      done.push_back(a);
      continue;
    }

    // Tight constraint sets of the current rays, for the adjacency test.
    std::vector<std::vector<std::size_t>> tight(rays.size());
    for (std::size_t i = 0; i < rays.size(); ++i)
      for (std::size_t j = 0; j < done.size(); ++j)
        if (dot(done[j], rays[i]) == 0) tight[i].push_back(j);

    const long target = static_cast<long>(dim) - static_cast<long>(lineality.size()) - 2;
    for (auto p : pos) {
      for (auto q : neg) {
        std::vector<std::size_t> common;
        std::set_intersection(tight[p].begin(), tight[p].end(), tight[q].begin(), tight[q].end(),
                              std::back_inserter(common));
        if (static_cast<long>(common.size()) < target) continue;
        std::vector<QVector> rows;
        rows.reserve(common.size());
        for (auto j : common) rows.push_back(done[j]);
        if (static_cast<long>(rank(rows)) != target) continue;
        next.push_back(primitive(value[p] * rays[q] - value[q] * rays[p]));
      }
    }
    rays = std::move(next);
    done.push_back(a);
  }

  ConeGenerators out;
  out.lineality = canonical_basis(lineality, dim);
  for (const auto& r : rays) {
    QVector p = primitive(project_out(r, out.lineality));
    if (!p.is_zero()) out.rays.push_back(std::move(p));
  }
  sort_unique(out.rays);
  return out;
}

PolyCone PolyCone::build(std::size_t ambient_dim, ConeGenerators gens) {
  // Dual cone: facet normals are its rays, equations its lineality.
  std::vector<QVector> dual_ineqs = gens.rays;
  for (const auto& l : gens.lineality) {
    dual_ineqs.push_back(l);
    dual_ineqs.push_back(-l);
  }
  ConeGenerators dual = double_description(ambient_dim, dual_ineqs);

  PolyCone c;
  c.ambient_dim_ = ambient_dim;
  c.rays_ = std::move(gens.rays);
  c.lineality_ = std::move(gens.lineality);
  c.equations_ = std::move(dual.lineality);
  for (auto& f : dual.rays) c.facets_.push_back(HalfSpace{std::move(f)});
  return c;
}

PolyCone PolyCone::from_rays(std::size_t ambient_dim, std::span<const QVector> rays,
                             std::span<const QVector> lineality) {
  check_dims(rays, ambient_dim);
  check_dims(lineality, ambient_dim);
  // V -> H, then H -> V again so that non-extremal input rays are dropped.
  std::vector<QVector> dual_ineqs(rays.begin(), rays.end());
  for (const auto& l : lineality) {
    dual_ineqs.push_back(l);
    dual_ineqs.push_back(-l);
  }
  ConeGenerators dual = double_description(ambient_dim, dual_ineqs);
  std::vector<QVector> ineqs = dual.rays;
  for (const auto& e : dual.lineality) {
    ineqs.push_back(e);
    ineqs.push_back(-e);
  }
  return build(ambient_dim, double_description(ambient_dim, ineqs));
}

PolyCone PolyCone::from_inequalities(std::size_t ambient_dim, std::span<const QVector> inequalities,
                                     std::span<const QVector> equations) {
  check_dims(inequalities, ambient_dim);
  check_dims(equations, ambient_dim);
  std::vector<QVector> ineqs(inequalities.begin(), inequalities.end());
  for (const auto& e : equations) {
    ineqs.push_back(e);
    ineqs.push_back(-e);
  }
  return build(ambient_dim, double_description(ambient_dim, ineqs));
}

PolyCone PolyCone::whole_space(std::size_t ambient_dim) { return from_inequalities(ambient_dim, {}); }

PolyCone PolyCone::zero(std::size_t ambient_dim) {
  std::vector<QVector> eqs;
  for (std::size_t i = 0; i < ambient_dim; ++i) eqs.push_back(QVector::unit(ambient_dim, i));
  return from_inequalities(ambient_dim, {}, eqs);
}

std::vector<QVector> PolyCone::inequality_system() const {
  std::vector<QVector> out;
  for (const auto& f : facets_) out.push_back(f.normal);
  for (const auto& e : equations_) {
    out.push_back(e);
    out.push_back(-e);
  }
  return out;
}

PolyCone cone_from_rays(std::span<const QVector> rays) {
  if (rays.empty()) throw InvalidCone("cone_from_rays: no rays given");
  const std::size_t dim = rays.front().size();
  check_dims(rays, dim);
  if (std::all_of(rays.begin(), rays.end(), [](const QVector& r) { return r.is_zero(); })) {
    throw InvalidCone("cone_from_rays: all rays are zero");
  }
  return PolyCone::from_rays(dim, rays);
}

PolyCone intersect(const PolyCone& a, const PolyCone& b) {
  if (a.ambient_dim() != b.ambient_dim()) throw DimensionError("intersect: ambient dimensions differ");
  std::vector<QVector> ineqs;
  for (const auto& f : a.facets()) ineqs.push_back(f.normal);
  for (const auto& f : b.facets()) ineqs.push_back(f.normal);
  std::vector<QVector> eqs = a.equations();
  eqs.insert(eqs.end(), b.equations().begin(), b.equations().end());
  return PolyCone::from_inequalities(a.ambient_dim(), ineqs, eqs);
}

bool contains(const PolyCone& c, const QVector& x, bool strict) {
  if (x.size() != c.ambient_dim()) throw DimensionError("contains: dimension mismatch");
  for (const auto& e : c.equations())
    if (dot(e, x) != 0) return false;
  for (const auto& f : c.facets()) {
    const int s = sgn(dot(f.normal, x));
    if (s < 0 || (strict && s == 0)) return false;
  }
  return true;
}

bool is_subcone(const PolyCone& a, const PolyCone& b) {
  for (const auto& r : a.rays())
    if (!contains(b, r)) return false;
  for (const auto& l : a.lineality())
    if (!contains(b, l) || !contains(b, -l)) return false;
  return true;
}

QVector relative_interior_point(const PolyCone& c) {
  if (c.is_zero()) throw InvalidCone("relative_interior_point: zero cone");
  QVector sum(c.ambient_dim());
  for (const auto& r : c.rays()) sum += r;
  return sum;
}

}  // namespace mmpw
