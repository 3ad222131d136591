#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "mmpw/rational.hpp"

namespace mmpw {

/// Linear half-space {x : <normal, x> >= 0}.
struct HalfSpace {
  /// Inward normal, primitive integer.
  QVector normal;

  /// Canonicalizes the normal. Throws InvalidCone for a zero normal.
  static HalfSpace from_normal(const QVector& normal);

  /// Identity of the bounding hyperplane: the normal up to sign.
  QVector hyperplane_key() const { return sign_normalized(normal); }

  friend bool operator==(const HalfSpace&, const HalfSpace&) = default;
  friend auto operator<=>(const HalfSpace& a, const HalfSpace& b) { return a.normal <=> b.normal; }
};

/// Generators of a polyhedral cone: lin(lineality) + cone(rays).
struct ConeGenerators {
  std::vector<QVector> rays;
  std::vector<QVector> lineality;
};

/// Incremental double description: generators of {x in R^dim : <a, x> >= 0 for all a}.
/// Rays come back primitive, orthogonal to the lineality space, sorted.
ConeGenerators double_description(std::size_t dim, std::span<const QVector> inequalities);

/// A rational polyhedral cone held in both representations.
///
/// Rays are the extremal primitive integer generators of the cone modulo its
/// lineality space (they are taken orthogonal to it, so they are unique).
/// Facets are irredundant inequalities, their normals projected into the
/// linear span of the cone. Equations span the orthogonal complement of that
/// span. All lists are sorted, so two equal cones compare equal field by field.
class PolyCone {
 public:
  PolyCone() = default;

  static PolyCone from_rays(std::size_t ambient_dim, std::span<const QVector> rays,
                            std::span<const QVector> lineality = {});
  static PolyCone from_inequalities(std::size_t ambient_dim, std::span<const QVector> inequalities,
                                    std::span<const QVector> equations = {});
  static PolyCone whole_space(std::size_t ambient_dim);
  static PolyCone zero(std::size_t ambient_dim);

  const std::vector<QVector>& rays() const { return rays_; }
  const std::vector<QVector>& lineality() const { return lineality_; }
  const std::vector<HalfSpace>& facets() const { return facets_; }
  const std::vector<QVector>& equations() const { return equations_; }
  std::size_t ambient_dim() const { return ambient_dim_; }
  std::size_t dim() const { return ambient_dim_ - equations_.size(); }

  bool is_pointed() const { return lineality_.empty(); }
  bool is_zero() const { return rays_.empty() && lineality_.empty(); }
  bool is_full_dimensional() const { return equations_.empty(); }
  bool is_simplicial() const { return is_pointed() && rays_.size() == dim(); }

  /// Facet normals together with +/- every equation.
  std::vector<QVector> inequality_system() const;

  friend bool operator==(const PolyCone&, const PolyCone&) = default;

 private:
  static PolyCone build(std::size_t ambient_dim, ConeGenerators gens);

  std::vector<QVector> rays_;
  std::vector<QVector> lineality_;
  std::vector<HalfSpace> facets_;
  std::vector<QVector> equations_;
  std::size_t ambient_dim_ = 0;
};

/// Cone spanned by the given vectors. Throws InvalidCone on empty or all-zero
/// input and DimensionError on mixed dimensions.
PolyCone cone_from_rays(std::span<const QVector> rays);

/// Throws DimensionError on ambient dimension mismatch.
PolyCone intersect(const PolyCone& a, const PolyCone& b);

/// Closed membership, or relative-interior membership when `strict`.
bool contains(const PolyCone& c, const QVector& x, bool strict = false);

/// a is a subset of b.
bool is_subcone(const PolyCone& a, const PolyCone& b);

/// Sum of the extremal rays. Throws InvalidCone for the zero cone.
QVector relative_interior_point(const PolyCone& c);

}  // namespace mmpw
