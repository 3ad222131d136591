#pragma once

#include <optional>
#include <span>
#include <vector>

#include "mmpw/cone.hpp"

namespace mmpw {

/// Maximal cells of a subdivision of `support`.
///
/// Cells all have the dimension of the support, pairwise disjoint relative
/// interiors, and are kept in canonical order (lexicographic by sorted ray
/// lists). Construct through make_fan so the ordering holds.
struct Fan {
  std::vector<PolyCone> cells;
  PolyCone support;

  friend bool operator==(const Fan&, const Fan&) = default;
};

/// Canonical cell order used by every fan.
bool cell_less(const PolyCone& a, const PolyCone& b);

/// Sorts and deduplicates the cells. Lower-dimensional cells are dropped.
Fan make_fan(PolyCone support, std::vector<PolyCone> cells);

/// The one-cell fan.
Fan trivial_fan(const PolyCone& support);

/// Index of the cell whose relative interior contains x, if any.
std::optional<std::size_t> locate_interior(const Fan& fan, const QVector& x);

/// All full-dimensional intersections of one cell from each input fan.
/// Throws SupportMismatch when the supports differ.
Fan common_refinement(std::span<const Fan> fans);

/// Slices every cell by every hyperplane spanned by a facet of some cell,
/// until each cell lies on one side of each such hyperplane.
Fan hyperplane_refinement(const Fan& fan);

/// Pulling triangulation with respect to the global lexicographic ray order.
/// Every output cell is simplicial. Cells must be pointed.
Fan simplicial_refinement(const Fan& fan);

/// Simplices (as ray lists) of the pulling triangulation of one pointed cone.
std::vector<std::vector<QVector>> pulling_triangulation(const PolyCone& cone);

}  // namespace mmpw
