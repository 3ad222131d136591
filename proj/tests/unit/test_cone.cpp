#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "mmpw/cone.hpp"
#include "mmpw/errors.hpp"

using namespace mmpw;
using testing::quadrant;

namespace {

std::vector<QVector> normals(const PolyCone& c) {
  std::vector<QVector> out;
  for (const auto& f : c.facets()) out.push_back(f.normal);
  return out;
}

}  // namespace

TEST_CASE("cone_from_rays examples") {
  const PolyCone q = quadrant();
  CHECK(q.rays() == std::vector<QVector>{{0, 1}, {1, 0}});
  CHECK(normals(q) == std::vector<QVector>{{0, 1}, {1, 0}});
  CHECK(q.is_full_dimensional());
  CHECK(q.is_simplicial());

  const PolyCone redundant = cone_from_rays(std::vector<QVector>{{1, 0}, {1, 1}, {0, 1}});
  CHECK(redundant == q);

  const PolyCone wedge = cone_from_rays(std::vector<QVector>{{1, 1}, {1, -1}});
  CHECK(normals(wedge) == std::vector<QVector>{{1, -1}, {1, 1}});
}

TEST_CASE("cone_from_rays rejects empty input") {
  CHECK_THROWS_AS(cone_from_rays(std::vector<QVector>{}), InvalidCone);
  CHECK_THROWS_AS(cone_from_rays(std::vector<QVector>{{0, 0}}), InvalidCone);
  CHECK_THROWS_AS(cone_from_rays(std::vector<QVector>{{1, 0}, {1, 0, 0}}), DimensionError);
}

TEST_CASE("rays are primitive and scaling does not matter") {
  const PolyCone a = cone_from_rays(std::vector<QVector>{{2, 0}, {Rat(1, 3), Rat(1, 3)}});
  const PolyCone b = cone_from_rays(std::vector<QVector>{{1, 0}, {5, 5}});
  CHECK(a == b);
  CHECK(a.rays() == std::vector<QVector>{{1, 0}, {1, 1}});
}

TEST_CASE("intersection examples") {
  const PolyCone q = quadrant();
  const PolyCone upper = PolyCone::from_inequalities(2, std::vector<QVector>{{1, -1}});
  CHECK(intersect(q, upper) == cone_from_rays(std::vector<QVector>{{1, 0}, {1, 1}}));
  CHECK(intersect(q, q) == q);

  const PolyCone shared = intersect(cone_from_rays(std::vector<QVector>{{1, 0}, {1, 1}}),
                                    cone_from_rays(std::vector<QVector>{{1, 1}, {0, 1}}));
  CHECK(shared.rays() == std::vector<QVector>{{1, 1}});
  CHECK(shared.dim() == 1);
  CHECK_THROWS_AS(intersect(q, PolyCone::whole_space(3)), DimensionError);
}

TEST_CASE("contains examples") {
  const PolyCone q = quadrant();
  CHECK(contains(q, QVector{1, 1}, true));
  CHECK_FALSE(contains(q, QVector{1, 0}, true));
  CHECK(contains(q, QVector{1, 0}));
  CHECK_FALSE(contains(q, QVector{-1, 2}));

  // relative interior of a lower-dimensional cone
  const PolyCone ray = cone_from_rays(std::vector<QVector>{{1, 1}});
  CHECK(contains(ray, QVector{2, 2}, true));
  CHECK_FALSE(contains(ray, QVector{0, 0}, true));
  CHECK_FALSE(contains(ray, QVector{2, 1}));
}

TEST_CASE("relative interior points are ray sums") {
  CHECK(relative_interior_point(quadrant()) == QVector{1, 1});
  CHECK(relative_interior_point(cone_from_rays(std::vector<QVector>{{1, 0}, {1, 1}})) == QVector{2, 1});
  CHECK(relative_interior_point(cone_from_rays(std::vector<QVector>{{1, 1}})) == QVector{1, 1});
  CHECK_THROWS_AS(relative_interior_point(PolyCone::zero(2)), InvalidCone);
}

TEST_CASE("cones with lineality") {
  const PolyCone half = PolyCone::from_inequalities(2, std::vector<QVector>{{1, 0}});
  CHECK(half.rays() == std::vector<QVector>{{1, 0}});
  CHECK(half.lineality().size() == 1);
  CHECK_FALSE(half.is_pointed());
  CHECK(contains(half, QVector{0, -5}));
  CHECK(contains(half, QVector{1, -5}, true));
  CHECK_FALSE(contains(half, QVector{0, 3}, true));

  const PolyCone whole = PolyCone::whole_space(3);
  CHECK(whole.rays().empty());
  CHECK(whole.lineality().size() == 3);
  CHECK(whole.facets().empty());
  CHECK(PolyCone::zero(2).is_zero());
  CHECK(PolyCone::zero(2).equations().size() == 2);

  // a plane in R^3 given by a lineality basis
  const PolyCone plane = PolyCone::from_rays(3, {}, std::vector<QVector>{{1, 0, 0}, {0, 1, 1}});
  CHECK(plane.dim() == 2);
  CHECK(plane.equations().size() == 1);
  CHECK(contains(plane, QVector{3, -1, -1}, true));
}

TEST_CASE("subcones") {
  CHECK(is_subcone(cone_from_rays(std::vector<QVector>{{1, 0}, {1, 1}}), quadrant()));
  CHECK_FALSE(is_subcone(quadrant(), cone_from_rays(std::vector<QVector>{{1, 0}, {1, 1}})));
}

TEST_CASE("double description round trip on random cones") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 2 + rng() % 3;
    std::vector<QVector> rays;
    const std::size_t count = 1 + rng() % 6;
    for (std::size_t i = 0; i < count; ++i) {
      QVector v(n);
      for (std::size_t c = 0; c < n; ++c) v[c] = static_cast<long>(rng() % 7) - 2;
      if (!v.is_zero()) rays.push_back(v);
    }
    if (rays.empty()) continue;
    const PolyCone c = cone_from_rays(rays);
    CAPTURE(trial);
    // H-representation gives back the same cone
    CHECK(PolyCone::from_inequalities(n, normals(c), c.equations()) == c);
    for (const auto& r : rays) CHECK(contains(c, r));
    // every facet is supported by enough rays to be a facet
    for (const auto& f : c.facets()) {
      std::vector<QVector> tight = c.lineality();
      for (const auto& r : c.rays())
        if (dot(f.normal, r) == 0) tight.push_back(r);
      CHECK(rank(tight) + 1 == c.dim());
    }
    CHECK(contains(c, relative_interior_point(c), true) == (c.dim() > 0));
  }
}
