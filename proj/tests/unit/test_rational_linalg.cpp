#include <doctest.h>

#include "mmpw/errors.hpp"
#include "mmpw/linalg.hpp"

using namespace mmpw;

TEST_CASE("rationals parse and print in lowest terms") {
  CHECK(format_rat(parse_rat("3/6")) == "1/2");
  CHECK(format_rat(parse_rat("-4/2")) == "-2");
  CHECK(format_rat(parse_rat("7")) == "7");
  CHECK(parse_rat("-1/3") == Rat(-1, 3));
  for (const char* bad : {"", "1/0", "abc", "1.5", "1/", "/2", "1/-2", "--1", " 1"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(parse_rat(bad), ParseError);
  }
  CHECK(make_rat(6, -4) == Rat(-3, 2));
  CHECK(lcm(Int(4), Int(6)) == 12);
}

TEST_CASE("vector helpers") {
  CHECK(primitive(QVector{Rat(2, 3), Rat(4, 3)}) == QVector{1, 2});
  CHECK(primitive(QVector{0, 0}) == QVector{0, 0});
  CHECK(sign_normalized(QVector{0, -2, 4}) == QVector{0, 1, -2});
  CHECK(denominator_lcm(QVector{Rat(1, 4), Rat(5, 6), 2}) == 12);
  CHECK(dot(QVector{1, 2}, QVector{3, -1}) == 1);
  CHECK(l1_norm(QVector{-1, Rat(1, 2)}) == Rat(3, 2));
  CHECK(format_vector(QVector{Rat(1, 2), -3}) == "(1/2,-3)");
  CHECK(QVector::unit(3, 1) == QVector{0, 1, 0});
  CHECK((QVector{1, 0} < QVector{1, 1}));
  CHECK(QVector{Rat(1, 2), 2}.is_integral() == false);
}

TEST_CASE("rank and canonical bases") {
  const std::vector<QVector> v{{1, 2, 3}, {2, 4, 6}, {0, 1, 1}};
  CHECK(rank(v) == 2);
  const auto basis = canonical_basis(v, 3);
  CHECK(basis.size() == 2);
  // the same span from a different generating set gives the same basis
  CHECK(canonical_basis(std::vector<QVector>{{1, 3, 4}, {0, 2, 2}}, 3) == basis);
  const auto comp = orthogonal_complement(v, 3);
  REQUIRE(comp.size() == 1);
  for (const auto& b : v) CHECK(dot(b, comp[0]) == 0);
  CHECK(orthogonal_complement(std::vector<QVector>{}, 2).size() == 2);
}

TEST_CASE("projection and square solves") {
  const std::vector<QVector> basis{{1, 1}};
  const QVector p = project_out(QVector{3, 1}, basis);
  CHECK(p == QVector{1, -1});
  const QMatrix a({QVector{2, 1}, QVector{1, 3}}, 2);
  const auto x = solve_square(a, QVector{3, 5});
  REQUIRE(x);
  CHECK(a.apply(*x) == QVector{3, 5});
  CHECK(*x == QVector{Rat(4, 5), Rat(7, 5)});
  CHECK_FALSE(solve_square(QMatrix({QVector{1, 2}, QVector{2, 4}}, 2), QVector{1, 1}));
}

TEST_CASE("matrix products") {
  const QMatrix a({QVector{1, 2}, QVector{0, 1}}, 2);
  const QMatrix b = QMatrix::from_columns(std::vector<QVector>{{1, 0}, {1, 1}}, 2);
  CHECK(b.column(1) == QVector{1, 1});
  CHECK((a * b).row(0) == QVector{1, 3});
  CHECK(a * QMatrix::identity(2) == a);
}
