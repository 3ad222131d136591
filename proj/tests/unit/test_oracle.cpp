#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "mmpw/errors.hpp"
#include "mmpw/oracle.hpp"
#include "mmpw/valuations.hpp"

using namespace mmpw;

TEST_CASE("random instances are valid and deterministic") {
  const RandomInstance a = random_instance({1, 3, 1, 3, 1});
  CHECK(validate(a.datum).ok());
  CHECK(a.warnings.empty());
  CHECK(a.datum.generators.size() == 3);
  CHECK(random_instance({1, 3, 1, 3, 1}).datum == a.datum);
  CHECK_FALSE(random_instance({1, 3, 1, 3, 2}).datum == a.datum);

  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    const RandomInstance inst = random_instance({3, 8, 4, 10, seed});
    CHECK(validate(inst.datum).ok());
    CHECK(support_cone(inst.datum).is_full_dimensional());
    for (const auto& g : inst.datum.generators)
      for (const auto& [_, v] : g.mults) CHECK((v >= 0 && v <= 10));
  }
}

TEST_CASE("too few generators are clamped up") {
  const RandomInstance inst = random_instance({2, 1, 1, 3, 5});
  CHECK(inst.datum.generators.size() == 3);
  REQUIRE(inst.warnings.size() == 1);
  CHECK(inst.warnings[0].find("clamped") != std::string::npos);
  CHECK_THROWS_AS(random_instance({0, 3, 1, 3, 1}), std::invalid_argument);
}

TEST_CASE("integer oracle examples") {
  const RingDatum d = testing::e1();
  CHECK(o_value_oracle(d, "E", QVector{2, 1}, {1, 2, 3}) ==
        std::vector<std::optional<Rat>>{Rat(1), Rat(1), Rat(1)});
  for (const auto& v : o_value_oracle(d, "E", QVector{1, 1}, {1, 2, 5, 7})) CHECK(v == std::optional<Rat>(0));
  for (const auto& v : o_value_oracle(d, "E", QVector{1, 0}, {1, 4})) CHECK(v == std::optional<Rat>(1));
  CHECK_THROWS_AS(o_value_oracle(d, "E", QVector{Rat(1, 2), 0}, {1}), std::invalid_argument);
  CHECK_THROWS_AS(o_value_oracle(d, "E", QVector{30, 20}, {1}, 2), BudgetExceeded);
}

TEST_CASE("integer oracle agrees with ip_value and the LP bound") {
  for (std::uint64_t seed = 1; seed <= 12; ++seed) {
    const RingDatum d = testing::small_instance(seed, 1 + seed % 2, 4, 2, 3);
    std::mt19937_64 rng(seed);
    for (int p = 0; p < 3; ++p) {
      std::vector<Rat> coords(d.grading_dim());
      for (auto& c : coords) c = static_cast<long>(rng() % 4);
      const QVector x(coords);
      if (x.is_zero()) continue;
      for (const auto& v : d.valuations) {
        const Rat lp = o_value(d, v.name, x).value;
        const std::vector<long> ks{1, 2, 3, 4, 6};
        const auto oracle = o_value_oracle(d, v.name, x, ks);
        for (std::size_t i = 0; i < ks.size(); ++i) {
          CHECK(oracle[i] == ip_value(d, v.name, x, ks[i]));
          REQUIRE(oracle[i]);  // unit generators make every integral point representable
          CHECK(*oracle[i] >= lp);
        }
        // monotone along divisibility
        CHECK(*oracle[1] <= *oracle[0]);
        CHECK(*oracle[3] <= *oracle[1]);
        CHECK(*oracle[4] <= *oracle[2]);
      }
    }
  }
}

TEST_CASE("builtin catalog") {
  for (const auto& [name, d] : builtin_examples()) {
    CAPTURE(name);
    const ValidationReport rep = validate(d);
    CHECK(rep.ok());
    CHECK(rep.empty());
  }
  CHECK(builtin_examples().count("blowup-P2") == 1);
}

namespace {

// Zariski decomposition on Bl_p P^2: for a big class aHbar + bE with b > 0
// the negative part is bE, otherwise the class is nef on E's side and o_E = 0.
Rat zariski_o_e(const QVector& cls) { return cls[1] > 0 ? cls[1] : Rat(0); }

}  // namespace

TEST_CASE("blow-up example matches the Zariski decomposition") {
  const RingDatum& d = testing::builtin("blowup-P2");
  std::mt19937_64 rng(11);
  for (int i = 0; i < 50; ++i) {
    const QVector x{make_rat(static_cast<long>(rng() % 30), 1 + static_cast<long>(rng() % 5)),
                    make_rat(static_cast<long>(rng() % 30), 1 + static_cast<long>(rng() % 5))};
    if (x.is_zero()) continue;
    CHECK(o_value(d, "E", x).value == zariski_o_e(d.numerical->matrix.apply(x)));
  }
  // the chamber {x <= y} maps into Nef(X)
  const QMatrix& m = d.numerical->matrix;
  CHECK(m.apply(QVector{0, 1}) == QVector{6, -1});
  CHECK(m.apply(QVector{1, 1}) == QVector{8, 0});
  CHECK(contains(d.nef->cone, m.apply(QVector{0, 1})));
  CHECK(contains(d.nef->cone, m.apply(QVector{1, 1})));
  CHECK_FALSE(contains(d.nef->cone, m.apply(QVector{1, 0})));
}
