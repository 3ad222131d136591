#include "mmpw/oracle.hpp"

#include <algorithm>
#include <random>

#include "mmpw/errors.hpp"

namespace mmpw {

RandomInstance random_instance(const InstanceSpec& spec) {
  if (spec.r < 1 || spec.valuation_count < 0 || spec.coordinate_bound < 1) {
    throw std::invalid_argument("random_instance: bounds must be positive");
  }
  RandomInstance out;
  std::mt19937_64 rng(spec.seed);
  // Plain modulo keeps the stream identical across standard libraries.
  auto draw = [&](std::uint64_t n) { return static_cast<long>(rng() % n); };

  const int n = spec.r + 1;
  int count = spec.generator_count;
  if (count < n) {
    out.warnings.push_back("generator_count " + std::to_string(count) + " clamped up to " + std::to_string(n));
    count = n;
  }
  RingDatum& d = out.datum;
  d.r = spec.r;
  for (int i = 0; i < n; ++i) d.labels.push_back("D" + std::to_string(i));
  for (int v = 1; v <= spec.valuation_count; ++v) d.valuations.push_back({"G" + std::to_string(v)});

  const auto bound = static_cast<std::uint64_t>(spec.coordinate_bound);
  for (int i = 0; i < count; ++i) {
    GeneratorDatum g;
    g.multidegree.assign(n, 0);
    if (i < n) {
      g.multidegree[i] = 1;
    } else {
      do {
        for (auto& x : g.multidegree) x = draw(bound + 1);
      } while (std::all_of(g.multidegree.begin(), g.multidegree.end(), [](long x) { return x == 0; }));
    }
    for (const auto& v : d.valuations) {
      const long den = 1 + draw(4);
      const long num = draw(bound * static_cast<std::uint64_t>(den) + 1);
      g.mults[v.name] = make_rat(num, den);
    }
    d.generators.push_back(std::move(g));
  }
  d.numerical = NumericalMap{QMatrix::identity(n)};
  return out;
}

namespace {

class MemoOracle {
 public:
  MemoOracle(const RingDatum& d, const std::string& valuation, std::uint64_t budget)
      : degrees_(d.degrees()), heights_(d.heights(valuation)), budget_(budget) {}

  std::optional<Rat> best(std::size_t j, const std::vector<Int>& residual) {
    if (j == degrees_.size()) {
      for (const auto& x : residual)
        if (x != 0) return std::nullopt;
      return Rat(0);
    }
    auto key = std::make_pair(j, residual);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    if (memo_.size() >= budget_) throw BudgetExceeded("o_value_oracle: state budget exceeded");

    std::optional<Rat> result;
    std::vector<Int> rest = residual;
    for (Int a = 0;; ++a) {
      bool feasible = true;
      for (std::size_t c = 0; c < rest.size(); ++c) feasible = feasible && rest[c] >= 0;
      if (!feasible) break;
      if (auto tail = best(j + 1, rest)) {
        const Rat total = *tail + Rat(a) * heights_[j];
        if (!result || total < *result) result = total;
      }
      for (std::size_t c = 0; c < rest.size(); ++c) rest[c] -= degrees_[j][c].get_num();
    }
    memo_.emplace(std::move(key), result);
    return result;
  }

 private:
  std::vector<QVector> degrees_;
  std::vector<Rat> heights_;
  std::uint64_t budget_;
  std::map<std::pair<std::size_t, std::vector<Int>>, std::optional<Rat>> memo_;
};

}  // namespace

std::vector<std::optional<Rat>> o_value_oracle(const RingDatum& d, const std::string& valuation, const QVector& x,
                                               const std::vector<long>& k_list, std::uint64_t state_budget) {
  for (const auto& e : d.degrees()) {
    for (const auto& c : e) {
      if (c < 0 || c.get_den() != 1) throw std::invalid_argument("o_value_oracle: multidegrees must be in N^{r+1}");
    }
  }
  std::vector<std::optional<Rat>> out;
  MemoOracle oracle(d, valuation, state_budget);
  for (long k : k_list) {
    if (k < 1) throw std::invalid_argument("o_value_oracle: k must be positive");
    const QVector target = Rat(k) * x;
    if (!target.is_integral()) throw std::invalid_argument("o_value_oracle: k*x is not integral");
    std::vector<Int> residual;
    for (const auto& c : target) residual.push_back(c.get_num());
    auto v = oracle.best(0, residual);
    out.push_back(v ? std::optional<Rat>(*v / k) : std::nullopt);
  }
  return out;
}

namespace {

GeneratorDatum gen(std::vector<long> deg, std::map<std::string, Rat> mults) {
  return GeneratorDatum{std::move(deg), std::move(mults)};
}

RingDatum blowup_p2() {
  // X = Bl_p P^2, classes a*Hbar + b*E. D_0 = K_X+Delta = 2Hbar + E,
  // D_1 = 6Hbar - E. o_E(x D_0 + y D_1) = max(x - y, 0).
  RingDatum d;
  d.r = 1;
  d.labels = {"K_X+Delta", "D_1"};
  d.valuations = {{"E"}};
  d.generators = {gen({1, 0}, {{"E", 1}}), gen({0, 1}, {{"E", 0}}), gen({1, 1}, {{"E", 0}})};
  d.numerical = NumericalMap{QMatrix({QVector{2, 6}, QVector{1, -1}}, 2)};
  // Nef(X) = { b <= 0, a + b >= 0 }.
  d.nef = NefConeDatum{PolyCone::from_inequalities(2, std::vector<QVector>{{0, -1}, {1, 1}})};
  // Contracting E lands on P^2: aHbar + bE pushes forward to aH, Nef(P^2) = {a >= 0}.
  d.pushforwards = {PushforwardDatum{"P2", QMatrix({QVector{2, 6}}, 2),
                                     NefConeDatum{PolyCone::from_inequalities(1, std::vector<QVector>{{1}})}}};
  d.segment_h = QVector{0, 1};
  return d;
}

RingDatum two_walls() {
  // o_A = max(x - y, 0), o_B = max(x - 2y, 0).
  RingDatum d;
  d.r = 1;
  d.labels = {"K_X+Delta", "D_1"};
  d.valuations = {{"A"}, {"B"}};
  d.generators = {gen({1, 0}, {{"A", 1}, {"B", 1}}), gen({0, 1}, {{"A", 0}, {"B", 0}}),
                  gen({1, 1}, {{"A", 0}, {"B", 0}}), gen({2, 1}, {{"A", 1}, {"B", 0}})};
  d.numerical = NumericalMap{QMatrix::identity(2)};
  d.segment_h = QVector{0, 1};
  return d;
}

RingDatum flat() {
  RingDatum d;
  d.r = 1;
  d.labels = {"K_X+Delta", "D_1"};
  d.valuations = {{"Z"}};
  d.generators = {gen({1, 0}, {{"Z", 0}}), gen({0, 1}, {{"Z", 0}}), gen({1, 1}, {{"Z", 0}})};
  d.numerical = NumericalMap{QMatrix::identity(2)};
  d.segment_h = QVector{0, 1};
  return d;
}

RingDatum stellar_3d() {
  // The centre generator sits below the plane through the unit generators,
  // so the linearity fan is the stellar subdivision at (1,1,1).
  RingDatum d;
  d.r = 2;
  d.labels = {"K_X+Delta", "D_1", "D_2"};
  d.valuations = {{"F"}};
  d.generators = {gen({1, 0, 0}, {{"F", 1}}), gen({0, 1, 0}, {{"F", 1}}), gen({0, 0, 1}, {{"F", 1}}),
                  gen({1, 1, 1}, {{"F", 0}})};
  d.numerical = NumericalMap{QMatrix::identity(3)};
  d.segment_h = QVector{1, 2, 4};
  return d;
}

}  // namespace

const std::map<std::string, RingDatum>& builtin_examples() {
  static const std::map<std::string, RingDatum> catalog = {
      {"blowup-P2", blowup_p2()},
      {"two-walls", two_walls()},
      {"flat", flat()},
      {"stellar-3d", stellar_3d()},
  };
  return catalog;
}

}  // namespace mmpw
