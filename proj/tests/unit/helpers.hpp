#pragma once

#include <optional>
#include <random>
#include <vector>

#include "mmpw/oracle.hpp"
#include "mmpw/ring.hpp"

namespace testing {

using namespace mmpw;

inline GeneratorDatum gen(std::vector<long> deg, std::map<std::string, Rat> mults) {
  return GeneratorDatum{std::move(deg), std::move(mults)};
}

// Generators (1,0), (0,1), (1,1) with heights 1, 0, 0 for the valuation E.
inline RingDatum e1() {
  RingDatum d;
  d.r = 1;
  d.labels = {"K", "D1"};
  d.valuations = {{"E"}};
  d.generators = {gen({1, 0}, {{"E", 1}}), gen({0, 1}, {{"E", 0}}), gen({1, 1}, {{"E", 0}})};
  d.numerical = NumericalMap{QMatrix::identity(2)};
  d.segment_h = QVector{0, 1};
  return d;
}

inline const RingDatum& builtin(const std::string& name) { return builtin_examples().at(name); }

inline PolyCone quadrant() { return cone_from_rays(std::vector<QVector>{{1, 0}, {0, 1}}); }

inline PolyCone cone2(std::vector<QVector> rays) { return cone_from_rays(rays); }

// Determinant by cofactor expansion; only used on tiny matrices.
inline Rat det(const std::vector<std::vector<Rat>>& m) {
  const std::size_t n = m.size();
  if (n == 1) return m[0][0];
  Rat total = 0;
  for (std::size_t c = 0; c < n; ++c) {
    std::vector<std::vector<Rat>> minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<Rat> row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != c) row.push_back(m[r][k]);
      minor.push_back(row);
    }
    const Rat term = m[0][c] * det(minor);
    total += (c % 2 == 0) ? term : Rat(-term);
  }
  return total;
}

// Minimum over all basic feasible solutions, found by trying every square
// column subset with Cramer's rule. Valid for full-dimensional supports.
struct BasicOptimum {
  Rat value;
  std::vector<Rat> witness;
};

inline std::optional<BasicOptimum> enumerate_vertices(const RingDatum& d, const std::string& val, const QVector& x) {
  const auto degrees = d.degrees();
  const auto heights = d.heights(val);
  const std::size_t n = x.size(), m = degrees.size();
  std::optional<BasicOptimum> best;
  std::vector<std::size_t> pick;
  auto visit = [&](auto&& self, std::size_t start) -> void {
    if (pick.size() == n) {
      std::vector<std::vector<Rat>> a(n, std::vector<Rat>(n));
      for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) a[r][c] = degrees[pick[c]][r];
      const Rat dA = det(a);
      if (dA == 0) return;
      std::vector<Rat> w(m, Rat(0));
      Rat value = 0;
      for (std::size_t c = 0; c < n; ++c) {
        auto ac = a;
        for (std::size_t r = 0; r < n; ++r) ac[r][c] = x[r];
        w[pick[c]] = det(ac) / dA;
        if (w[pick[c]] < 0) return;
        value += w[pick[c]] * heights[pick[c]];
      }
      if (!best || value < best->value) best = BasicOptimum{value, w};
      return;
    }
    for (std::size_t i = start; i < m; ++i) {
      pick.push_back(i);
      self(self, i + 1);
      pick.pop_back();
    }
  };
  visit(visit, 0);
  return best;
}

// Plain depth-first enumeration of integer representations of k x.
inline std::optional<Rat> brute_integer_value(const RingDatum& d, const std::string& val, const QVector& x, long k) {
  const auto degrees = d.degrees();
  const auto heights = d.heights(val);
  std::vector<long> target;
  for (const auto& c : x) target.push_back(Rat(c * k).get_num().get_si());
  std::optional<Rat> best;
  auto walk = [&](auto&& self, std::size_t i, std::vector<long>& rest, Rat acc) -> void {
    if (i == degrees.size()) {
      for (long c : rest)
        if (c != 0) return;
      if (!best || acc < *best) best = acc;
      return;
    }
    long cap = -1;
    for (std::size_t c = 0; c < rest.size(); ++c) {
      const long e = degrees[i][c].get_num().get_si();
      if (e > 0 && (cap < 0 || rest[c] / e < cap)) cap = rest[c] / e;
    }
    for (long a = 0; a <= cap; ++a) {
      for (std::size_t c = 0; c < rest.size(); ++c) rest[c] -= a * degrees[i][c].get_num().get_si();
      bool ok = true;
      for (long c : rest) ok = ok && c >= 0;
      if (ok) self(self, i + 1, rest, acc + Rat(a) * heights[i]);
      for (std::size_t c = 0; c < rest.size(); ++c) rest[c] += a * degrees[i][c].get_num().get_si();
    }
  };
  walk(walk, 0, target, Rat(0));
  if (best) return *best / k;
  return std::nullopt;
}

inline RingDatum small_instance(std::uint64_t seed, int r = 1, int generators = 4, int valuations = 2, long bound = 3) {
  return random_instance({r, generators, valuations, bound, seed}).datum;
}

}  // namespace testing
