#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace mmpw {

using Int = mpz_class;
/// Exact rational. gmp keeps results of arithmetic in lowest terms with a
/// positive denominator; values built from raw parts go through make_rat.
using Rat = mpq_class;

Rat make_rat(const Int& num, const Int& den);

/// Parses "p", "p/q" or "-p/q" (decimal digits only). Throws ParseError.
Rat parse_rat(std::string_view text);
/// "p" for integers, "p/q" otherwise.
std::string format_rat(const Rat& value);

Int lcm(const Int& a, const Int& b);

/// Fixed-dimension vector of rationals.
class QVector {
 public:
  QVector() = default;
  explicit QVector(std::size_t n) : coords_(n) {}
  explicit QVector(std::vector<Rat> coords) : coords_(std::move(coords)) {}
  QVector(std::initializer_list<Rat> coords) : coords_(coords) {}

  static QVector unit(std::size_t n, std::size_t i);
  static QVector from_ints(const std::vector<long>& values);

  std::size_t size() const { return coords_.size(); }
  const Rat& operator[](std::size_t i) const { return coords_[i]; }
  Rat& operator[](std::size_t i) { return coords_[i]; }
  const std::vector<Rat>& coords() const { return coords_; }
  auto begin() const { return coords_.begin(); }
  auto end() const { return coords_.end(); }

  bool is_zero() const;
  bool is_integral() const;

  QVector& operator+=(const QVector& other);
  QVector& operator-=(const QVector& other);
  QVector& operator*=(const Rat& s);

  friend bool operator==(const QVector& a, const QVector& b) { return a.coords_ == b.coords_; }
  /// Lexicographic.
  friend std::strong_ordering operator<=>(const QVector& a, const QVector& b);

 private:
  std::vector<Rat> coords_;
};

QVector operator+(QVector a, const QVector& b);
QVector operator-(QVector a, const QVector& b);
QVector operator-(QVector a);
QVector operator*(const Rat& s, QVector a);

Rat dot(const QVector& a, const QVector& b);
Rat l1_norm(const QVector& a);

/// Positive multiple with coprime integer entries. Zero stays zero.
QVector primitive(const QVector& v);
/// primitive() with the first nonzero entry made positive.
QVector sign_normalized(const QVector& v);
/// lcm of all denominators.
Int denominator_lcm(const QVector& v);

std::string format_vector(const QVector& v);
std::ostream& operator<<(std::ostream& os, const QVector& v);

}  // namespace mmpw
