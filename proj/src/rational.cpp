#include "mmpw/rational.hpp"

#include <algorithm>
#include <cctype>
#include <ostream>

#include "mmpw/errors.hpp"

namespace mmpw {

Rat make_rat(const Int& num, const Int& den) {
  if (den == 0) throw std::domain_error("zero denominator");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

namespace {

bool all_digits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); });
}

}  // namespace

Rat parse_rat(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  const auto slash = body.find('/');
  const std::string_view num = body.substr(0, slash);
  const std::string_view den = slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den)) {
    throw ParseError("not a rational: \"" + std::string(text) + "\"");
  }
  Int n(std::string(num), 10);
  Int d(std::string(den), 10);
  if (d == 0) throw ParseError("zero denominator: \"" + std::string(text) + "\"");
  if (negative) n = -n;
  return make_rat(n, d);
}

std::string format_rat(const Rat& value) { return value.get_str(); }

Int lcm(const Int& a, const Int& b) {
  Int out;
  mpz_lcm(out.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return out;
}

QVector QVector::unit(std::size_t n, std::size_t i) {
  QVector v(n);
  v[i] = 1;
  return v;
}

QVector QVector::from_ints(const std::vector<long>& values) {
  QVector v(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) v[i] = values[i];
  return v;
}

bool QVector::is_zero() const {
  return std::all_of(coords_.begin(), coords_.end(), [](const Rat& x) { return x == 0; });
}

bool QVector::is_integral() const {
  return std::all_of(coords_.begin(), coords_.end(), [](const Rat& x) { return x.get_den() == 1; });
}

QVector& QVector::operator+=(const QVector& other) {
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += other.coords_[i];
  return *this;
}

QVector& QVector::operator-=(const QVector& other) {
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] -= other.coords_[i];
  return *this;
}

QVector& QVector::operator*=(const Rat& s) {
  for (auto& x : coords_) x *= s;
  return *this;
}

std::strong_ordering operator<=>(const QVector& a, const QVector& b) {
  const std::size_t n = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i) {
    const int c = cmp(a[i], b[i]);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
  }
  return a.size() <=> b.size();
}

QVector operator+(QVector a, const QVector& b) { return a += b; }
QVector operator-(QVector a, const QVector& b) { return a -= b; }
QVector operator-(QVector a) { return a *= Rat(-1); }
QVector operator*(const Rat& s, QVector a) { return a *= s; }

Rat dot(const QVector& a, const QVector& b) {
  Rat s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Rat l1_norm(const QVector& a) {
  Rat s = 0;
  for (const auto& x : a) s += abs(x);
  return s;
}

Int denominator_lcm(const QVector& v) {
  Int l = 1;
  for (const auto& x : v) l = lcm(l, x.get_den());
  return l;
}

QVector primitive(const QVector& v) {
  if (v.is_zero()) return v;
  const Int scale = denominator_lcm(v);
  Int g = 0;
  for (const auto& x : v) {
    const Int n = x.get_num() * (scale / x.get_den());
    g = gcd(g, n);
  }
  QVector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    out[i] = Rat(Int(v[i].get_num() * (scale / v[i].get_den()) / g));
  }
  return out;
}

QVector sign_normalized(const QVector& v) {
  QVector p = primitive(v);
  for (const auto& x : p) {
    if (x != 0) {
      if (x < 0) p *= Rat(-1);
      break;
    }
  }
  return p;
}

std::string format_vector(const QVector& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += format_rat(v[i]);
  }
  return s + ")";
}

std::ostream& operator<<(std::ostream& os, const QVector& v) { return os << format_vector(v); }

}  // namespace mmpw
