#include "mmpw/linalg.hpp"

#include <utility>

#include "mmpw/errors.hpp"

namespace mmpw {

QMatrix::QMatrix(std::size_t rows, std::size_t cols) : rows_(rows, QVector(cols)), cols_(cols) {}

QMatrix::QMatrix(std::vector<QVector> rows, std::size_t cols) : rows_(std::move(rows)), cols_(cols) {
  for (const auto& r : rows_) {
    if (r.size() != cols_) throw DimensionError("matrix row has wrong length");
  }
}

QMatrix QMatrix::identity(std::size_t n) {
  QMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

QMatrix QMatrix::from_columns(std::span<const QVector> columns, std::size_t rows) {
  QMatrix m(rows, columns.size());
  for (std::size_t j = 0; j < columns.size(); ++j) {
    if (columns[j].size() != rows) throw DimensionError("matrix column has wrong length");
    for (std::size_t i = 0; i < rows; ++i) m(i, j) = columns[j][i];
  }
  return m;
}

QVector QMatrix::column(std::size_t j) const {
  QVector c(rows());
  for (std::size_t i = 0; i < rows(); ++i) c[i] = rows_[i][j];
  return c;
}

QVector QMatrix::apply(const QVector& x) const {
  if (x.size() != cols_) throw DimensionError("matrix/vector dimension mismatch");
  QVector y(rows());
  for (std::size_t i = 0; i < rows(); ++i) y[i] = dot(rows_[i], x);
  return y;
}

QMatrix QMatrix::operator*(const QMatrix& other) const {
  if (cols_ != other.rows()) throw DimensionError("matrix product dimension mismatch");
  QMatrix out(rows(), other.cols());
  for (std::size_t i = 0; i < rows(); ++i)
    for (std::size_t j = 0; j < other.cols(); ++j)
      for (std::size_t k = 0; k < cols_; ++k) out(i, j) += rows_[i][k] * other(k, j);
  return out;
}

namespace {

// In-place reduced row echelon form; returns the pivot columns.
std::vector<std::size_t> rref(std::vector<QVector>& m, std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < m.size(); ++col) {
    std::size_t p = row;
    while (p < m.size() && m[p][col] == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[row], m[p]);
    const Rat inv = 1 / m[row][col];
    m[row] *= inv;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == row || m[i][col] == 0) continue;
      const Rat f = m[i][col];
      for (std::size_t j = col; j < m[row].size(); ++j) m[i][j] -= f * m[row][j];
    }
    pivots.push_back(col);
    ++row;
  }
  m.resize(row);
  return pivots;
}

}  // namespace

std::size_t rank(std::span<const QVector> vectors) {
  if (vectors.empty()) return 0;
  std::vector<QVector> m(vectors.begin(), vectors.end());
  return rref(m, m.front().size()).size();
}

std::vector<QVector> canonical_basis(std::span<const QVector> vectors, std::size_t dim) {
  std::vector<QVector> m(vectors.begin(), vectors.end());
  rref(m, dim);
  for (auto& r : m) r = primitive(r);
  return m;
}

std::vector<QVector> orthogonal_complement(std::span<const QVector> vectors, std::size_t dim) {
  std::vector<QVector> m(vectors.begin(), vectors.end());
  const auto pivots = rref(m, dim);
  std::vector<bool> is_pivot(dim, false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<QVector> basis;
  for (std::size_t free = 0; free < dim; ++free) {
    if (is_pivot[free]) continue;
    QVector v(dim);
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m[r][free];
    basis.push_back(v);
  }
  return canonical_basis(basis, dim);
}

QVector project_out(const QVector& x, std::span<const QVector> basis) {
  // Gram-Schmidt over the rationals.
  std::vector<QVector> ortho;
  std::vector<Rat> norms;
  for (const auto& b : basis) {
    QVector v = b;
    for (std::size_t i = 0; i < ortho.size(); ++i) v -= (dot(v, ortho[i]) / norms[i]) * ortho[i];
    if (v.is_zero()) continue;
    norms.push_back(dot(v, v));
    ortho.push_back(std::move(v));
  }
  QVector y = x;
  for (std::size_t i = 0; i < ortho.size(); ++i) y -= (dot(y, ortho[i]) / norms[i]) * ortho[i];
  return y;
}

std::optional<QVector> solve_square(const QMatrix& a, const QVector& b) {
  const std::size_t n = a.rows();
  if (a.cols() != n || b.size() != n) throw DimensionError("solve_square needs a square system");
  std::vector<QVector> aug;
  aug.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    QVector r(n + 1);
    for (std::size_t j = 0; j < n; ++j) r[j] = a(i, j);
    r[n] = b[i];
    aug.push_back(std::move(r));
  }
  const auto pivots = rref(aug, n);
  if (pivots.size() != n) return std::nullopt;
  QVector x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = aug[i][n];
  return x;
}

}  // namespace mmpw
