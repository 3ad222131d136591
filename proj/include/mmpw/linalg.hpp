#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "mmpw/rational.hpp"

namespace mmpw {

/// Dense rational matrix stored by rows.
class QMatrix {
 public:
  QMatrix() = default;
  QMatrix(std::size_t rows, std::size_t cols);
  /// All rows must have length `cols`.
  QMatrix(std::vector<QVector> rows, std::size_t cols);

  static QMatrix identity(std::size_t n);
  /// Matrix whose columns are the given vectors.
  static QMatrix from_columns(std::span<const QVector> columns, std::size_t rows);

  std::size_t rows() const { return rows_.size(); }
  std::size_t cols() const { return cols_; }
  const QVector& row(std::size_t i) const { return rows_[i]; }
  QVector column(std::size_t j) const;
  const Rat& operator()(std::size_t i, std::size_t j) const { return rows_[i][j]; }
  Rat& operator()(std::size_t i, std::size_t j) { return rows_[i][j]; }
  const std::vector<QVector>& row_vectors() const { return rows_; }

  QVector apply(const QVector& x) const;
  QMatrix operator*(const QMatrix& other) const;

  friend bool operator==(const QMatrix&, const QMatrix&) = default;

 private:
  std::vector<QVector> rows_;
  std::size_t cols_ = 0;
};

std::size_t rank(std::span<const QVector> vectors);
inline std::size_t rank(const QMatrix& m) { return rank(m.row_vectors()); }

/// Canonical basis of span(vectors): the nonzero rows of the reduced row
/// echelon form, each scaled to a primitive integer vector.
std::vector<QVector> canonical_basis(std::span<const QVector> vectors, std::size_t dim);

/// Basis of {x : <v, x> = 0 for all v}, in canonical form.
std::vector<QVector> orthogonal_complement(std::span<const QVector> vectors, std::size_t dim);

/// Orthogonal projection of x onto the complement of span(basis).
QVector project_out(const QVector& x, std::span<const QVector> basis);

/// Unique solution of A x = b when A is square and invertible.
std::optional<QVector> solve_square(const QMatrix& a, const QVector& b);

}  // namespace mmpw
