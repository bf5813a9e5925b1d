#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "kmforge/numeric/cyclotomic.hpp"

namespace kmforge {

using Vector = std::vector<CyclotomicNumber>;

/// Dense row-major matrix over cyclotomic numbers.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Matrix identity(std::size_t n);
  static Matrix from_columns(std::span<const Vector> columns, std::size_t rows);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  CyclotomicNumber& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const CyclotomicNumber& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Vector column(std::size_t c) const;
  Vector operator*(const Vector& v) const;
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a, const Matrix& b);
  friend bool operator==(const Matrix& a, const Matrix& b);

  Matrix scaled(const CyclotomicNumber& s) const;
  Matrix transposed() const;
  /// Entrywise field conjugation.
  Matrix conjugated() const;
  bool is_identity() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<CyclotomicNumber> data_;
};

/// Reduced row echelon form; returns the pivot columns.
std::vector<std::size_t> row_reduce(Matrix& m);
std::size_t rank(Matrix m);
/// Basis of {x : m x = 0}.
std::vector<Vector> nullspace(const Matrix& m);
/// Some solution of m x = b, if one exists.
std::optional<Vector> solve(const Matrix& m, const Vector& b);
std::optional<Matrix> inverse(const Matrix& m);

/// Indices of a maximal linearly independent subset, scanning in order.
std::vector<std::size_t> independent_subset(std::span<const Vector> vectors);

Vector add(const Vector& a, const Vector& b);
Vector sub(const Vector& a, const Vector& b);
Vector scale(const CyclotomicNumber& s, const Vector& v);
Vector conj(const Vector& v);
bool is_zero(const Vector& v);

/// Incremental span membership over the base field: keeps an echelon basis.
class SpanTracker {
 public:
  explicit SpanTracker(std::size_t dim) : dim_(dim) {}
  /// Adds v if it is independent of the current span; returns true if added.
  bool insert(const Vector& v);
  bool contains(const Vector& v) const;
  std::size_t rank() const noexcept { return rows_.size(); }

 private:
  Vector reduce(Vector v) const;
  std::size_t dim_;
  std::vector<Vector> rows_;
  std::vector<std::size_t> pivots_;
};

}  // namespace kmforge
