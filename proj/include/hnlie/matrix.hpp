#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hnlie/scalar.hpp"

namespace hnlie {

using Vector = std::vector<Scalar>;

/// Dense row-major matrix of exact scalars. Indices are 0-based here; the
/// geometry layer translates from the 1-based basis e_1..e_4.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  Matrix(std::size_t rows, std::size_t cols, std::vector<Scalar> data);

  static Matrix identity(std::size_t n);
  static Matrix diagonal(std::span<const Scalar> entries);
  /// Matrix whose columns are the given vectors (all of equal length).
  static Matrix from_columns(std::span<const Vector> columns, std::size_t rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Vector column(std::size_t c) const;
  Vector row(std::size_t r) const;

  Matrix transposed() const;
  bool is_zero() const;

  friend Matrix operator*(const Matrix& x, const Matrix& y);
  friend Vector operator*(const Matrix& x, const Vector& v);
  friend Matrix operator+(const Matrix& x, const Matrix& y);
  friend Matrix operator-(const Matrix& x, const Matrix& y);
  friend Matrix operator*(const Scalar& s, const Matrix& x);
  Matrix operator-() const;

  friend bool operator==(const Matrix& x, const Matrix& y) {
    return x.rows_ == y.rows_ && x.cols_ == y.cols_ && x.data_ == y.data_;
  }
  friend bool operator!=(const Matrix& x, const Matrix& y) { return !(x == y); }

  /// Stacks rows of `below` under this matrix (column counts must match).
  Matrix stacked(const Matrix& below) const;
  /// Appends the columns of `right` (row counts must match).
  Matrix concatenated(const Matrix& right) const;

  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

/// Reduced row echelon form by exact Gauss-Jordan elimination.
struct RowEchelon {
  Matrix reduced;
  std::vector<std::size_t> pivot_columns;
};

RowEchelon row_reduce(Matrix a);

std::size_t rank(const Matrix& a);

/// Basis of {v : A v = 0}; empty when A has full column rank.
std::vector<Vector> kernel(const Matrix& a);

/// One solution of A x = b; throws Error(InconsistentSystem) if none exists.
Vector solve(const Matrix& a, const Vector& b);

/// Like solve but returns nullopt for inconsistent systems.
std::optional<Vector> try_solve(const Matrix& a, const Vector& b);

/// Throws Error(SingularMetric) for singular input.
Matrix inverse(const Matrix& a);

bool is_zero(const Vector& v);

}  // namespace hnlie
