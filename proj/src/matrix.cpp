#include "hnlie/matrix.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

#include "hnlie/error.hpp"

namespace hnlie {

namespace {

void require(bool ok, const char* what) {
  if (!ok) throw Error(ErrorCode::DimensionMismatch, what);
}

}  // namespace

Matrix::Matrix(std::size_t rows, std::size_t cols, std::vector<Scalar> data)
    : rows_(rows), cols_(cols), data_(std::move(data)) {
  require(data_.size() == rows * cols, "matrix data size does not match shape");
}

Matrix Matrix::identity(std::size_t n) {
  Matrix out(n, n);
  for (std::size_t i = 0; i < n; ++i) out(i, i) = 1;
  return out;
}

Matrix Matrix::diagonal(std::span<const Scalar> entries) {
  Matrix out(entries.size(), entries.size());
  for (std::size_t i = 0; i < entries.size(); ++i) out(i, i) = entries[i];
  return out;
}

Matrix Matrix::from_columns(std::span<const Vector> columns, std::size_t rows) {
  Matrix out(rows, columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) {
    require(columns[c].size() == rows, "column length mismatch");
    for (std::size_t r = 0; r < rows; ++r) out(r, c) = columns[c][r];
  }
  return out;
}

Vector Matrix::column(std::size_t c) const {
  Vector out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
  return out;
}

Vector Matrix::row(std::size_t r) const {
  return Vector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

Matrix Matrix::transposed() const {
  Matrix out(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) out(c, r) = (*this)(r, c);
  return out;
}

bool Matrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Scalar& x) { return x.is_zero(); });
}

Matrix operator*(const Matrix& x, const Matrix& y) {
  require(x.cols_ == y.rows_, "matrix product shape mismatch");
  Matrix out(x.rows_, y.cols_);
  for (std::size_t i = 0; i < x.rows_; ++i)
    for (std::size_t k = 0; k < x.cols_; ++k) {
      const Scalar& xik = x(i, k);
      if (xik.is_zero()) continue;
      for (std::size_t j = 0; j < y.cols_; ++j) {
        if (!y(k, j).is_zero()) out(i, j) += xik * y(k, j);
      }
    }
  return out;
}

Vector operator*(const Matrix& x, const Vector& v) {
  require(x.cols_ == v.size(), "matrix-vector shape mismatch");
  Vector out(x.rows_);
  for (std::size_t i = 0; i < x.rows_; ++i)
    for (std::size_t k = 0; k < x.cols_; ++k)
      if (!x(i, k).is_zero() && !v[k].is_zero()) out[i] += x(i, k) * v[k];
  return out;
}

Matrix operator+(const Matrix& x, const Matrix& y) {
  require(x.rows_ == y.rows_ && x.cols_ == y.cols_, "matrix sum shape mismatch");
  Matrix out = x;
  for (std::size_t i = 0; i < out.data_.size(); ++i) out.data_[i] += y.data_[i];
  return out;
}

Matrix operator-(const Matrix& x, const Matrix& y) { return x + (-y); }

Matrix operator*(const Scalar& s, const Matrix& x) {
  Matrix out = x;
  for (auto& e : out.data_) e *= s;
  return out;
}

Matrix Matrix::operator-() const {
  Matrix out = *this;
  for (auto& e : out.data_) e = -e;
  return out;
}

Matrix Matrix::stacked(const Matrix& below) const {
  if (rows_ == 0) return below;
  require(cols_ == below.cols_, "stacking matrices with different column counts");
  std::vector<Scalar> data = data_;
  data.insert(data.end(), below.data_.begin(), below.data_.end());
  return Matrix(rows_ + below.rows_, cols_, std::move(data));
}

Matrix Matrix::concatenated(const Matrix& right) const {
  if (cols_ == 0) return right;
  require(rows_ == right.rows_, "concatenating matrices with different row counts");
  Matrix out(rows_, cols_ + right.cols_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) out(r, c) = (*this)(r, c);
    for (std::size_t c = 0; c < right.cols_; ++c) out(r, cols_ + c) = right(r, c);
  }
  return out;
}

std::string Matrix::to_string() const {
  std::ostringstream os;
  for (std::size_t r = 0; r < rows_; ++r) {
    os << "[";
    for (std::size_t c = 0; c < cols_; ++c) os << (c ? ", " : "") << (*this)(r, c);
    os << "]\n";
  }
  return os.str();
}

RowEchelon row_reduce(Matrix a) {
  RowEchelon out;
  std::size_t pivot_row = 0;
  for (std::size_t col = 0; col < a.cols() && pivot_row < a.rows(); ++col) {
    std::size_t found = pivot_row;
    while (found < a.rows() && a(found, col).is_zero()) ++found;
    if (found == a.rows()) continue;
    if (found != pivot_row)
      for (std::size_t c = 0; c < a.cols(); ++c) std::swap(a(found, c), a(pivot_row, c));

    const Scalar inv = a(pivot_row, col).inverse();
    for (std::size_t c = col; c < a.cols(); ++c) a(pivot_row, c) *= inv;

    for (std::size_t r = 0; r < a.rows(); ++r) {
      if (r == pivot_row || a(r, col).is_zero()) continue;
      const Scalar factor = a(r, col);
      for (std::size_t c = col; c < a.cols(); ++c)
        if (!a(pivot_row, c).is_zero()) a(r, c) -= factor * a(pivot_row, c);
    }
    out.pivot_columns.push_back(col);
    ++pivot_row;
  }
  out.reduced = std::move(a);
  return out;
}

std::size_t rank(const Matrix& a) { return row_reduce(a).pivot_columns.size(); }

std::vector<Vector> kernel(const Matrix& a) {
  const RowEchelon e = row_reduce(a);
  std::vector<bool> is_pivot(a.cols(), false);
  for (auto c : e.pivot_columns) is_pivot[c] = true;

  std::vector<Vector> basis;
  for (std::size_t free = 0; free < a.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vector v(a.cols());
    v[free] = 1;
    for (std::size_t i = 0; i < e.pivot_columns.size(); ++i) v[e.pivot_columns[i]] = -e.reduced(i, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<Vector> try_solve(const Matrix& a, const Vector& b) {
  require(a.rows() == b.size(), "right-hand side length mismatch");
  Matrix augmented(a.rows(), a.cols() + 1);
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) augmented(r, c) = a(r, c);
    augmented(r, a.cols()) = b[r];
  }
  const RowEchelon e = row_reduce(std::move(augmented));
  if (!e.pivot_columns.empty() && e.pivot_columns.back() == a.cols()) return std::nullopt;

  Vector x(a.cols());
  for (std::size_t i = 0; i < e.pivot_columns.size(); ++i) x[e.pivot_columns[i]] = e.reduced(i, a.cols());
  return x;
}

Vector solve(const Matrix& a, const Vector& b) {
  auto x = try_solve(a, b);
  if (!x) throw Error(ErrorCode::InconsistentSystem, "linear system has no solution");
  return *std::move(x);
}

Matrix inverse(const Matrix& a) {
  require(a.rows() == a.cols(), "inverse of a non-square matrix");
  const std::size_t n = a.rows();
  const RowEchelon e = row_reduce(a.concatenated(Matrix::identity(n)));
  if (e.pivot_columns.size() < n || e.pivot_columns[n - 1] != n - 1) {
    throw Error(ErrorCode::SingularMetric, "matrix is singular");
  }
  Matrix out(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) out(r, c) = e.reduced(r, n + c);
  return out;
}

bool is_zero(const Vector& v) {
  return std::all_of(v.begin(), v.end(), [](const Scalar& x) { return x.is_zero(); });
}

}  // namespace hnlie
