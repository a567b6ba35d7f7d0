#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <vector>

#include "hnlie/matrix.hpp"
#include "hnlie/scalar.hpp"

namespace hnlie {

inline constexpr int kDim = 4;

/// Dense component array T_{i1...iR} over the basis e_1..e_4. Accessors take
/// 1-based indices, matching the usual e_1..e_4 labelling.
template <int Rank>
class Tensor {
 public:
  static constexpr std::size_t kSize = [] {
    std::size_t n = 1;
    for (int r = 0; r < Rank; ++r) n *= kDim;
    return n;
  }();

  Tensor() : data_(kSize) {}

  template <typename... Index>
  Scalar& operator()(Index... idx) {
    static_assert(sizeof...(Index) == Rank);
    return data_[offset({static_cast<int>(idx)...})];
  }
  template <typename... Index>
  const Scalar& operator()(Index... idx) const {
    static_assert(sizeof...(Index) == Rank);
    return data_[offset({static_cast<int>(idx)...})];
  }

  Scalar& at(const std::array<int, Rank>& idx) { return data_[offset(idx)]; }
  const Scalar& at(const std::array<int, Rank>& idx) const { return data_[offset(idx)]; }

  /// Flat storage in lexicographic index order (last index fastest).
  const std::vector<Scalar>& flat() const { return data_; }
  std::vector<Scalar>& flat() { return data_; }

  static Tensor from_flat(std::vector<Scalar> values) {
    Tensor out;
    out.data_ = std::move(values);
    return out;
  }

  /// 1-based multi-index of a flat position.
  static std::array<int, Rank> index_of(std::size_t flat_pos) {
    std::array<int, Rank> idx{};
    for (int r = Rank - 1; r >= 0; --r) {
      idx[r] = static_cast<int>(flat_pos % kDim) + 1;
      flat_pos /= kDim;
    }
    return idx;
  }

  bool is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](const Scalar& x) { return x.is_zero(); });
  }

  Tensor& operator+=(const Tensor& rhs) {
    for (std::size_t i = 0; i < kSize; ++i) data_[i] += rhs.data_[i];
    return *this;
  }
  Tensor& operator-=(const Tensor& rhs) {
    for (std::size_t i = 0; i < kSize; ++i) data_[i] -= rhs.data_[i];
    return *this;
  }
  friend Tensor operator+(Tensor x, const Tensor& y) { return x += y; }
  friend Tensor operator-(Tensor x, const Tensor& y) { return x -= y; }
  friend Tensor operator*(const Scalar& s, Tensor x) {
    for (auto& e : x.data_) e *= s;
    return x;
  }

  friend bool operator==(const Tensor& x, const Tensor& y) { return x.data_ == y.data_; }
  friend bool operator!=(const Tensor& x, const Tensor& y) { return !(x == y); }

 private:
  static std::size_t offset(const std::array<int, Rank>& idx) {
    std::size_t pos = 0;
    for (int r = 0; r < Rank; ++r) pos = pos * kDim + static_cast<std::size_t>(idx[r] - 1);
    return pos;
  }

  std::vector<Scalar> data_;
};

using Tensor1 = Tensor<1>;
using Tensor2 = Tensor<2>;
using Tensor3 = Tensor<3>;
using Tensor4 = Tensor<4>;

/// Column vector of basis e_i (1-based).
inline Vector basis_vector(int i) {
  Vector v(kDim);
  v[static_cast<std::size_t>(i - 1)] = 1;
  return v;
}

}  // namespace hnlie
