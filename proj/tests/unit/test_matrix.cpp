#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdint>
#include <random>
#include <vector>

#include "hnlie/error.hpp"
#include "hnlie/matrix.hpp"

using namespace hnlie;

namespace {

// Rank over GF(p) for a large prime; equals the rational rank for small
// integer matrices except with negligible probability.
std::size_t rank_mod_p(const std::vector<std::vector<long>>& rows) {
  constexpr std::int64_t p = 1000000007;
  auto pw = [&](std::int64_t b, std::int64_t e) {
    std::int64_t r = 1;
    b %= p;
    while (e) {
      if (e & 1) r = r * b % p;
      b = b * b % p;
      e >>= 1;
    }
    return r;
  };
  std::vector<std::vector<std::int64_t>> a;
  for (const auto& r : rows) {
    a.emplace_back();
    for (long v : r) a.back().push_back(((v % p) + p) % p);
  }
  std::size_t rank = 0;
  const std::size_t cols = a.empty() ? 0 : a[0].size();
  for (std::size_t c = 0; c < cols && rank < a.size(); ++c) {
    std::size_t piv = rank;
    while (piv < a.size() && a[piv][c] == 0) ++piv;
    if (piv == a.size()) continue;
    std::swap(a[piv], a[rank]);
    const std::int64_t inv = pw(a[rank][c], p - 2);
    for (std::size_t r = 0; r < a.size(); ++r) {
      if (r == rank || a[r][c] == 0) continue;
      const std::int64_t f = a[r][c] * inv % p;
      for (std::size_t k = 0; k < cols; ++k) a[r][k] = ((a[r][k] - f * a[rank][k]) % p + p) % p;
    }
    ++rank;
  }
  return rank;
}

Matrix from_rows(const std::vector<std::vector<long>>& rows) {
  Matrix m(rows.size(), rows[0].size());
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < rows[r].size(); ++c) m(r, c) = rows[r][c];
  return m;
}

}  // namespace

TEST_CASE("solve against the neutral metric") {
  const std::vector<Scalar> d{1, 1, -1, -1};
  const Matrix g = Matrix::diagonal(d);
  CHECK(solve(g, {1, 0, 0, 2}) == Vector{1, 0, 0, -2});
  CHECK(inverse(g) == g);
}

TEST_CASE("rank and kernel against a modular oracle") {
  std::mt19937 rng(3);
  std::uniform_int_distribution<long> v(-3, 3);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t rows = 2 + static_cast<std::size_t>(trial % 5), cols = 3 + static_cast<std::size_t>(trial % 4);
    std::vector<std::vector<long>> data(rows, std::vector<long>(cols));
    for (auto& r : data)
      for (auto& x : r) x = v(rng);
    if (trial % 3 == 0) data.back() = data.front();  // force dependence
    const Matrix m = from_rows(data);
    const std::size_t r = rank(m);
    CHECK(r == rank_mod_p(data));
    const auto ker = kernel(m);
    CHECK(ker.size() == cols - r);
    for (const auto& k : ker) CHECK(is_zero(m * k));
  }
}

TEST_CASE("inverse and inconsistent systems") {
  const Matrix a = from_rows({{2, 1, 0}, {1, 3, 1}, {0, 1, 4}});
  CHECK(a * inverse(a) == Matrix::identity(3));
  const Matrix s = from_rows({{1, 2}, {2, 4}});
  CHECK_THROWS_AS(inverse(s), Error);
  CHECK_FALSE(try_solve(s, {1, 1}).has_value());
  CHECK(try_solve(s, {1, 2}).has_value());
  try {
    solve(s, {1, 1});
    FAIL("expected an inconsistent system");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::InconsistentSystem);
  }
}

TEST_CASE("quadratic entries") {
  const Scalar r2 = Scalar::sqrt(2);
  Matrix m(2, 2, {1, r2, r2, 2});
  CHECK(rank(m) == 1);
  Matrix n(2, 2, {1, r2, -r2, 2});
  CHECK(rank(n) == 2);
  CHECK(n * inverse(n) == Matrix::identity(2));
}

TEST_CASE("shape helpers") {
  const Matrix a = from_rows({{1, 2}, {3, 4}});
  CHECK(a.transposed()(0, 1) == Scalar(3));
  CHECK(a.stacked(a).rows() == 4);
  CHECK(a.concatenated(a).cols() == 4);
  CHECK((a - a).is_zero());
  CHECK(a.column(1) == Vector{2, 4});
}
