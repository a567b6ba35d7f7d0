#include "hnlie/structure.hpp"

#include "hnlie/error.hpp"

namespace hnlie {

namespace {

// images[c] = (sign, row) with J e_{c+1} = sign * e_row
Matrix from_images(const std::array<std::pair<int, int>, 4>& images) {
  Matrix m(kDim, kDim);
  for (std::size_t c = 0; c < images.size(); ++c) {
    m(static_cast<std::size_t>(images[c].second - 1), c) = images[c].first;
  }
  return m;
}

}  // namespace

void HNStructure::refresh() {
  for (std::size_t a = 0; a < 3; ++a) g_assoc[a] = J[a].transposed() * g;
}

Scalar HNStructure::metric(const Vector& x, const Vector& y) const {
  const Vector gy = g * y;
  Scalar s;
  for (std::size_t i = 0; i < x.size(); ++i)
    if (!x[i].is_zero() && !gy[i].is_zero()) s += x[i] * gy[i];
  return s;
}

HNStructure standard_h() {
  HNStructure h;
  h.J[0] = from_images({{{1, 2}, {-1, 1}, {-1, 4}, {1, 3}}});
  h.J[1] = from_images({{{1, 3}, {1, 4}, {-1, 1}, {-1, 2}}});
  h.J[2] = from_images({{{-1, 4}, {1, 3}, {-1, 2}, {1, 1}}});
  const std::array<Scalar, 4> diag{1, 1, -1, -1};
  h.g = Matrix::diagonal(diag);
  h.eps = {1, -1, -1};
  h.refresh();
  return h;
}

std::vector<std::string> check_structure(const HNStructure& h) {
  std::vector<std::string> issues;
  const Matrix id = Matrix::identity(kDim);
  for (int a = 1; a <= 3; ++a) {
    const Matrix& J = h.j(a);
    if (J.rows() != kDim || J.cols() != kDim) {
      issues.push_back("J" + std::to_string(a) + " is not 4x4");
      return issues;
    }
    if (J * J != -id) issues.push_back("J" + std::to_string(a) + "^2 != -I");
  }
  // J_a = J_b J_c = -J_c J_b for cyclic (a, b, c)
  const int cyc[3][3] = {{1, 2, 3}, {2, 3, 1}, {3, 1, 2}};
  for (const auto& t : cyc) {
    const Matrix bc = h.j(t[1]) * h.j(t[2]);
    const Matrix cb = h.j(t[2]) * h.j(t[1]);
    const std::string a = std::to_string(t[0]), b = std::to_string(t[1]), c = std::to_string(t[2]);
    if (h.j(t[0]) != bc) issues.push_back("J" + a + " != J" + b + " J" + c);
    if (h.j(t[0]) != -cb) issues.push_back("J" + a + " != -J" + c + " J" + b);
  }
  if (h.g != h.g.transposed()) issues.push_back("g is not symmetric");
  for (int a = 1; a <= 3; ++a) {
    const Matrix& J = h.j(a);
    const Matrix pulled = J.transposed() * h.g * J;
    if (h.g != Scalar(h.epsilon(a)) * pulled) {
      issues.push_back("g(J" + std::to_string(a) + "x, J" + std::to_string(a) + "y) != eps * g(x, y)");
    }
    const Matrix ga = J.transposed() * h.g;
    if (h.g_assoc[static_cast<std::size_t>(a - 1)] != ga) {
      issues.push_back("g" + std::to_string(a) + " is stale");
    }
    const Matrix expected = h.epsilon(a) == 1 ? -ga : ga;
    if (ga.transposed() != expected) {
      issues.push_back("g" + std::to_string(a) + (h.epsilon(a) == 1 ? " is not antisymmetric" : " is not symmetric"));
    }
  }
  return issues;
}

Matrix metric_inverse(const HNStructure& h) { return inverse(h.g); }

}  // namespace hnlie
