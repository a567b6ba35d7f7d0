#pragma once

#include <array>
#include <string>
#include <vector>

#include "hnlie/matrix.hpp"
#include "hnlie/tensor.hpp"

namespace hnlie {

/// Almost hypercomplex structure (J1, J2, J3) with a metric g that is
/// Hermitian for J1 and Norden for J2, J3. J matrices act on coordinate
/// columns: J e_c = sum_r J(r, c) e_r.
struct HNStructure {
  std::array<Matrix, 3> J;
  Matrix g;
  std::array<int, 3> eps{1, -1, -1};
  /// g_alpha(x, y) = g(J_alpha x, y), i.e. the matrix J^T g.
  std::array<Matrix, 3> g_assoc;

  /// Recomputes g_assoc from J and g.
  void refresh();

  const Matrix& j(int alpha) const { return J[static_cast<std::size_t>(alpha - 1)]; }
  int epsilon(int alpha) const { return eps[static_cast<std::size_t>(alpha - 1)]; }

  Scalar metric(const Vector& x, const Vector& y) const;
  /// J_alpha applied to a coordinate vector.
  Vector apply(int alpha, const Vector& x) const { return j(alpha) * x; }
};

/// J1: e1->e2, e2->-e1, e3->-e4, e4->e3; J2: e1->e3, e2->e4, e3->-e1,
/// e4->-e2; J3 = J1 J2; g = diag(1, 1, -1, -1).
HNStructure standard_h();

/// One line per violated identity; empty when all hold.
std::vector<std::string> check_structure(const HNStructure& h);

/// Throws Error(SingularMetric).
Matrix metric_inverse(const HNStructure& h);

}  // namespace hnlie
