#pragma once

#include <array>
#include <string>
#include <vector>

#include "hnlie/algebra.hpp"
#include "hnlie/structure.hpp"

namespace hnlie {

/// Levi-Civita connection of a left-invariant metric:
/// nabla_{e_i} e_j = sum_k gamma(i, j, k) e_k.
struct Connection {
  Tensor3 gamma;

  /// nabla_x y for left-invariant fields given by coordinates.
  Vector nabla(const Vector& x, const Vector& y) const;
  Vector nabla(int i, const Vector& y) const;
};

/// 2 g(nabla_{e_i} e_j, e_k) = g([e_i,e_j],e_k) + g([e_k,e_i],e_j) + g([e_k,e_j],e_i),
/// solved with the inverse metric.
Connection koszul_connection(const LieAlgebra& algebra, const HNStructure& h);

/// Torsion-freeness and metricity violations, one line each.
std::vector<std::string> check_connection(const Connection& conn, const LieAlgebra& algebra,
                                          const HNStructure& h);

struct FundamentalTensors {
  std::array<Tensor3, 3> F;   // F[a](i,j,k) = F_{a+1}(e_i, e_j, e_k)
  std::array<Vector, 3> theta;  // theta[a][k-1] = theta_{a+1}(e_k)

  const Tensor3& f(int alpha) const { return F[static_cast<std::size_t>(alpha - 1)]; }
  const Vector& lee(int alpha) const { return theta[static_cast<std::size_t>(alpha - 1)]; }
};

/// F_a(x,y,z) = g(nabla_x(J_a y) - J_a nabla_x y, z); theta_a(z) = g^{ij} F_a(e_i,e_j,z).
FundamentalTensors fundamental_tensors(const Connection& conn, const HNStructure& h);

/// Same tensors through (nabla_x g_a)(y,z) = -g_a(nabla_x y, z) - g_a(y, nabla_x z).
std::array<Tensor3, 3> fundamental_tensors_from_metrics(const Connection& conn, const HNStructure& h);

/// Lee forms of arbitrary tensors.
Vector lee_form(const Tensor3& F, const Matrix& g_inverse);

/// Checks F_a(x,y,z) = -eps_a F_a(x,z,y) = -eps_a F_a(x,J_a y,J_a z) and
///   F1(x,y,z) = F2(x,J3y,z) + F3(x,y,J2z)
///   F2(x,y,z) = F3(x,J1y,z) + F1(x,y,J3z)
///   F3(x,y,z) = F1(x,J2y,z) - F2(x,y,J1z)
/// on all basis triples.
std::vector<std::string> verify_f_identities(const FundamentalTensors& ft, const HNStructure& h);

/// T(x, y, z) with the second (slot = 2) or third (slot = 3) argument
/// replaced by J_a applied to it.
Tensor3 twist(const Tensor3& T, const Matrix& J, int slot);

}  // namespace hnlie
