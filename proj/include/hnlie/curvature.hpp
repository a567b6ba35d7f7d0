#pragma once

#include <array>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "hnlie/connection.hpp"

namespace hnlie {

struct RiemannTensors {
  Tensor4 R13;  // R13(i,j,k,l): coefficient of e_l in R(e_i,e_j)e_k
  Tensor4 R04;  // R04(i,j,k,l) = g(R(e_i,e_j)e_k, e_l)
};

/// R(x,y)z = nabla_x nabla_y z - nabla_y nabla_x z - nabla_[x,y] z.
/// Throws SymmetryViolation if the lowered tensor fails check_riemann.
RiemannTensors riemann(const Connection& conn, const LieAlgebra& algebra, const HNStructure& h);

/// Antisymmetry in each pair, pair symmetry and the first Bianchi identity.
std::vector<std::string> check_riemann(const Tensor4& R04);

struct RicciData {
  Matrix rho;                       // rho(e_y, e_z), 0-based
  std::array<Matrix, 3> rho_star;
  Scalar tau;
  std::array<Scalar, 3> tau_star;
  std::array<Scalar, 3> tau_star_star;
};

/// Throws SymmetryViolation if rho-symmetries or the two routes to tau disagree.
RicciData ricci_and_scalars(const Tensor4& R04, const HNStructure& h);

enum class PlaneType { Holomorphic, TotallyReal, Other };
std::string to_string(PlaneType t);

using Plane = std::pair<int, int>;  // 1 <= i < j <= 4

/// Type of span{e_i, e_j} with respect to J_alpha.
PlaneType plane_type(const HNStructure& h, int alpha, int i, int j);

struct SectionalData {
  std::map<Plane, Scalar> k;
  std::map<Plane, std::array<PlaneType, 3>> type;
};

/// Throws DegeneratePlane when g restricted to a basic plane is degenerate.
SectionalData sectional(const Tensor4& R04, const HNStructure& h);

struct CurvatureReport {
  RiemannTensors riemann;
  RicciData ricci;
  SectionalData sectional;
};

CurvatureReport curvature(const LieAlgebra& algebra, const HNStructure& h);

/// All basic planes in order (1,2) (1,3) (1,4) (2,3) (2,4) (3,4).
const std::vector<Plane>& basic_planes();

}  // namespace hnlie
