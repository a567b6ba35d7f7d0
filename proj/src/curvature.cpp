#include "hnlie/curvature.hpp"

#include "hnlie/error.hpp"

namespace hnlie {

namespace {

std::string quad(const char* what, int i, int j, int k, int l) {
  return std::string(what) + " at (" + std::to_string(i) + "," + std::to_string(j) + "," + std::to_string(k) + "," +
         std::to_string(l) + ")";
}

const Scalar& entry(const Matrix& m, int r, int c) {
  return m(static_cast<std::size_t>(r - 1), static_cast<std::size_t>(c - 1));
}

}  // namespace

const std::vector<Plane>& basic_planes() {
  static const std::vector<Plane> planes{{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}};
  return planes;
}

std::string to_string(PlaneType t) {
  switch (t) {
    case PlaneType::Holomorphic: return "holomorphic";
    case PlaneType::TotallyReal: return "totally-real";
    case PlaneType::Other: return "other";
  }
  return "other";
}

std::vector<std::string> check_riemann(const Tensor4& R) {
  std::vector<std::string> issues;
  for (int i = 1; i <= kDim; ++i)
    for (int j = 1; j <= kDim; ++j)
      for (int k = 1; k <= kDim; ++k)
        for (int l = 1; l <= kDim; ++l) {
          const Scalar& r = R(i, j, k, l);
          if (r != -R(j, i, k, l)) issues.push_back(quad("R(x,y,z,w) != -R(y,x,z,w)", i, j, k, l));
          if (r != -R(i, j, l, k)) issues.push_back(quad("R(x,y,z,w) != -R(x,y,w,z)", i, j, k, l));
          if (r != R(k, l, i, j)) issues.push_back(quad("R(x,y,z,w) != R(z,w,x,y)", i, j, k, l));
          if (!(r + R(j, k, i, l) + R(k, i, j, l)).is_zero()) issues.push_back(quad("first Bianchi", i, j, k, l));
        }
  return issues;
}

RiemannTensors riemann(const Connection& conn, const LieAlgebra& algebra, const HNStructure& h) {
  RiemannTensors out;
  const auto& G = conn.gamma;
  for (int i = 1; i <= kDim; ++i)
    for (int j = 1; j <= kDim; ++j)
      for (int k = 1; k <= kDim; ++k)
        for (int l = 1; l <= kDim; ++l) {
          Scalar s;
          for (int m = 1; m <= kDim; ++m) {
            if (!G(j, k, m).is_zero() && !G(i, m, l).is_zero()) s += G(j, k, m) * G(i, m, l);
            if (!G(i, k, m).is_zero() && !G(j, m, l).is_zero()) s -= G(i, k, m) * G(j, m, l);
            const Scalar& c = algebra.c()(i, j, m);
            if (!c.is_zero() && !G(m, k, l).is_zero()) s -= c * G(m, k, l);
          }
          out.R13(i, j, k, l) = s;
        }
  for (int i = 1; i <= kDim; ++i)
    for (int j = 1; j <= kDim; ++j)
      for (int k = 1; k <= kDim; ++k)
        for (int l = 1; l <= kDim; ++l) {
          Scalar s;
          for (int m = 1; m <= kDim; ++m)
            if (!out.R13(i, j, k, m).is_zero()) s += out.R13(i, j, k, m) * entry(h.g, m, l);
          out.R04(i, j, k, l) = s;
        }
  const auto issues = check_riemann(out.R04);
  if (!issues.empty()) throw Error(ErrorCode::SymmetryViolation, issues.front());
  return out;
}

RicciData ricci_and_scalars(const Tensor4& R, const HNStructure& h) {
  const Matrix gi = metric_inverse(h);
  RicciData out;
  out.rho = Matrix(kDim, kDim);
  for (int y = 1; y <= kDim; ++y)
    for (int z = 1; z <= kDim; ++z) {
      Scalar s;
      for (int i = 1; i <= kDim; ++i)
        for (int j = 1; j <= kDim; ++j)
          if (!entry(gi, i, j).is_zero()) s += entry(gi, i, j) * R(i, y, z, j);
      out.rho(static_cast<std::size_t>(y - 1), static_cast<std::size_t>(z - 1)) = s;
    }

  for (int a = 1; a <= 3; ++a) {
    const Matrix& J = h.j(a);
    Matrix rs(kDim, kDim);
    for (int y = 1; y <= kDim; ++y)
      for (int z = 1; z <= kDim; ++z) {
        Scalar s;
        for (int i = 1; i <= kDim; ++i)
          for (int j = 1; j <= kDim; ++j) {
            if (entry(gi, i, j).is_zero()) continue;
            for (int p = 1; p <= kDim; ++p)  // J e_j = sum_p J(p, j) e_p
              if (!entry(J, p, j).is_zero()) s += entry(gi, i, j) * entry(J, p, j) * R(i, y, z, p);
          }
        rs(static_cast<std::size_t>(y - 1), static_cast<std::size_t>(z - 1)) = s;
      }
    out.rho_star[static_cast<std::size_t>(a - 1)] = rs;
  }

  auto trace = [&](const Matrix& m) {
    Scalar s;
    for (int i = 1; i <= kDim; ++i)
      for (int j = 1; j <= kDim; ++j)
        if (!entry(gi, i, j).is_zero()) s += entry(gi, i, j) * entry(m, i, j);
    return s;
  };
  out.tau = trace(out.rho);
  for (int a = 1; a <= 3; ++a) {
    const Matrix& rs = out.rho_star[static_cast<std::size_t>(a - 1)];
    out.tau_star[static_cast<std::size_t>(a - 1)] = trace(rs);
    // rho*(e_i, J e_j) as a matrix is rho* J
    out.tau_star_star[static_cast<std::size_t>(a - 1)] = trace(rs * h.j(a));
  }

  // Checks: symmetry pattern and tau by direct double contraction.
  if (out.rho != out.rho.transposed()) throw Error(ErrorCode::SymmetryViolation, "rho is not symmetric");
  for (int a = 1; a <= 3; ++a) {
    const Matrix& rs = out.rho_star[static_cast<std::size_t>(a - 1)];
    if (rs != Scalar(-h.epsilon(a)) * rs.transposed()) {
      throw Error(ErrorCode::SymmetryViolation, "rho*" + std::to_string(a) + " breaks (rho*)_jk = -eps (rho*)_kj");
    }
  }
  Scalar direct;
  for (int i = 1; i <= kDim; ++i)
    for (int j = 1; j <= kDim; ++j)
      for (int k = 1; k <= kDim; ++k)
        for (int l = 1; l <= kDim; ++l) {
          const Scalar w = entry(gi, i, j) * entry(gi, k, l);
          if (!w.is_zero()) direct += w * R(i, k, l, j);
        }
  if (direct != out.tau) throw Error(ErrorCode::SymmetryViolation, "scalar curvature routes disagree");
  return out;
}

PlaneType plane_type(const HNStructure& h, int alpha, int i, int j) {
  const Matrix& J = h.j(alpha);
  const Vector ji = J * basis_vector(i);
  const Vector jj = J * basis_vector(j);
  auto in_plane = [&](const Vector& v) {
    for (int m = 1; m <= kDim; ++m)
      if (m != i && m != j && !v[m - 1].is_zero()) return false;
    return true;
  };
  if (in_plane(ji) && in_plane(jj)) return PlaneType::Holomorphic;
  const Vector ei = basis_vector(i), ej = basis_vector(j);
  for (const Vector* u : {&ei, &ej})
    for (const Vector* v : {&ji, &jj})
      if (!h.metric(*u, *v).is_zero()) return PlaneType::Other;
  return PlaneType::TotallyReal;
}

SectionalData sectional(const Tensor4& R, const HNStructure& h) {
  SectionalData out;
  for (const auto& [i, j] : basic_planes()) {
    const Scalar den = entry(h.g, i, i) * entry(h.g, j, j) - entry(h.g, i, j) * entry(h.g, i, j);
    if (den.is_zero()) {
      throw Error(ErrorCode::DegeneratePlane,
                  "plane e" + std::to_string(i) + ",e" + std::to_string(j) + " is degenerate");
    }
    out.k[{i, j}] = R(i, j, j, i) / den;
    out.type[{i, j}] = {plane_type(h, 1, i, j), plane_type(h, 2, i, j), plane_type(h, 3, i, j)};
  }
  return out;
}

CurvatureReport curvature(const LieAlgebra& algebra, const HNStructure& h) {
  CurvatureReport out;
  const Connection conn = koszul_connection(algebra, h);
  out.riemann = riemann(conn, algebra, h);
  out.ricci = ricci_and_scalars(out.riemann.R04, h);
  out.sectional = sectional(out.riemann.R04, h);
  return out;
}

}  // namespace hnlie
