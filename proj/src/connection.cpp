#include "hnlie/connection.hpp"

#include "hnlie/error.hpp"

namespace hnlie {

namespace {

std::string triple(const char* what, int i, int j, int k) {
  return std::string(what) + " at (" + std::to_string(i) + "," + std::to_string(j) + "," + std::to_string(k) + ")";
}

}  // namespace

Vector Connection::nabla(int i, const Vector& y) const {
  Vector out(kDim);
  for (int j = 1; j <= kDim; ++j) {
    if (y[j - 1].is_zero()) continue;
    for (int k = 1; k <= kDim; ++k)
      if (!gamma(i, j, k).is_zero()) out[k - 1] += y[j - 1] * gamma(i, j, k);
  }
  return out;
}

Vector Connection::nabla(const Vector& x, const Vector& y) const {
  Vector out(kDim);
  for (int i = 1; i <= kDim; ++i) {
    if (x[i - 1].is_zero()) continue;
    const Vector part = nabla(i, y);
    for (int k = 0; k < kDim; ++k) out[k] += x[i - 1] * part[k];
  }
  return out;
}

Connection koszul_connection(const LieAlgebra& algebra, const HNStructure& h) {
  const Matrix ginv = metric_inverse(h);
  auto gb = [&](int a, int b, int c) {  // g([e_a, e_b], e_c)
    return h.metric(algebra.bracket(a, b), basis_vector(c));
  };
  Connection conn;
  const Scalar half(1, 2);
  for (int i = 1; i <= kDim; ++i)
    for (int j = 1; j <= kDim; ++j) {
      Vector lowered(kDim);  // g(nabla_i e_j, e_k)
      for (int k = 1; k <= kDim; ++k) lowered[k - 1] = half * (gb(i, j, k) + gb(k, i, j) + gb(k, j, i));
      const Vector raised = ginv * lowered;
      for (int k = 1; k <= kDim; ++k) conn.gamma(i, j, k) = raised[k - 1];
    }
  return conn;
}

std::vector<std::string> check_connection(const Connection& conn, const LieAlgebra& algebra,
                                          const HNStructure& h) {
  std::vector<std::string> issues;
  const auto& c = algebra.c();
  for (int i = 1; i <= kDim; ++i)
    for (int j = 1; j <= kDim; ++j)
      for (int k = 1; k <= kDim; ++k)
        if (conn.gamma(i, j, k) - conn.gamma(j, i, k) != c(i, j, k)) issues.push_back(triple("torsion", i, j, k));

  for (int i = 1; i <= kDim; ++i)
    for (int j = 1; j <= kDim; ++j)
      for (int k = 1; k <= kDim; ++k) {
        const Scalar s = h.metric(conn.nabla(i, basis_vector(j)), basis_vector(k)) +
                         h.metric(basis_vector(j), conn.nabla(i, basis_vector(k)));
        if (!s.is_zero()) issues.push_back(triple("metricity", i, j, k));
      }
  return issues;
}

Vector lee_form(const Tensor3& F, const Matrix& g_inverse) {
  Vector theta(kDim);
  for (int k = 1; k <= kDim; ++k)
    for (int i = 1; i <= kDim; ++i)
      for (int j = 1; j <= kDim; ++j) {
        const Scalar& gij = g_inverse(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(j - 1));
        if (!gij.is_zero() && !F(i, j, k).is_zero()) theta[k - 1] += gij * F(i, j, k);
      }
  return theta;
}

FundamentalTensors fundamental_tensors(const Connection& conn, const HNStructure& h) {
  FundamentalTensors ft;
  const Matrix ginv = metric_inverse(h);
  for (int a = 1; a <= 3; ++a) {
    Tensor3& F = ft.F[static_cast<std::size_t>(a - 1)];
    for (int i = 1; i <= kDim; ++i)
      for (int j = 1; j <= kDim; ++j) {
        const Vector ej = basis_vector(j);
        const Vector lhs = conn.nabla(i, h.apply(a, ej));
        const Vector rhs = h.apply(a, conn.nabla(i, ej));
        Vector diff(kDim);
        for (int m = 0; m < kDim; ++m) diff[m] = lhs[m] - rhs[m];
        for (int k = 1; k <= kDim; ++k) F(i, j, k) = h.metric(diff, basis_vector(k));
      }
    ft.theta[static_cast<std::size_t>(a - 1)] = lee_form(F, ginv);
  }
  return ft;
}

std::array<Tensor3, 3> fundamental_tensors_from_metrics(const Connection& conn, const HNStructure& h) {
  std::array<Tensor3, 3> out;
  for (int a = 1; a <= 3; ++a) {
    const Matrix& ga = h.g_assoc[static_cast<std::size_t>(a - 1)];
    auto form = [&](const Vector& x, const Vector& y) {
      const Vector gy = ga * y;
      Scalar s;
      for (int m = 0; m < kDim; ++m) s += x[m] * gy[m];
      return s;
    };
    for (int i = 1; i <= kDim; ++i)
      for (int j = 1; j <= kDim; ++j)
        for (int k = 1; k <= kDim; ++k) {
          const Vector ej = basis_vector(j);
          const Vector ek = basis_vector(k);
          out[static_cast<std::size_t>(a - 1)](i, j, k) = -form(conn.nabla(i, ej), ek) - form(ej, conn.nabla(i, ek));
        }
  }
  return out;
}

Tensor3 twist(const Tensor3& T, const Matrix& J, int slot) {
  Tensor3 out;
  for (int x = 1; x <= kDim; ++x)
    for (int y = 1; y <= kDim; ++y)
      for (int z = 1; z <= kDim; ++z) {
        Scalar s;
        const int moved = slot == 2 ? y : z;
        for (int p = 1; p <= kDim; ++p) {
          const Scalar& jp = J(static_cast<std::size_t>(p - 1), static_cast<std::size_t>(moved - 1));
          if (jp.is_zero()) continue;
          s += jp * (slot == 2 ? T(x, p, z) : T(x, y, p));
        }
        out(x, y, z) = s;
      }
  return out;
}

std::vector<std::string> verify_f_identities(const FundamentalTensors& ft, const HNStructure& h) {
  std::vector<std::string> issues;
  for (int a = 1; a <= 3; ++a) {
    const Tensor3& F = ft.f(a);
    const Scalar e(h.epsilon(a));
    const Tensor3 jj = twist(twist(F, h.j(a), 2), h.j(a), 3);
    for (int x = 1; x <= kDim; ++x)
      for (int y = 1; y <= kDim; ++y)
        for (int z = 1; z <= kDim; ++z) {
          if (F(x, y, z) != -e * F(x, z, y))
            issues.push_back("F" + std::to_string(a) + " " + triple("swap symmetry", x, y, z));
          if (F(x, y, z) != -e * jj(x, y, z))
            issues.push_back("F" + std::to_string(a) + " " + triple("J-symmetry", x, y, z));
        }
  }
  const Tensor3 r1 = twist(ft.f(2), h.j(3), 2) + twist(ft.f(3), h.j(2), 3);
  const Tensor3 r2 = twist(ft.f(3), h.j(1), 2) + twist(ft.f(1), h.j(3), 3);
  const Tensor3 r3 = twist(ft.f(1), h.j(2), 2) - twist(ft.f(2), h.j(1), 3);
  const std::array<const Tensor3*, 3> rel{&r1, &r2, &r3};
  for (int a = 1; a <= 3; ++a)
    for (std::size_t p = 0; p < Tensor3::kSize; ++p)
      if (ft.f(a).flat()[p] != rel[static_cast<std::size_t>(a - 1)]->flat()[p]) {
        const auto idx = Tensor3::index_of(p);
        issues.push_back("F" + std::to_string(a) + " relation " + triple("", idx[0], idx[1], idx[2]));
      }
  return issues;
}

}  // namespace hnlie
