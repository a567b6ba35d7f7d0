#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hnlie/algebra.hpp"
#include "hnlie/connection.hpp"
#include "hnlie/curvature.hpp"
#include "hnlie/error.hpp"
#include "hnlie/regions.hpp"
#include "hnlie/structure.hpp"

using namespace hnlie;

namespace {

std::size_t z(int i) { return static_cast<std::size_t>(i - 1); }

// R(e_i,e_j) = [N_i, N_j] - sum_m c^m_ij N_m as endomorphisms, where N_i
// is the matrix of nabla_{e_i}; R04(i,j,k,l) = (g R(e_i,e_j))(l,k).
Tensor4 riemann_oracle(const LieAlgebra& L, const Connection& conn, const Matrix& g) {
  std::array<Matrix, 4> N;
  for (int i = 1; i <= 4; ++i) {
    N[z(i)] = Matrix(4, 4);
    for (int j = 1; j <= 4; ++j) {
      const Vector col = conn.nabla(i, basis_vector(j));
      for (std::size_t k = 0; k < 4; ++k) N[z(i)](k, z(j)) = col[k];
    }
  }
  Tensor4 R;
  for (int i = 1; i <= 4; ++i)
    for (int j = 1; j <= 4; ++j) {
      Matrix E = N[z(i)] * N[z(j)] - N[z(j)] * N[z(i)];
      for (int m = 1; m <= 4; ++m) E = E - L.c()(i, j, m) * N[z(m)];
      const Matrix gE = g * E;
      for (int k = 1; k <= 4; ++k)
        for (int l = 1; l <= 4; ++l) R(i, j, k, l) = gE(z(l), z(k));
    }
  return R;
}

CurvatureReport at(const std::string& fam, const Bindings& b = {}) { return curvature(builtin(fam, b), standard_h()); }

}  // namespace

TEST_CASE("g4_1 curvature") {
  const CurvatureReport c = at("g4_1");
  const Tensor4& R = c.riemann.R04;
  CHECK(R(1, 2, 1, 2) == Scalar(1, 4));
  CHECK(R(2, 4, 2, 4) == Scalar(1));
  CHECK(R(3, 4, 3, 4) == Scalar(3, 4));
  CHECK(c.ricci.rho(0, 0) == Scalar(-1, 2));
  CHECK(c.ricci.rho(1, 1) == Scalar(1));
  CHECK(c.ricci.tau == Scalar(0));
  CHECK(c.ricci.tau_star_star[0] == Scalar(-2));
  CHECK(c.ricci.tau_star_star[1] == Scalar(2));
  CHECK(c.sectional.k.at({1, 2}) == Scalar(-1, 4));
  CHECK(c.sectional.k.at({2, 4}) == Scalar(1));
  CHECK(c.sectional.k.at({3, 4}) == Scalar(-3, 4));
}

TEST_CASE("g4_12 curvature") {
  const CurvatureReport c = at("g4_12");
  CHECK(c.riemann.R04(1, 2, 1, 2) == Scalar(-1));
  CHECK(c.riemann.R04(1, 3, 1, 3) == Scalar(1));
  CHECK(c.ricci.tau == Scalar(6));
  for (int a = 0; a < 3; ++a) CHECK(c.ricci.tau_star_star[static_cast<std::size_t>(a)] == Scalar(2));
  for (auto p : {Plane{1, 2}, Plane{1, 3}, Plane{2, 3}}) CHECK(c.sectional.k.at(p) == Scalar(1));
  for (auto p : {Plane{1, 4}, Plane{2, 4}, Plane{3, 4}}) CHECK(c.sectional.k.at(p) == Scalar(0));
}

TEST_CASE("abelian curvature vanishes") {
  const CurvatureReport c = curvature(abelian(), standard_h());
  CHECK(c.riemann.R04.is_zero());
  CHECK(c.ricci.rho.is_zero());
  CHECK(c.ricci.tau.is_zero());
  for (const auto& [p, k] : c.sectional.k) CHECK(k.is_zero());
}

TEST_CASE("plane types") {
  const HNStructure h = standard_h();
  CHECK(plane_type(h, 3, 1, 4) == PlaneType::Holomorphic);
  CHECK(plane_type(h, 1, 1, 2) == PlaneType::Holomorphic);
  CHECK(plane_type(h, 1, 3, 4) == PlaneType::Holomorphic);
  CHECK(plane_type(h, 1, 1, 3) == PlaneType::TotallyReal);
  for (int a = 1; a <= 3; ++a) {
    int hol = 0, real = 0;
    for (const auto& [i, j] : basic_planes()) {
      const PlaneType t = plane_type(h, a, i, j);
      hol += t == PlaneType::Holomorphic;
      real += t == PlaneType::TotallyReal;
    }
    CHECK(hol == 2);
    CHECK(real == 4);
  }
  CHECK(to_string(PlaneType::TotallyReal) == "totally-real");
}

TEST_CASE("pipeline agrees with independent formulas at samples") {
  const HNStructure h = standard_h();
  const Matrix gi = metric_inverse(h);
  Rng rng(9);
  for (const auto& f : builtin_families()) {
    for (int s = 0; s < (f.spec.params.empty() ? 1 : 3); ++s) {
      const Bindings b = *sample(domain_region(f.id), rng);
      const LieAlgebra L = builtin(f.id, b);
      const Connection conn = koszul_connection(L, h);
      const CurvatureReport c = curvature(L, h);
      const Tensor4 R = riemann_oracle(L, conn, h.g);
      CHECK_MESSAGE(c.riemann.R04 == R, f.id << " " << describe(b));
      CHECK(check_riemann(R).empty());
      CHECK_FALSE(R.is_zero());

      // rho(y,z) = g^{ij} R(e_i,y,z,e_j), tau = g^{yz} rho(y,z)
      Scalar tau;
      for (int y = 1; y <= 4; ++y)
        for (int zz = 1; zz <= 4; ++zz) {
          Scalar rho;
          for (int i = 1; i <= 4; ++i) rho += gi(z(i), z(i)) * R(i, y, zz, i);
          CHECK(c.ricci.rho(z(y), z(zz)) == rho);
          if (y == zz) tau += gi(z(y), z(y)) * rho;
        }
      CHECK(c.ricci.tau == tau);

      // rho*_a(y,z) = g^{ij} R(e_i,y,z,J_a e_j); the standard J maps e_j to +-e_r.
      for (int a = 1; a <= 3; ++a) {
        Scalar tss;
        for (int y = 1; y <= 4; ++y)
          for (int zz = 1; zz <= 4; ++zz) {
            Scalar rs;
            for (int i = 1; i <= 4; ++i) {
              const Vector Je = h.apply(a, basis_vector(i));
              for (int l = 1; l <= 4; ++l) rs += gi(z(i), z(i)) * Je[z(l)] * R(i, y, zz, l);
            }
            CHECK(c.ricci.rho_star[z(a)](z(y), z(zz)) == rs);
          }
        // tau** = g^{ij} rho*(e_i, J e_j)
        for (int i = 1; i <= 4; ++i) {
          const Vector Je = h.apply(a, basis_vector(i));
          for (int l = 1; l <= 4; ++l) tss += gi(z(i), z(i)) * Je[z(l)] * c.ricci.rho_star[z(a)](z(i), z(l));
        }
        CHECK(c.ricci.tau_star_star[z(a)] == tss);
      }
      CHECK(c.ricci.tau_star[0].is_zero());
      CHECK(c.ricci.tau_star[1].is_zero());

      for (const auto& [i, j] : basic_planes())
        CHECK(c.sectional.k.at({i, j}) == R(i, j, j, i) / (h.g(z(i), z(i)) * h.g(z(j), z(j))));
    }
  }
}

TEST_CASE("guards") {
  Tensor4 bad;
  bad(1, 2, 1, 2) = 1;  // missing its antisymmetric partners
  CHECK_FALSE(check_riemann(bad).empty());

  HNStructure h = standard_h();
  h.g(0, 0) = 0;
  h.g(0, 1) = 1;
  h.g(1, 0) = 1;
  h.g(1, 1) = 0;
  h.refresh();
  try {
    sectional(Tensor4{}, h);
    FAIL("expected a degenerate plane");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::DegeneratePlane);
  }
}
