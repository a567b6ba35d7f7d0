#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdint>

#include "hnlie/algebra.hpp"
#include "hnlie/classifier.hpp"
#include "hnlie/connection.hpp"
#include "hnlie/error.hpp"
#include "hnlie/structure.hpp"

using namespace hnlie;

namespace {

// Rank over GF(p); the constraint matrices have small integer entries.
std::size_t rank_mod_p(const Matrix& m) {
  constexpr std::int64_t p = 1000000007;
  std::vector<std::vector<std::int64_t>> a(m.rows(), std::vector<std::int64_t>(m.cols()));
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) {
      const Scalar& x = m(r, c);
      REQUIRE(x.is_rational());
      REQUIRE(x.rational_part().get_den() == 1);
      a[r][c] = ((x.rational_part().get_num().get_si() % p) + p) % p;
    }
  auto inv = [&](std::int64_t b) {
    std::int64_t r = 1, e = p - 2;
    while (e) {
      if (e & 1) r = r * b % p;
      b = b * b % p;
      e >>= 1;
    }
    return r;
  };
  std::size_t rank = 0;
  for (std::size_t c = 0; c < m.cols() && rank < a.size(); ++c) {
    std::size_t piv = rank;
    while (piv < a.size() && a[piv][c] == 0) ++piv;
    if (piv == a.size()) continue;
    std::swap(a[piv], a[rank]);
    const std::int64_t iv = inv(a[rank][c]);
    for (std::size_t r = 0; r < a.size(); ++r) {
      if (r == rank || a[r][c] == 0) continue;
      const std::int64_t f = a[r][c] * iv % p;
      for (std::size_t k = 0; k < m.cols(); ++k) a[r][k] = ((a[r][k] - f * a[rank][k]) % p + p) % p;
    }
    ++rank;
  }
  return rank;
}

std::array<std::string, 3> labels(const std::string& fam, const Bindings& b = {}) {
  const auto l = classify(builtin(fam, b), standard_h());
  return {l[0].label(), l[1].label(), l[2].label()};
}

using Labels = std::array<std::string, 3>;

}  // namespace

TEST_CASE("admissible dimensions") {
  const AdmissibleSpace& s1 = admissible_space(1);
  CHECK(s1.basis.size() == 8);
  REQUIRE(s1.classes.size() == 2);
  CHECK(s1.find("W2")->basis.size() == 4);
  CHECK(s1.find("W4")->basis.size() == 4);
  CHECK(s1.notes.empty());
  for (int a : {2, 3}) {
    const AdmissibleSpace& s = admissible_space(a);
    CHECK(s.basis.size() == 16);
    CHECK(s.find("W1")->basis.size() == 4);
    CHECK(s.find("W2")->basis.size() == 8);
    CHECK(s.find("W3")->basis.size() == 4);
    CHECK(s.notes.empty());
    CHECK(s.find("W4") == nullptr);
  }
}

TEST_CASE("constraint ranks agree with a modular oracle") {
  for (int a = 1; a <= 3; ++a) {
    const AdmissibleSpace& s = admissible_space(a);
    const std::size_t r = rank(s.constraints);
    CHECK(r == rank_mod_p(s.constraints));
    CHECK(64 - r == s.basis.size());
    CHECK(rank(s.combined) == s.basis.size());
  }
}

TEST_CASE("Lee-family tensors reproduce their Lee form and decompose to themselves") {
  const HNStructure h = standard_h();
  const Matrix gi = metric_inverse(h);
  const Vector theta{1, Scalar(-2), Scalar(1, 3), 5};
  for (int a = 1; a <= 3; ++a) {
    const Tensor3 F = lee_family_tensor(a, h, theta);
    CHECK(lee_form(F, gi) == theta);
    const auto parts = decompose(F, admissible_space(a));
    const std::string own = a == 1 ? "W4" : "W1";
    for (const auto& [name, t] : parts) CHECK(t == (name == own ? F : Tensor3{}));
    CHECK(label_of(F, a, h).label() == (a == 1 ? "W4" : "W1"));
  }
}

TEST_CASE("zero and non-admissible tensors") {
  const HNStructure h = standard_h();
  for (int a = 1; a <= 3; ++a) CHECK(label_of(Tensor3{}, a, h).label() == "W0");
  Tensor3 bad;
  bad(1, 1, 2) = 1;
  try {
    decompose(bad, admissible_space(2));
    FAIL("expected NotAdmissible");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotAdmissible);
  }
}

TEST_CASE("class parts sum back and keep their class") {
  const HNStructure h = standard_h();
  for (const auto& f : builtin_families()) {
    if (!f.spec.params.empty()) continue;
    const FundamentalTensors ft = fundamental_tensors(koszul_connection(builtin(f.id), h), h);
    for (int a = 1; a <= 3; ++a) {
      const auto parts = decompose(ft.f(a), admissible_space(a));
      Tensor3 sum;
      for (const auto& [name, t] : parts) {
        sum += t;
        if (!t.is_zero()) CHECK(label_of(t, a, h).label() == name);
      }
      CHECK(sum == ft.f(a));
    }
  }
}

TEST_CASE("labels") {
  const auto l = ClassLabel::parse(2, "W31");
  CHECK(l.label() == "W13");
  CHECK(l.contained_in(ClassLabel::parse(2, "W123")));
  CHECK_FALSE(ClassLabel::parse(2, "W12").contained_in(ClassLabel::parse(2, "W13")));
  CHECK(ClassLabel::parse(1, "W0").contained_in(ClassLabel::parse(1, "W2")));
  CHECK_THROWS_AS(ClassLabel::parse(1, "W1"), Error);
  CHECK_THROWS_AS(ClassLabel::parse(2, "W4"), Error);
  CHECK_THROWS_AS(ClassLabel::parse(2, "W11"), Error);
  CHECK_THROWS_AS(ClassLabel::parse(2, "X1"), Error);
}

TEST_CASE("classification examples") {
  CHECK(labels("g4_1") == Labels{"W24", "W123", "W123"});
  CHECK(labels("g4_2", {{"m", 1L}}) == Labels{"W4", "W123", "W123"});
  CHECK(labels("g4_5", {{"a1", 1L}, {"a2", -3L}}) == Labels{"W4", "W23", "W23"});
  CHECK(labels("g4_9", {{"p", 1L}}) == Labels{"W4", "W12", "W12"});
  CHECK(labels("g4_6", {{"b1", 1L}, {"b2", 2L}})[2] == "W12");
  CHECK(labels("g4_5", {{"a1", -4L}, {"a2", 2L}})[2] == "W23");
  CHECK(labels("g4_7") == Labels{"W4", "W123", "W123"});
  CHECK(labels("g4_12") == Labels{"W4", "W123", "W123"});
  // The J2 part of g4_8 has no W3 component.
  CHECK(labels("g4_8") == Labels{"W24", "W12", "W3"});
  CHECK(labels("g4_10") == Labels{"W24", "W123", "W12"});
  CHECK(labels("g4_5", {{"a1", 1L}, {"a2", 1L}}) == Labels{"W4", "W1", "W1"});
}

TEST_CASE("non-standard structure builds its own space") {
  HNStructure h = standard_h();
  h.J[0] = -h.J[0];
  h.J[1] = -h.J[1];  // J1 = J2 J3 still holds
  h.refresh();
  REQUIRE(check_structure(h).empty());
  const FundamentalTensors ft = fundamental_tensors(koszul_connection(builtin("g4_1"), h), h);
  const auto l = classify(ft, h);
  CHECK(l[0].label() == "W24");
}
