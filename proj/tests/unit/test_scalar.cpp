#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>
#include <vector>

#include "hnlie/error.hpp"
#include "hnlie/expression.hpp"
#include "hnlie/scalar.hpp"

using namespace hnlie;

namespace {

long double approx(const Scalar& x) {
  return x.rational_part().get_d() +
         x.irrational_part().get_d() * std::sqrt(static_cast<long double>(x.radicand()));
}

ErrorCode code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error thrown");
  return ErrorCode::Io;
}

std::vector<Scalar> sample_field(long d, int n, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<long> num(-9, 9), den(1, 7);
  std::vector<Scalar> out;
  for (int i = 0; i < n; ++i)
    out.push_back(Scalar::quadratic(Rational(num(rng), den(rng)), Rational(num(rng), den(rng)), d));
  return out;
}

}  // namespace

TEST_CASE("canonical form") {
  CHECK(Scalar(2, 4) == Scalar(1, 2));
  CHECK(Scalar::quadratic(0, 1, 8) == Scalar::quadratic(0, 2, 2));
  CHECK(Scalar::quadratic(1, 1, 9) == Scalar(4));
  CHECK(Scalar::quadratic(3, 0, 5).is_rational());
  CHECK(Scalar::sqrt(Rational(1, 12)) == Scalar::quadratic(0, Rational(1, 6), 3));
  CHECK(Scalar::sqrt(Rational(9, 4)) == Scalar(3, 2));
  CHECK(code_of([] { Scalar::sqrt(Rational(-1)); }) == ErrorCode::NegativeRadicand);
}

TEST_CASE("field axioms in Q(sqrt 2)") {
  const auto xs = sample_field(2, 12, 11);
  for (const auto& x : xs)
    for (const auto& y : xs) {
      CHECK(x + y == y + x);
      CHECK(x * y == y * x);
      CHECK((x + y) - y == x);
      for (const auto& z : {xs[0], xs[5]}) {
        CHECK((x * y) * z == x * (y * z));
        CHECK(x * (y + z) == x * y + x * z);
      }
      if (!y.is_zero()) CHECK((x / y) * y == x);
    }
  for (const auto& x : xs)
    if (!x.is_zero()) CHECK(x * x.inverse() == Scalar(1));
}

TEST_CASE("norm and conjugate") {
  const Scalar x = Scalar::quadratic(3, 2, 2);
  CHECK(x.norm() == Rational(1));
  CHECK(x * x.conjugate() == Scalar(x.norm()));
}

TEST_CASE("exact sign agrees with a long double oracle away from zero") {
  for (long d : {2L, 3L, 15L})
    for (const auto& x : sample_field(d, 60, static_cast<unsigned>(d))) {
      const long double v = approx(x);
      if (std::fabs(v) < 1e-9L) continue;
      CHECK(x.sign() == (v > 0 ? 1 : -1));
    }
  CHECK(Scalar::quadratic(-3, 2, 2).sign() == -1);  // 2.828... - 3
  CHECK(Scalar::quadratic(-17, 12, 2).sign() == -1);  // 12*sqrt(2) = 16.9705..., norm 1
  CHECK(Scalar::quadratic(17, -12, 2).sign() == 1);
  CHECK(Scalar::quadratic(-577, 408, 2).sign() == -1);
}

TEST_CASE("sign is multiplicative") {
  const auto xs = sample_field(3, 15, 5);
  for (const auto& x : xs)
    for (const auto& y : xs) CHECK((x * y).sign() == x.sign() * y.sign());
}

TEST_CASE("quadratic witnesses are exact") {
  const Scalar q = parse_scalar("sqrt(3)/6");
  CHECK(q * q * 12 == Scalar(1));
  CHECK(std::fabs(approx(q) * approx(q) * 12 - 1) < 1e-15L);
  const Scalar p = parse_scalar("(sqrt(2)-3)/2");
  CHECK(4 * p * p + 12 * p + 7 == Scalar(0));
}

TEST_CASE("mixing radicands") {
  const Scalar a = Scalar::sqrt(2), b = Scalar::sqrt(3);
  CHECK(code_of([&] { (void)(a + b); }) == ErrorCode::IncompatibleExtension);
  CHECK(code_of([&] { (void)(a * b); }) == ErrorCode::IncompatibleExtension);
  CHECK(a + Scalar(1, 2) == Scalar::quadratic(Rational(1, 2), 1, 2));
  CHECK(code_of([] { (void)(Scalar(1) / Scalar(0)); }) == ErrorCode::DivisionByZero);
}

TEST_CASE("compare across extensions") {
  const std::vector<Scalar> xs = {parse_scalar("sqrt(3)/6"),  parse_scalar("sqrt(15)/6"), parse_scalar("sqrt(33)/22"),
                                  parse_scalar("(-3+sqrt(2))/2"), Scalar(27, 100),         parse_scalar("-sqrt(2)/2"),
                                  Scalar(0),                  parse_scalar("1-sqrt(5)")};
  for (const auto& x : xs)
    for (const auto& y : xs) {
      const long double dx = approx(x), dy = approx(y);
      const int expect = dx < dy - 1e-12L ? -1 : (dx > dy + 1e-12L ? 1 : 0);
      CHECK(compare(x, y) == expect);
    }
  CHECK(compare(parse_scalar("sqrt(8)"), parse_scalar("2*sqrt(2)")) == 0);
}

TEST_CASE("square-free split") {
  auto s = split_square_free(72);
  CHECK(s.square_root == 6);
  CHECK(s.square_free == 2);
  CHECK(is_square_free(30));
  CHECK_FALSE(is_square_free(12));
  for (long n = 1; n < 500; ++n) {
    const auto t = split_square_free(n);
    CHECK(t.square_root * t.square_root * t.square_free == n);
    CHECK(is_square_free(t.square_free));
  }
}

TEST_CASE("string round trip") {
  for (const char* text : {"0", "-7/3", "sqrt(2)", "(-3+2*sqrt(2))/6", "1/2-sqrt(15)/6"}) {
    const Scalar x = parse_scalar(text);
    CHECK(parse_scalar(x.to_string()) == x);
  }
  CHECK(parse_scalar("(-3+2*sqrt(2))/6").to_string() == "(-3+2*sqrt(2))/6");
}
