#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <string>

namespace hnlie {

using Rational = mpq_class;
using Integer = mpz_class;

/// Exact element a + b*sqrt(d) of Q or of a real quadratic field Q(sqrt(d)).
///
/// The representation is canonical: both rational parts are in lowest terms,
/// d is 0 or a square-free integer >= 2, and d == 0 exactly when b == 0.
/// Two scalars with distinct nonzero radicands cannot be combined; pure
/// rationals mix freely with any extension.
class Scalar {
 public:
  Scalar() = default;
  Scalar(long value) : a_(value) {}  // NOLINT(google-explicit-constructor)
  Scalar(const Rational& value);     // NOLINT(google-explicit-constructor)
  Scalar(long num, long den);

  /// a + b*sqrt(d) for an arbitrary non-negative integer radicand; square
  /// factors of d are absorbed into b.
  static Scalar quadratic(const Rational& a, const Rational& b, const Integer& d);

  /// sqrt(r) for a non-negative rational r.
  static Scalar sqrt(const Rational& r);

  const Rational& rational_part() const { return a_; }
  const Rational& irrational_part() const { return b_; }
  /// 0 for rationals.
  long radicand() const { return d_; }

  bool is_rational() const { return d_ == 0; }
  bool is_zero() const { return d_ == 0 && sgn(a_) == 0; }

  /// Exact sign of the real number, without floating point.
  int sign() const;

  Scalar conjugate() const;
  /// Field norm a^2 - d*b^2 (a rational).
  Rational norm() const;
  Scalar inverse() const;

  Scalar& operator+=(const Scalar& rhs);
  Scalar& operator-=(const Scalar& rhs);
  Scalar& operator*=(const Scalar& rhs);
  Scalar& operator/=(const Scalar& rhs);

  friend Scalar operator+(Scalar lhs, const Scalar& rhs) { return lhs += rhs; }
  friend Scalar operator-(Scalar lhs, const Scalar& rhs) { return lhs -= rhs; }
  friend Scalar operator*(Scalar lhs, const Scalar& rhs) { return lhs *= rhs; }
  friend Scalar operator/(Scalar lhs, const Scalar& rhs) { return lhs /= rhs; }
  Scalar operator-() const;

  friend bool operator==(const Scalar& x, const Scalar& y) {
    return x.d_ == y.d_ && x.a_ == y.a_ && x.b_ == y.b_;
  }
  friend bool operator!=(const Scalar& x, const Scalar& y) { return !(x == y); }

  /// Total order by real value; throws on incompatible extensions.
  friend bool operator<(const Scalar& x, const Scalar& y) { return (x - y).sign() < 0; }
  friend bool operator>(const Scalar& x, const Scalar& y) { return y < x; }
  friend bool operator<=(const Scalar& x, const Scalar& y) { return !(y < x); }
  friend bool operator>=(const Scalar& x, const Scalar& y) { return !(x < y); }

  /// Exact expression string accepted by parse_scalar, e.g. "(-3+2*sqrt(2))/6".
  std::string to_string() const;

 private:
  void normalize();
  long common_radicand(const Scalar& other) const;

  Rational a_{0};
  Rational b_{0};
  long d_ = 0;
};

std::ostream& operator<<(std::ostream& os, const Scalar& x);

/// Exact three-way comparison that also accepts operands from different
/// extensions (used for region bounds such as q > sqrt(3)/6 at q = sqrt(15)/6).
int compare(const Scalar& x, const Scalar& y);

/// Largest s with s^2 | n and the square-free cofactor n / s^2; n >= 0.
struct SquareFreeSplit {
  Integer square_root;
  Integer square_free;
};
SquareFreeSplit split_square_free(const Integer& n);

bool is_square_free(const Integer& n);

}  // namespace hnlie
