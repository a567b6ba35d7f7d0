#include "hnlie/scalar.hpp"

#include <ostream>
#include <sstream>
#include <utility>

#include "hnlie/error.hpp"

namespace hnlie {

namespace {

constexpr unsigned long kTrialDivisionLimit = 10'000'000UL;

int sgn_of(const Rational& r) { return sgn(r); }

}  // namespace

SquareFreeSplit split_square_free(const Integer& n) {
  if (sgn(n) < 0) throw Error(ErrorCode::NegativeRadicand, "negative radicand " + n.get_str());
  SquareFreeSplit out{Integer(1), Integer(1)};
  if (sgn(n) == 0) {
    out.square_root = 0;
    out.square_free = 1;
    return out;
  }
  Integer rest = n;
  for (unsigned long p = 2;; p = (p == 2 ? 3 : p + 2)) {
    Integer pp = p;
    if (pp * pp * pp > rest) break;
    if (p > kTrialDivisionLimit) {
      throw Error(ErrorCode::DomainViolation, "radicand too large to factor: " + n.get_str());
    }
    int multiplicity = 0;
    while (mpz_divisible_ui_p(rest.get_mpz_t(), p) != 0) {
      mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), p);
      ++multiplicity;
    }
    for (int k = 0; k + 1 < multiplicity; k += 2) out.square_root *= p;
    if (multiplicity % 2 == 1) out.square_free *= p;
  }
  // Every prime factor left is above the cube root, so at most two remain.
  if (mpz_perfect_square_p(rest.get_mpz_t()) != 0) {
    Integer root;
    mpz_sqrt(root.get_mpz_t(), rest.get_mpz_t());
    out.square_root *= root;
  } else {
    out.square_free *= rest;
  }
  return out;
}

bool is_square_free(const Integer& n) {
  if (sgn(n) <= 0) return false;
  return split_square_free(n).square_root == 1;
}

Scalar::Scalar(const Rational& value) : a_(value) { a_.canonicalize(); }

Scalar::Scalar(long num, long den) {
  if (den == 0) throw Error(ErrorCode::DivisionByZero, "zero denominator");
  a_ = Rational(num, den);
  a_.canonicalize();
}

Scalar Scalar::quadratic(const Rational& a, const Rational& b, const Integer& d) {
  Scalar out;
  out.a_ = a;
  out.a_.canonicalize();
  if (sgn(b) == 0 || sgn(d) == 0) return out;
  const auto split = split_square_free(d);
  out.b_ = b * Rational(split.square_root);
  out.b_.canonicalize();
  if (split.square_free == 1) {
    out.a_ += out.b_;
    out.b_ = 0;
    return out;
  }
  if (!split.square_free.fits_slong_p()) {
    throw Error(ErrorCode::DomainViolation, "square-free radicand exceeds 63 bits");
  }
  out.d_ = split.square_free.get_si();
  out.normalize();
  return out;
}

Scalar Scalar::sqrt(const Rational& r) {
  if (sgn(r) < 0) throw Error(ErrorCode::NegativeRadicand, "sqrt of negative " + r.get_str());
  // sqrt(p/q) = sqrt(p*q) / q
  const Integer pq = r.get_num() * r.get_den();
  return quadratic(Rational(0), Rational(1, 1) / Rational(r.get_den()), pq);
}

void Scalar::normalize() {
  a_.canonicalize();
  b_.canonicalize();
  if (sgn(b_) == 0) d_ = 0;
  if (d_ == 0) b_ = 0;
}

long Scalar::common_radicand(const Scalar& other) const {
  if (d_ == 0) return other.d_;
  if (other.d_ == 0 || other.d_ == d_) return d_;
  throw Error(ErrorCode::IncompatibleExtension,
              "cannot combine sqrt(" + std::to_string(d_) + ") and sqrt(" +
                  std::to_string(other.d_) + ")");
}

int Scalar::sign() const {
  const int sa = sgn_of(a_);
  const int sb = sgn_of(b_);
  if (sb == 0) return sa;
  if (sa == 0 || sa == sb) return sb;
  // Opposite signs: the larger of a^2 and d*b^2 wins; equality would make d a square.
  const Rational a2 = a_ * a_;
  const Rational db2 = Rational(d_) * b_ * b_;
  return a2 > db2 ? sa : sb;
}

Scalar Scalar::conjugate() const {
  Scalar out = *this;
  out.b_ = -out.b_;
  return out;
}

Rational Scalar::norm() const {
  Rational out = a_ * a_ - Rational(d_) * b_ * b_;
  out.canonicalize();
  return out;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw Error(ErrorCode::DivisionByZero, "division by zero");
  const Rational n = norm();
  Scalar out = conjugate();
  out.a_ /= n;
  out.b_ /= n;
  out.normalize();
  return out;
}

Scalar& Scalar::operator+=(const Scalar& rhs) {
  const long d = common_radicand(rhs);
  a_ += rhs.a_;
  b_ += rhs.b_;
  d_ = d;
  normalize();
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& rhs) {
  const long d = common_radicand(rhs);
  a_ -= rhs.a_;
  b_ -= rhs.b_;
  d_ = d;
  normalize();
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& rhs) {
  const long d = common_radicand(rhs);
  // (a + b r)(c + e r) = (ac + d be) + (ae + bc) r
  Rational a = a_ * rhs.a_ + Rational(d) * b_ * rhs.b_;
  Rational b = a_ * rhs.b_ + b_ * rhs.a_;
  a_ = std::move(a);
  b_ = std::move(b);
  d_ = d;
  normalize();
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& rhs) {
  common_radicand(rhs);
  return *this *= rhs.inverse();
}

Scalar Scalar::operator-() const {
  Scalar out = *this;
  out.a_ = -out.a_;
  out.b_ = -out.b_;
  return out;
}

std::string Scalar::to_string() const {
  if (d_ == 0) return a_.get_str();
  const Integer den = [&] {
    Integer l;
    mpz_lcm(l.get_mpz_t(), a_.get_den_mpz_t(), b_.get_den_mpz_t());
    return l;
  }();
  const Integer A = a_.get_num() * (den / a_.get_den());
  const Integer B = b_.get_num() * (den / b_.get_den());
  const Integer absB = abs(B);
  const std::string root = "sqrt(" + std::to_string(d_) + ")";
  const std::string coeff = absB == 1 ? root : absB.get_str() + "*" + root;

  std::ostringstream num;
  if (sgn(A) != 0) {
    num << A.get_str() << (sgn(B) < 0 ? "-" : "+") << coeff;
  } else {
    num << (sgn(B) < 0 ? "-" : "") << coeff;
  }
  if (den == 1) return num.str();
  if (sgn(A) != 0) return "(" + num.str() + ")/" + den.get_str();
  return num.str() + "/" + den.get_str();
}

std::ostream& operator<<(std::ostream& os, const Scalar& x) { return os << x.to_string(); }

int compare(const Scalar& x, const Scalar& y) {
  if (x.radicand() == 0 || y.radicand() == 0 || x.radicand() == y.radicand()) return (x - y).sign();
  // x - y = s + t with s = (a_x - a_y) + b_x sqrt(d_x) and t = -b_y sqrt(d_y); t^2 is rational.
  const Scalar s = Scalar::quadratic(x.rational_part() - y.rational_part(), x.irrational_part(), x.radicand());
  const int ss = s.sign();
  const int st = -sgn(y.irrational_part());
  if (ss == 0) return st;
  if (st == 0 || ss == st) return ss;
  const Rational t2 = y.irrational_part() * y.irrational_part() * Rational(y.radicand());
  const int bigger = (s * s - Scalar(t2)).sign();  // |s| vs |t|
  return bigger > 0 ? ss : (bigger < 0 ? st : 0);
}

}  // namespace hnlie
