#pragma once

#include <gmpxx.h>

#include <compare>
#include <string>

#include "ordcal/errors.hpp"

namespace ordcal {

/// Exact rational number, always in canonical reduced form:
/// gcd(|num|, den) = 1, den > 0, zero is 0/1.  Backed by GMP.
class Rational {
 public:
  Rational() : v_(0) {}
  Rational(long n) : v_(n) {}  // NOLINT: implicit by design
  Rational(long n, long d) {
    if (d == 0) throw DivisionByZero();
    v_ = mpq_class(n, d);
    v_.canonicalize();
  }
  explicit Rational(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }

  /// Parses "n", "-n" or "n/d".  Throws DivisionByZero on zero denominator.
  static Rational parse(const std::string& text);

  Rational operator-() const { return Rational(mpq_class(-v_), NoCanon{}); }
  Rational operator+(const Rational& o) const { return Rational(mpq_class(v_ + o.v_), NoCanon{}); }
  Rational operator-(const Rational& o) const { return Rational(mpq_class(v_ - o.v_), NoCanon{}); }
  Rational operator*(const Rational& o) const { return Rational(mpq_class(v_ * o.v_), NoCanon{}); }
  Rational operator/(const Rational& o) const {
    if (o.is_zero()) throw DivisionByZero();
    return Rational(mpq_class(v_ / o.v_), NoCanon{});
  }
  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }

  Rational inverse() const {
    if (is_zero()) throw DivisionByZero("inverse of zero");
    return Rational(mpq_class(1 / v_), NoCanon{});
  }

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_one() const { return v_ == 1; }
  int sign() const { return sgn(v_); }

  bool operator==(const Rational& o) const { return v_ == o.v_; }
  std::strong_ordering operator<=>(const Rational& o) const {
    int c = cmp(v_, o.v_);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  /// "5/6", "-2", "0".
  std::string str() const { return v_.get_str(); }

  const mpq_class& raw() const { return v_; }

  static Rational factorial(unsigned n);
  static Rational binomial(unsigned n, unsigned k);

 private:
  struct NoCanon {};
  // mpq arithmetic on canonical operands stays canonical.
  Rational(mpq_class v, NoCanon) : v_(std::move(v)) {}
  mpq_class v_;
};

/// Gaussian rational a + b*i, the scalar field of the operator algebra.
class GaussianRational {
 public:
  GaussianRational() = default;
  GaussianRational(Rational re) : re_(std::move(re)) {}  // NOLINT
  GaussianRational(long n) : re_(n) {}                   // NOLINT
  GaussianRational(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

  static GaussianRational i() { return {Rational(0), Rational(1)}; }

  const Rational& re() const { return re_; }
  const Rational& im() const { return im_; }

  GaussianRational operator-() const { return {-re_, -im_}; }
  GaussianRational operator+(const GaussianRational& o) const {
    return {re_ + o.re_, im_ + o.im_};
  }
  GaussianRational operator-(const GaussianRational& o) const {
    return {re_ - o.re_, im_ - o.im_};
  }
  GaussianRational operator*(const GaussianRational& o) const {
    return {re_ * o.re_ - im_ * o.im_, re_ * o.im_ + im_ * o.re_};
  }
  GaussianRational& operator+=(const GaussianRational& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
  }
  GaussianRational& operator*=(const GaussianRational& o) { return *this = *this * o; }

  GaussianRational conj() const { return {re_, -im_}; }

  GaussianRational inverse() const {
    if (is_zero()) throw DivisionByZero("inverse of zero");
    Rational n = re_ * re_ + im_ * im_;
    return {re_ / n, -(im_ / n)};
  }
  GaussianRational operator/(const GaussianRational& o) const { return *this * o.inverse(); }

  GaussianRational pow(unsigned k) const;

  bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
  bool is_one() const { return re_.is_one() && im_.is_zero(); }
  bool is_real() const { return im_.is_zero(); }

  bool operator==(const GaussianRational& o) const = default;
  std::strong_ordering operator<=>(const GaussianRational& o) const {
    if (auto c = re_ <=> o.re_; c != 0) return c;
    return im_ <=> o.im_;
  }

  /// "2", "i", "-i", "3*i", "1/2-3*i".
  std::string str() const;

 private:
  Rational re_;
  Rational im_;
};

}  // namespace ordcal
