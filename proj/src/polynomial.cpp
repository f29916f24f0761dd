#include "ordcal/polynomial.hpp"

namespace ordcal {

RationalFunction::RationalFunction(Polynomial num, Polynomial den)
    : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw DivisionByZero("rational function with zero denominator");
  if (num_.is_zero()) den_ = Polynomial(1);
  normalize_sign();
}

void RationalFunction::normalize_sign() {
  // Leading coefficient of the denominator (largest monomial in map order)
  // is kept positive so printing is stable.
  if (den_.is_zero()) return;
  const auto& terms = den_.terms();
  if (terms.rbegin()->second.sign() < 0) {
    num_ = -num_;
    den_ = -den_;
  }
}

RationalFunction RationalFunction::operator-() const {
  RationalFunction r;
  r.num_ = -num_;
  r.den_ = den_;
  return r;
}

RationalFunction RationalFunction::operator+(const RationalFunction& o) const {
  if (den_ == o.den_) return RationalFunction(num_ + o.num_, den_);
  return RationalFunction(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RationalFunction RationalFunction::operator-(const RationalFunction& o) const {
  if (den_ == o.den_) return RationalFunction(num_ - o.num_, den_);
  return RationalFunction(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

RationalFunction RationalFunction::operator*(const RationalFunction& o) const {
  return RationalFunction(num_ * o.num_, den_ * o.den_);
}

RationalFunction RationalFunction::operator/(const RationalFunction& o) const {
  if (o.num_.is_zero()) throw DivisionByZero("dividing by zero rational function");
  return RationalFunction(num_ * o.den_, den_ * o.num_);
}

RationalFunction RationalFunction::diff(const std::string& var) const {
  // (n/d)' = (n'd - nd') / d^2
  return RationalFunction(num_.diff(var) * den_ - num_ * den_.diff(var), den_ * den_);
}

bool RationalFunction::equals(const RationalFunction& o) const {
  return (num_ * o.den_ - o.num_ * den_).is_zero();
}

Rational RationalFunction::eval(const std::map<std::string, Rational>& point) const {
  Rational d = den_.eval(point);
  if (d.is_zero()) throw DivisionByZero("denominator vanishes at evaluation point");
  return num_.eval(point) / d;
}

}  // namespace ordcal
