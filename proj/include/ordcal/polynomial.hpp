#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "ordcal/rational.hpp"

namespace ordcal {

/// Sparse monomial: variable name -> positive exponent.
using Monomial = std::map<std::string, unsigned>;

inline Monomial mono_mul(const Monomial& a, const Monomial& b) {
  Monomial r = a;
  for (const auto& [v, e] : b) r[v] += e;
  return r;
}

/// Multivariate polynomial over an exact coefficient field K
/// (Rational or GaussianRational).  No zero coefficients are stored.
template <class K>
class PolynomialT {
 public:
  PolynomialT() = default;
  PolynomialT(K c) {  // NOLINT: implicit constant
    if (!c.is_zero()) terms_[Monomial{}] = std::move(c);
  }
  PolynomialT(long c) : PolynomialT(K(c)) {}  // NOLINT

  static PolynomialT variable(const std::string& name, unsigned exp = 1) {
    PolynomialT p;
    if (exp == 0) return PolynomialT(K(1));
    p.terms_[Monomial{{name, exp}}] = K(1);
    return p;
  }

  const std::map<Monomial, K>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
  }
  K constant_value() const {
    if (terms_.empty()) return K(0);
    return terms_.begin()->second;
  }

  unsigned total_degree() const {
    unsigned d = 0;
    for (const auto& [m, c] : terms_) {
      unsigned t = 0;
      for (const auto& [v, e] : m) t += e;
      if (t > d) d = t;
    }
    return d;
  }

  std::vector<std::string> variables() const {
    std::map<std::string, unsigned> seen;
    for (const auto& [m, c] : terms_)
      for (const auto& [v, e] : m) seen[v] = 1;
    std::vector<std::string> out;
    for (const auto& [v, e] : seen) out.push_back(v);
    return out;
  }

  void add_term(const Monomial& m, const K& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
      terms_.emplace(m, c);
    } else {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  PolynomialT operator-() const {
    PolynomialT r;
    for (const auto& [m, c] : terms_) r.terms_[m] = -c;
    return r;
  }
  PolynomialT operator+(const PolynomialT& o) const {
    PolynomialT r = *this;
    for (const auto& [m, c] : o.terms_) r.add_term(m, c);
    return r;
  }
  PolynomialT operator-(const PolynomialT& o) const {
    PolynomialT r = *this;
    for (const auto& [m, c] : o.terms_) r.add_term(m, -c);
    return r;
  }
  PolynomialT operator*(const PolynomialT& o) const {
    PolynomialT r;
    for (const auto& [ma, ca] : terms_)
      for (const auto& [mb, cb] : o.terms_) r.add_term(mono_mul(ma, mb), ca * cb);
    return r;
  }
  PolynomialT operator*(const K& k) const {
    PolynomialT r;
    if (k.is_zero()) return r;
    for (const auto& [m, c] : terms_) r.terms_[m] = c * k;
    return r;
  }
  PolynomialT& operator+=(const PolynomialT& o) { return *this = *this + o; }
  PolynomialT& operator-=(const PolynomialT& o) { return *this = *this - o; }
  PolynomialT& operator*=(const PolynomialT& o) { return *this = *this * o; }

  PolynomialT pow(unsigned k) const {
    PolynomialT acc(K(1));
    PolynomialT base = *this;
    while (k > 0) {
      if (k & 1u) acc *= base;
      base *= base;
      k >>= 1u;
    }
    return acc;
  }

  bool operator==(const PolynomialT& o) const { return terms_ == o.terms_; }

  /// Exact partial derivative with respect to a named variable.
  PolynomialT diff(const std::string& var) const {
    PolynomialT r;
    for (const auto& [m, c] : terms_) {
      auto it = m.find(var);
      if (it == m.end()) continue;
      Monomial dm = m;
      unsigned e = it->second;
      if (e == 1)
        dm.erase(var);
      else
        dm[var] = e - 1;
      r.add_term(dm, c * K(static_cast<long>(e)));
    }
    return r;
  }

  /// Substitutes a polynomial for a variable.
  PolynomialT substitute(const std::string& var, const PolynomialT& value) const {
    PolynomialT r;
    for (const auto& [m, c] : terms_) {
      PolynomialT t(c);
      PolynomialT vp(K(1));
      auto it = m.find(var);
      if (it != m.end()) vp = value.pow(it->second);
      Monomial rest = m;
      rest.erase(var);
      PolynomialT restp;
      restp.terms_[rest] = K(1);
      r += t * restp * vp;
    }
    return r;
  }

  /// Evaluates at a full point.  Throws on missing variable.
  K eval(const std::map<std::string, Rational>& point) const;

 private:
  std::map<Monomial, K> terms_;
};

using Polynomial = PolynomialT<Rational>;
using GaussianPolynomial = PolynomialT<GaussianRational>;

template <class K>
K PolynomialT<K>::eval(const std::map<std::string, Rational>& point) const {
  K acc(0);
  for (const auto& [m, c] : terms_) {
    K t = c;
    for (const auto& [v, e] : m) {
      auto it = point.find(v);
      if (it == point.end()) throw Error("eval: unbound variable '" + v + "'");
      Rational p(1);
      for (unsigned k = 0; k < e; ++k) p *= it->second;
      t *= K(p);
    }
    acc += t;
  }
  return acc;
}

/// Quotient of polynomials over Rational.  Not reduced to lowest terms;
/// the denominator sign is normalized and equality goes through
/// cross-multiplication, which keeps multivariate gcd out of the picture.
class RationalFunction {
 public:
  RationalFunction() : num_(0), den_(1) {}
  RationalFunction(Polynomial num) : num_(std::move(num)), den_(1) {}  // NOLINT
  RationalFunction(long c) : num_(c), den_(1) {}                       // NOLINT
  RationalFunction(Rational c) : num_(std::move(c)), den_(1) {}        // NOLINT
  RationalFunction(Polynomial num, Polynomial den);

  static RationalFunction variable(const std::string& name) {
    return RationalFunction(Polynomial::variable(name));
  }

  const Polynomial& num() const { return num_; }
  const Polynomial& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  RationalFunction operator-() const;
  RationalFunction operator+(const RationalFunction& o) const;
  RationalFunction operator-(const RationalFunction& o) const;
  RationalFunction operator*(const RationalFunction& o) const;
  RationalFunction operator/(const RationalFunction& o) const;
  RationalFunction& operator+=(const RationalFunction& o) { return *this = *this + o; }
  RationalFunction& operator-=(const RationalFunction& o) { return *this = *this - o; }
  RationalFunction& operator*=(const RationalFunction& o) { return *this = *this * o; }

  /// Exact partial derivative (quotient rule).
  RationalFunction diff(const std::string& var) const;

  /// Equality as rational functions: num*o.den - o.num*den == 0.
  bool equals(const RationalFunction& o) const;

  /// Evaluates at a point; throws DivisionByZero if the denominator vanishes.
  Rational eval(const std::map<std::string, Rational>& point) const;

 private:
  void normalize_sign();
  Polynomial num_;
  Polynomial den_;
};

}  // namespace ordcal
