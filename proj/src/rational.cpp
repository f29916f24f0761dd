#include "ordcal/rational.hpp"

namespace ordcal {

Rational Rational::parse(const std::string& text) {
  mpq_class v;
  if (v.set_str(text, 10) != 0) throw Error("bad rational literal: '" + text + "'");
  if (v.get_den() == 0) throw DivisionByZero("zero denominator in '" + text + "'");
  v.canonicalize();
  return Rational(std::move(v));
}

Rational Rational::factorial(unsigned n) {
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), n);
  return Rational(mpq_class(f));
}

Rational Rational::binomial(unsigned n, unsigned k) {
  if (k > n) return Rational(0);
  mpz_class b;
  mpz_bin_uiui(b.get_mpz_t(), n, k);
  return Rational(mpq_class(b));
}

GaussianRational GaussianRational::pow(unsigned k) const {
  GaussianRational acc(1);
  GaussianRational base = *this;
  while (k > 0) {
    if (k & 1u) acc *= base;
    base *= base;
    k >>= 1u;
  }
  return acc;
}

std::string GaussianRational::str() const {
  if (im_.is_zero()) return re_.str();
  std::string im;
  if (im_.is_one())
    im = "i";
  else if ((-im_).is_one())
    im = "-i";
  else
    im = im_.str() + "*i";
  if (re_.is_zero()) return im;
  if (im_.sign() > 0) return re_.str() + "+" + im;
  return re_.str() + im;  // negative imaginary part carries its own sign
}

}  // namespace ordcal
