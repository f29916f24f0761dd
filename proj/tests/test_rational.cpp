#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "ordcal/rational.hpp"
#include "support/rng.hpp"

using namespace ordcal;

TEST_CASE("rational arithmetic basics") {
  CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(1, -2) == Rational(-1, 2));
  CHECK((Rational(-1, 2)).str() == "-1/2");
  CHECK(Rational(0).str() == "0");
  CHECK(Rational(3, 1).str() == "3");
  CHECK_THROWS_AS(Rational(1, 0), DivisionByZero);
  CHECK_THROWS_AS(Rational(0).inverse(), DivisionByZero);
  CHECK(Rational(-7, 3).inverse() == Rational(-3, 7));
}

TEST_CASE("rational parsing") {
  CHECK(Rational::parse("5/6") == Rational(5, 6));
  CHECK(Rational::parse("-2") == Rational(-2));
  CHECK(Rational::parse("4/6") == Rational(2, 3));
  CHECK_THROWS(Rational::parse("x"));
}

TEST_CASE("gaussian rational basics") {
  GaussianRational i = GaussianRational::i();
  CHECK(i * i == GaussianRational(Rational(-1)));
  CHECK(i.conj() == -i);
  CHECK((i * i * i * i).is_one());
  CHECK_THROWS_AS(GaussianRational(Rational(0)).inverse(), DivisionByZero);
  // 1/i = -i
  CHECK(i.inverse() == -i);
  GaussianRational z(Rational(1, 2), Rational(-3));
  CHECK((z * z.inverse()).is_one());
  CHECK(z.str() == "1/2-3*i");
  CHECK(GaussianRational(Rational(0), Rational(1)).str() == "i");
  CHECK(GaussianRational(Rational(0), Rational(-2)).str() == "-2*i");
}

TEST_CASE("field axioms on randomized triples") {
  std::mt19937 rng(20231u);
  for (int iter = 0; iter < 500; ++iter) {
    Rational a = testgen::rational(rng), b = testgen::rational(rng), c = testgen::rational(rng);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a + (-a) == Rational(0));
    Rational nz = testgen::nonzero_rational(rng);
    CHECK(nz * nz.inverse() == Rational(1));

    GaussianRational x = testgen::gaussian(rng), y = testgen::gaussian(rng),
                     z = testgen::gaussian(rng);
    CHECK((x + y) + z == x + (y + z));
    CHECK((x * y) * z == x * (y * z));
    CHECK(x * (y + z) == x * y + x * z);
    CHECK(x * y == y * x);
    GaussianRational nzg = testgen::nonzero_gaussian(rng);
    CHECK((nzg * nzg.inverse()).is_one());
  }
}

TEST_CASE("factorial and binomial helpers") {
  CHECK(Rational::factorial(0) == Rational(1));
  CHECK(Rational::factorial(5) == Rational(120));
  CHECK(Rational::binomial(6, 3) == Rational(20));
  CHECK(Rational::binomial(3, 5) == Rational(0));
}
