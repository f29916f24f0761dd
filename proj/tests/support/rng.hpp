#pragma once

#include <random>

#include "ordcal/polynomial.hpp"
#include "ordcal/rational.hpp"
#include "ordcal/weyl.hpp"

// Deterministic generators for property tests.  Every suite seeds its own
// engine so failures reproduce.
namespace testgen {

inline ordcal::Rational rational(std::mt19937& rng) {
  std::uniform_int_distribution<long> num(-12, 12);
  std::uniform_int_distribution<long> den(1, 9);
  return ordcal::Rational(num(rng), den(rng));
}

inline ordcal::Rational nonzero_rational(std::mt19937& rng) {
  for (;;) {
    auto r = rational(rng);
    if (!r.is_zero()) return r;
  }
}

inline ordcal::GaussianRational gaussian(std::mt19937& rng) {
  return {rational(rng), rational(rng)};
}

inline ordcal::GaussianRational nonzero_gaussian(std::mt19937& rng) {
  for (;;) {
    auto g = gaussian(rng);
    if (!g.is_zero()) return g;
  }
}

inline ordcal::ClassicalPoly classical_poly(std::mt19937& rng, unsigned max_degree,
                                            unsigned max_terms = 4) {
  std::uniform_int_distribution<unsigned> nterms(1, max_terms);
  std::uniform_int_distribution<unsigned> deg(0, max_degree);
  ordcal::ClassicalPoly f;
  unsigned k = nterms(rng);
  for (unsigned t = 0; t < k; ++t) {
    unsigned n = deg(rng);
    std::uniform_int_distribution<unsigned> rest(0, max_degree - n);
    unsigned m = rest(rng);
    f.add_term({n, m}, rational(rng));
  }
  return f;
}

inline ordcal::WeylElement weyl_element(std::mt19937& rng, unsigned max_degree,
                                        unsigned max_terms = 3) {
  std::uniform_int_distribution<unsigned> nterms(1, max_terms);
  std::uniform_int_distribution<unsigned> deg(0, max_degree);
  ordcal::WeylElement a;
  unsigned k = nterms(rng);
  for (unsigned t = 0; t < k; ++t) {
    unsigned n = deg(rng);
    std::uniform_int_distribution<unsigned> rest(0, max_degree - n);
    unsigned m = rest(rng);
    a.add_term({n, m}, gaussian(rng));
  }
  return a;
}

inline ordcal::Polynomial poly_in(std::mt19937& rng, const std::vector<std::string>& vars,
                                  unsigned max_degree, unsigned max_terms = 4) {
  std::uniform_int_distribution<unsigned> nterms(1, max_terms);
  std::uniform_int_distribution<unsigned> pick(0, static_cast<unsigned>(vars.size()) - 1);
  ordcal::Polynomial f;
  unsigned k = nterms(rng);
  for (unsigned t = 0; t < k; ++t) {
    ordcal::Monomial m;
    unsigned budget = max_degree;
    std::uniform_int_distribution<unsigned> deg(0, budget);
    unsigned total = deg(rng);
    for (unsigned j = 0; j < total; ++j) m[vars[pick(rng)]] += 1;
    f.add_term(m, rational(rng));
  }
  return f;
}

}  // namespace testgen
