#pragma once

#include <list>
#include <vector>

#include "ordcal/weyl.hpp"

// Independent normal-form oracle: exhaustive adjacent-pair rewriting
// ph qh -> qh ph - i applied until every word is sorted.  Deliberately knows
// nothing about the closed-form reordering rule the engine uses.
namespace testoracle {

inline ordcal::WeylElement normal_form_by_rewriting(const std::vector<ordcal::OperatorWord>& input) {
  using ordcal::Generator;
  using ordcal::GaussianRational;
  using ordcal::OperatorWord;
  using ordcal::Rational;

  std::list<OperatorWord> work(input.begin(), input.end());
  ordcal::WeylElement out;
  const GaussianRational minus_i(Rational(0), Rational(-1));

  while (!work.empty()) {
    OperatorWord w = work.front();
    work.pop_front();
    bool rewritten = false;
    for (size_t k = 0; k + 1 < w.gens.size(); ++k) {
      if (w.gens[k] == Generator::Ph && w.gens[k + 1] == Generator::Qh) {
        // ph qh -> qh ph + (-i)
        OperatorWord swapped = w;
        std::swap(swapped.gens[k], swapped.gens[k + 1]);
        OperatorWord dropped;
        dropped.coeff = w.coeff * minus_i;
        dropped.gens.assign(w.gens.begin(), w.gens.begin() + static_cast<long>(k));
        dropped.gens.insert(dropped.gens.end(), w.gens.begin() + static_cast<long>(k) + 2,
                            w.gens.end());
        work.push_back(std::move(swapped));
        work.push_back(std::move(dropped));
        rewritten = true;
        break;
      }
    }
    if (rewritten) continue;
    unsigned n = 0, m = 0;
    for (Generator g : w.gens) (g == Generator::Qh ? n : m) += 1;
    out.add_term({n, m}, w.coeff);
  }
  return out;
}

inline ordcal::WeylElement normal_form_by_rewriting(const ordcal::OperatorWord& w) {
  return normal_form_by_rewriting(std::vector<ordcal::OperatorWord>{w});
}

// Oracle-side product: concatenate words of both operands' normal forms and
// rewrite again.
inline ordcal::WeylElement oracle_product(const ordcal::WeylElement& a,
                                          const ordcal::WeylElement& b) {
  using ordcal::Generator;
  using ordcal::OperatorWord;
  std::vector<OperatorWord> words;
  for (const auto& [ea, ca] : a.terms()) {
    for (const auto& [eb, cb] : b.terms()) {
      OperatorWord w;
      w.coeff = ca * cb;
      w.gens.insert(w.gens.end(), ea.first, Generator::Qh);
      w.gens.insert(w.gens.end(), ea.second, Generator::Ph);
      w.gens.insert(w.gens.end(), eb.first, Generator::Qh);
      w.gens.insert(w.gens.end(), eb.second, Generator::Ph);
      words.push_back(std::move(w));
    }
  }
  return normal_form_by_rewriting(words);
}

inline ordcal::WeylElement oracle_commutator(const ordcal::WeylElement& a,
                                             const ordcal::WeylElement& b) {
  return oracle_product(a, b) - oracle_product(b, a);
}

}  // namespace testoracle
