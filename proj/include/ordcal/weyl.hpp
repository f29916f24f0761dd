#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ordcal/polynomial.hpp"
#include "ordcal/rational.hpp"

namespace ordcal {

/// Exponent pair (n, m) of a phase-space monomial q^n p^m, or of the
/// normal-form operator word qh^n ph^m.
using ExpPair = std::pair<unsigned, unsigned>;

/// Commutative polynomial in the canonical pair (q, p) with exact real
/// coefficients.
class ClassicalPoly {
 public:
  ClassicalPoly() = default;
  ClassicalPoly(Rational c) { add_term({0, 0}, std::move(c)); }  // NOLINT
  ClassicalPoly(long c) : ClassicalPoly(Rational(c)) {}          // NOLINT

  static ClassicalPoly monomial(unsigned n, unsigned m, Rational c = Rational(1)) {
    ClassicalPoly f;
    f.add_term({n, m}, std::move(c));
    return f;
  }
  static ClassicalPoly q() { return monomial(1, 0); }
  static ClassicalPoly p() { return monomial(0, 1); }

  const std::map<ExpPair, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  unsigned degree() const;

  void add_term(ExpPair e, Rational c);

  ClassicalPoly operator-() const;
  ClassicalPoly operator+(const ClassicalPoly& o) const;
  ClassicalPoly operator-(const ClassicalPoly& o) const;
  ClassicalPoly operator*(const ClassicalPoly& o) const;
  ClassicalPoly operator*(const Rational& k) const;

  ClassicalPoly diff_q() const;
  ClassicalPoly diff_p() const;

  bool operator==(const ClassicalPoly& o) const { return terms_ == o.terms_; }

  std::string str() const;

 private:
  std::map<ExpPair, Rational> terms_;
};

/// {f, g} = df/dq dg/dp - df/dp dg/dq  (symplectic form dp ^ dq).
ClassicalPoly poisson_bracket(const ClassicalPoly& f, const ClassicalPoly& g);

/// Element of the algebra generated by qh, ph with [qh, ph] = i, stored in
/// the q-left normal form: a finite sum of words qh^n ph^m with Gaussian
/// rational coefficients.  The identity operator is the empty word.
class WeylElement {
 public:
  WeylElement() = default;
  WeylElement(GaussianRational c) { add_term({0, 0}, std::move(c)); }  // NOLINT
  WeylElement(long c) : WeylElement(GaussianRational(Rational(c))) {}  // NOLINT

  static WeylElement word(unsigned n, unsigned m, GaussianRational c = GaussianRational(Rational(1)));
  static WeylElement qh() { return word(1, 0); }
  static WeylElement ph() { return word(0, 1); }
  static WeylElement identity() { return word(0, 0); }

  const std::map<ExpPair, GaussianRational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  unsigned degree() const;

  /// Nonzero multiple of the identity?  Returns the constant if the element
  /// is exactly c*I (including c = 0 for the zero element).
  std::optional<GaussianRational> as_constant() const;

  void add_term(ExpPair e, GaussianRational c);

  WeylElement operator-() const;
  WeylElement operator+(const WeylElement& o) const;
  WeylElement operator-(const WeylElement& o) const;
  /// Product, renormalized with ph^m qh^r expanded by the closed-form
  /// reordering rule of the commutation relation.
  WeylElement operator*(const WeylElement& o) const;
  WeylElement operator*(const GaussianRational& k) const;

  bool operator==(const WeylElement& o) const { return terms_ == o.terms_; }

  std::string str() const;

 private:
  std::map<ExpPair, GaussianRational> terms_;
};

/// [A, B] = AB - BA in normal form.
WeylElement commutator(const WeylElement& a, const WeylElement& b);

enum class Generator { Qh, Ph };

/// A raw operator word: coefficient times an ordered product of generators.
struct OperatorWord {
  GaussianRational coeff;
  std::vector<Generator> gens;
};

/// Folds a word into normal form through the algebra product.
WeylElement weyl_normal_form(const OperatorWord& word);
WeylElement weyl_normal_form(const std::vector<OperatorWord>& words);

enum class OrderingScheme {
  WeylSymmetric,  // average of all interleavings, equal weight
  NormalPLeft,    // all ph factors moved to the left of all qh factors
};

/// Lifts a classical polynomial to an operator through an ordering rule,
/// then normal-forms the result.  Linear in f.
WeylElement apply_ordering(const ClassicalPoly& f, OrderingScheme scheme);

/// The forced assignment on polynomials of degree <= 2:
/// 1 -> I, q -> qh, p -> ph, q^2 -> qh^2, p^2 -> ph^2,
/// qp -> (qh ph + ph qh)/2.  Throws DegreeExceeded above degree 2.
WeylElement quantize_u2(const ClassicalPoly& f);

/// Assignment table on phase-space monomials, extended by linearity.
class AssignmentTable {
 public:
  void assign(ExpPair monomial, WeylElement image) { table_[monomial] = std::move(image); }
  bool defined(ExpPair monomial) const { return table_.count(monomial) > 0; }

  /// Linear extension.  Throws MissingAssignment naming the offending
  /// polynomial if some monomial has no image.
  WeylElement extend(const ClassicalPoly& f) const;

  static AssignmentTable u2_table();
  static AssignmentTable from_ordering(const std::vector<ExpPair>& basis, OrderingScheme scheme);

 private:
  std::map<ExpPair, WeylElement> table_;
};

struct PairCheck {
  ExpPair f;
  ExpPair g;
  ClassicalPoly bracket;
  WeylElement lhs;  // image of {f, g}
  WeylElement rhs;  // (1/i) [f^, g^]
  bool pass = false;
};

struct HomomorphismReport {
  std::vector<PairCheck> pairs;
  bool identity_ok = false;  // table sends 1 to I (when 1 is in the basis)
  bool all_pass() const;
  std::vector<PairCheck> failures() const;
};

/// For every unordered pair {f, g} of basis monomials, tests
/// image({f,g}) == (1/i)[image(f), image(g)] exactly.
HomomorphismReport check_homomorphism(const AssignmentTable& table,
                                      const std::vector<ExpPair>& basis);

/// The two classically equal degree-3 expressions for q^2 p^2 and their
/// symmetric-ordering images.  The classical residual vanishes; the operator
/// residual is a constant multiple of the identity, computed here and never
/// assumed.
struct ObstructionWitness {
  ClassicalPoly classical_lhs;   // (1/9) {q^3, p^3}
  ClassicalPoly classical_rhs;   // (1/3) {q^2 p, q p^2}
  ClassicalPoly classical_residual;
  WeylElement lhs;               // (1/9) (1/i) [W(q^3), W(p^3)]
  WeylElement rhs;               // (1/3) (1/i) [W(q^2 p), W(q p^2)]
  WeylElement residual;          // lhs - rhs
  std::optional<GaussianRational> residual_constant;  // set iff residual = c*I
};

ObstructionWitness gvh_witness();

/// Formal kernel action <q'|H^|q> applied to a polynomial test function:
/// the momentum integral collapses to (-i)^m d^m/dq^m [G(q,q') test(q)]
/// at q = q', with G = ((q+q')/2)^n for the mid-point rule and G = q^n for
/// the right-point rule.  Returns a polynomial in q'.
GaussianPolynomial prescription_action(OrderingScheme scheme, ExpPair monomial,
                                       const Polynomial& test);

/// The same monomial ordered as an operator and applied with qh = (q .) and
/// ph = (1/i) d/dq; expressed in q' for comparison with the kernel route.
GaussianPolynomial operator_action(const WeylElement& op, const Polynomial& test);

/// Names used by the two routes above.
inline const char* position_var() { return "q"; }
inline const char* position_var_out() { return "q'"; }

}  // namespace ordcal
