#include "ordcal/weyl.hpp"

#include <algorithm>

#include "ordcal/errors.hpp"

namespace ordcal {

// ---------------------------------------------------------------------------
// ClassicalPoly

void ClassicalPoly::add_term(ExpPair e, Rational c) {
  if (c.is_zero()) return;
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    terms_.emplace(e, std::move(c));
  } else {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

unsigned ClassicalPoly::degree() const {
  unsigned d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, e.first + e.second);
  return d;
}

ClassicalPoly ClassicalPoly::operator-() const {
  ClassicalPoly r;
  for (const auto& [e, c] : terms_) r.terms_[e] = -c;
  return r;
}

ClassicalPoly ClassicalPoly::operator+(const ClassicalPoly& o) const {
  ClassicalPoly r = *this;
  for (const auto& [e, c] : o.terms_) r.add_term(e, c);
  return r;
}

ClassicalPoly ClassicalPoly::operator-(const ClassicalPoly& o) const {
  ClassicalPoly r = *this;
  for (const auto& [e, c] : o.terms_) r.add_term(e, -c);
  return r;
}

ClassicalPoly ClassicalPoly::operator*(const ClassicalPoly& o) const {
  ClassicalPoly r;
  for (const auto& [ea, ca] : terms_)
    for (const auto& [eb, cb] : o.terms_)
      r.add_term({ea.first + eb.first, ea.second + eb.second}, ca * cb);
  return r;
}

ClassicalPoly ClassicalPoly::operator*(const Rational& k) const {
  ClassicalPoly r;
  if (k.is_zero()) return r;
  for (const auto& [e, c] : terms_) r.terms_[e] = c * k;
  return r;
}

ClassicalPoly ClassicalPoly::diff_q() const {
  ClassicalPoly r;
  for (const auto& [e, c] : terms_)
    if (e.first > 0) r.add_term({e.first - 1, e.second}, c * Rational(static_cast<long>(e.first)));
  return r;
}

ClassicalPoly ClassicalPoly::diff_p() const {
  ClassicalPoly r;
  for (const auto& [e, c] : terms_)
    if (e.second > 0) r.add_term({e.first, e.second - 1}, c * Rational(static_cast<long>(e.second)));
  return r;
}

namespace {

std::string monomial_str(const char* qn, const char* pn, ExpPair e) {
  std::string s;
  auto app = [&s](const char* v, unsigned k) {
    if (k == 0) return;
    if (!s.empty()) s += "*";
    s += v;
    if (k > 1) s += "^" + std::to_string(k);
  };
  app(qn, e.first);
  app(pn, e.second);
  return s;
}

// Descending total degree, then descending q-exponent: a stable display
// order with the leading term first.
std::vector<ExpPair> display_order(const std::vector<ExpPair>& keys) {
  std::vector<ExpPair> v = keys;
  std::sort(v.begin(), v.end(), [](ExpPair a, ExpPair b) {
    unsigned da = a.first + a.second, db = b.first + b.second;
    if (da != db) return da > db;
    return a.first > b.first;
  });
  return v;
}

}  // namespace

std::string ClassicalPoly::str() const {
  if (terms_.empty()) return "0";
  std::vector<ExpPair> keys;
  for (const auto& [e, c] : terms_) keys.push_back(e);
  std::string out;
  for (ExpPair e : display_order(keys)) {
    const Rational& c = terms_.at(e);
    std::string mono = monomial_str("q", "p", e);
    std::string mag = (c.sign() < 0 ? (-c).str() : c.str());
    std::string piece = (mono.empty()) ? mag : (mag == "1" ? mono : mag + "*" + mono);
    if (out.empty())
      out = (c.sign() < 0 ? "-" : "") + piece;
    else
      out += (c.sign() < 0 ? " - " : " + ") + piece;
  }
  return out;
}

ClassicalPoly poisson_bracket(const ClassicalPoly& f, const ClassicalPoly& g) {
  return f.diff_q() * g.diff_p() - f.diff_p() * g.diff_q();
}

// ---------------------------------------------------------------------------
// WeylElement

WeylElement WeylElement::word(unsigned n, unsigned m, GaussianRational c) {
  WeylElement w;
  w.add_term({n, m}, std::move(c));
  return w;
}

void WeylElement::add_term(ExpPair e, GaussianRational c) {
  if (c.is_zero()) return;
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    terms_.emplace(e, std::move(c));
  } else {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

unsigned WeylElement::degree() const {
  unsigned d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, e.first + e.second);
  return d;
}

std::optional<GaussianRational> WeylElement::as_constant() const {
  if (terms_.empty()) return GaussianRational(Rational(0));
  if (terms_.size() == 1 && terms_.begin()->first == ExpPair{0, 0}) return terms_.begin()->second;
  return std::nullopt;
}

WeylElement WeylElement::operator-() const {
  WeylElement r;
  for (const auto& [e, c] : terms_) r.terms_[e] = -c;
  return r;
}

WeylElement WeylElement::operator+(const WeylElement& o) const {
  WeylElement r = *this;
  for (const auto& [e, c] : o.terms_) r.add_term(e, c);
  return r;
}

WeylElement WeylElement::operator-(const WeylElement& o) const {
  WeylElement r = *this;
  for (const auto& [e, c] : o.terms_) r.add_term(e, -c);
  return r;
}

WeylElement WeylElement::operator*(const WeylElement& o) const {
  // qh^n1 ph^m1 * qh^n2 ph^m2 needs ph^m1 qh^n2 rewritten; with [qh,ph]=i,
  //   ph^m qh^r = sum_k (-i)^k k! C(m,k) C(r,k) qh^(r-k) ph^(m-k).
  WeylElement r;
  for (const auto& [ea, ca] : terms_) {
    for (const auto& [eb, cb] : o.terms_) {
      unsigned m = ea.second, rr = eb.first;
      unsigned kmax = std::min(m, rr);
      for (unsigned k = 0; k <= kmax; ++k) {
        GaussianRational coeff = ca * cb;
        coeff *= GaussianRational(Rational(0), Rational(-1)).pow(k);  // (-i)^k
        coeff *= GaussianRational(Rational::factorial(k) * Rational::binomial(m, k) *
                                  Rational::binomial(rr, k));
        r.add_term({ea.first + (rr - k), (m - k) + eb.second}, coeff);
      }
    }
  }
  return r;
}

WeylElement WeylElement::operator*(const GaussianRational& k) const {
  WeylElement r;
  if (k.is_zero()) return r;
  for (const auto& [e, c] : terms_) r.terms_[e] = c * k;
  return r;
}

std::string WeylElement::str() const {
  if (terms_.empty()) return "0";
  std::vector<ExpPair> keys;
  for (const auto& [e, c] : terms_) keys.push_back(e);
  std::string out;
  for (ExpPair e : display_order(keys)) {
    const GaussianRational& c = terms_.at(e);
    std::string mono = monomial_str("qh", "ph", e);
    if (mono.empty()) mono = "I";
    bool negative = (c.re().is_zero() ? c.im().sign() < 0 : c.re().sign() < 0) &&
                    (c.re().is_zero() || c.im().is_zero());
    GaussianRational mag = negative ? -c : c;
    std::string cs = mag.str();
    bool needs_parens = !mag.re().is_zero() && !mag.im().is_zero();
    std::string piece;
    if (mag.is_one())
      piece = mono;
    else if (needs_parens)
      piece = "(" + cs + ")*" + mono;
    else
      piece = cs + "*" + mono;
    if (out.empty())
      out = (negative ? "-" : "") + piece;
    else
      out += (negative ? " - " : " + ") + piece;
  }
  return out;
}

WeylElement commutator(const WeylElement& a, const WeylElement& b) { return a * b - b * a; }

WeylElement weyl_normal_form(const OperatorWord& word) {
  WeylElement acc(word.coeff);
  for (Generator g : word.gens) acc = acc * (g == Generator::Qh ? WeylElement::qh() : WeylElement::ph());
  return acc;
}

WeylElement weyl_normal_form(const std::vector<OperatorWord>& words) {
  WeylElement acc;
  for (const auto& w : words) acc = acc + weyl_normal_form(w);
  return acc;
}

// ---------------------------------------------------------------------------
// Ordering maps

WeylElement apply_ordering(const ClassicalPoly& f, OrderingScheme scheme) {
  WeylElement out;
  for (const auto& [e, c] : f.terms()) {
    unsigned n = e.first, m = e.second;
    if (scheme == OrderingScheme::NormalPLeft) {
      // q^n p^m -> ph^m qh^n
      OperatorWord w{GaussianRational(c), {}};
      w.gens.insert(w.gens.end(), m, Generator::Ph);
      w.gens.insert(w.gens.end(), n, Generator::Qh);
      out = out + weyl_normal_form(w);
      continue;
    }
    // All distinct interleavings of n qh's and m ph's, equal weight.
    std::vector<Generator> gens;
    gens.insert(gens.end(), n, Generator::Qh);
    gens.insert(gens.end(), m, Generator::Ph);
    std::sort(gens.begin(), gens.end());
    WeylElement sum;
    unsigned long count = 0;
    do {
      sum = sum + weyl_normal_form(OperatorWord{GaussianRational(Rational(1)), gens});
      ++count;
    } while (std::next_permutation(gens.begin(), gens.end()));
    GaussianRational weight(Rational(1, static_cast<long>(count)));
    out = out + sum * (weight * GaussianRational(c));
  }
  return out;
}

// ---------------------------------------------------------------------------
// The degree-2 table and homomorphism checking

AssignmentTable AssignmentTable::u2_table() {
  AssignmentTable t;
  t.assign({0, 0}, WeylElement::identity());
  t.assign({1, 0}, WeylElement::qh());
  t.assign({0, 1}, WeylElement::ph());
  t.assign({2, 0}, WeylElement::word(2, 0));
  t.assign({0, 2}, WeylElement::word(0, 2));
  // qp -> (qh ph + ph qh)/2
  WeylElement sym = (WeylElement::qh() * WeylElement::ph() + WeylElement::ph() * WeylElement::qh()) *
                    GaussianRational(Rational(1, 2));
  t.assign({1, 1}, sym);
  return t;
}

AssignmentTable AssignmentTable::from_ordering(const std::vector<ExpPair>& basis,
                                               OrderingScheme scheme) {
  AssignmentTable t;
  for (ExpPair e : basis) t.assign(e, apply_ordering(ClassicalPoly::monomial(e.first, e.second), scheme));
  return t;
}

WeylElement AssignmentTable::extend(const ClassicalPoly& f) const {
  WeylElement out;
  for (const auto& [e, c] : f.terms()) {
    auto it = table_.find(e);
    if (it == table_.end())
      throw MissingAssignment("no assignment for monomial " +
                              ClassicalPoly::monomial(e.first, e.second).str() + " needed by " +
                              f.str());
    out = out + it->second * GaussianRational(c);
  }
  return out;
}

WeylElement quantize_u2(const ClassicalPoly& f) {
  if (f.degree() > 2)
    throw DegreeExceeded("quantize_u2: polynomial of degree " + std::to_string(f.degree()) +
                         " exceeds the degree-2 subalgebra: " + f.str());
  static const AssignmentTable table = AssignmentTable::u2_table();
  return table.extend(f);
}

bool HomomorphismReport::all_pass() const {
  if (!identity_ok) return false;
  for (const auto& p : pairs)
    if (!p.pass) return false;
  return true;
}

std::vector<PairCheck> HomomorphismReport::failures() const {
  std::vector<PairCheck> out;
  for (const auto& p : pairs)
    if (!p.pass) out.push_back(p);
  return out;
}

HomomorphismReport check_homomorphism(const AssignmentTable& table,
                                      const std::vector<ExpPair>& basis) {
  HomomorphismReport rep;
  rep.identity_ok = true;
  for (ExpPair e : basis) {
    if (e == ExpPair{0, 0}) {
      rep.identity_ok = table.defined(e) &&
                        table.extend(ClassicalPoly(1)) == WeylElement::identity();
    }
  }
  const GaussianRational inv_i = GaussianRational::i().inverse();  // 1/i = -i
  for (size_t a = 0; a < basis.size(); ++a) {
    for (size_t b = a + 1; b < basis.size(); ++b) {
      PairCheck pc;
      pc.f = basis[a];
      pc.g = basis[b];
      ClassicalPoly f = ClassicalPoly::monomial(pc.f.first, pc.f.second);
      ClassicalPoly g = ClassicalPoly::monomial(pc.g.first, pc.g.second);
      pc.bracket = poisson_bracket(f, g);
      pc.lhs = table.extend(pc.bracket);
      pc.rhs = commutator(table.extend(f), table.extend(g)) * inv_i;
      pc.pass = (pc.lhs == pc.rhs);
      rep.pairs.push_back(std::move(pc));
    }
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Obstruction witness

ObstructionWitness gvh_witness() {
  ObstructionWitness w;
  ClassicalPoly q3 = ClassicalPoly::monomial(3, 0);
  ClassicalPoly p3 = ClassicalPoly::monomial(0, 3);
  ClassicalPoly q2p = ClassicalPoly::monomial(2, 1);
  ClassicalPoly qp2 = ClassicalPoly::monomial(1, 2);

  w.classical_lhs = poisson_bracket(q3, p3) * Rational(1, 9);
  w.classical_rhs = poisson_bracket(q2p, qp2) * Rational(1, 3);
  w.classical_residual = w.classical_lhs - w.classical_rhs;

  const GaussianRational inv_i = GaussianRational::i().inverse();
  auto wo = [](const ClassicalPoly& f) { return apply_ordering(f, OrderingScheme::WeylSymmetric); };
  w.lhs = commutator(wo(q3), wo(p3)) * (inv_i * GaussianRational(Rational(1, 9)));
  w.rhs = commutator(wo(q2p), wo(qp2)) * (inv_i * GaussianRational(Rational(1, 3)));
  w.residual = w.lhs - w.rhs;
  w.residual_constant = w.residual.as_constant();
  return w;
}

// ---------------------------------------------------------------------------
// Kernel prescriptions

GaussianPolynomial prescription_action(OrderingScheme scheme, ExpPair monomial,
                                       const Polynomial& test) {
  for (const auto& v : test.variables())
    if (v != position_var()) throw Error("prescription test polynomial must be univariate in q");
  unsigned n = monomial.first, m = monomial.second;

  GaussianPolynomial qv = GaussianPolynomial::variable(position_var());
  GaussianPolynomial qo = GaussianPolynomial::variable(position_var_out());

  GaussianPolynomial g;
  if (scheme == OrderingScheme::WeylSymmetric) {
    // mid-point: G = ((q + q')/2)^n
    g = ((qv + qo) * GaussianRational(Rational(1, 2))).pow(n);
  } else {
    // right-point: G = q^n
    g = qv.pow(n);
  }

  GaussianPolynomial testg;
  for (const auto& [mono, c] : test.terms()) testg.add_term(mono, GaussianRational(c));

  GaussianPolynomial body = g * testg;
  for (unsigned k = 0; k < m; ++k) body = body.diff(position_var());
  body = body * GaussianRational(Rational(0), Rational(-1)).pow(m);  // (-i)^m
  return body.substitute(position_var(), qo);
}

GaussianPolynomial operator_action(const WeylElement& op, const Polynomial& test) {
  for (const auto& v : test.variables())
    if (v != position_var()) throw Error("operator test polynomial must be univariate in q");
  GaussianPolynomial testg;
  for (const auto& [mono, c] : test.terms()) testg.add_term(mono, GaussianRational(c));

  GaussianPolynomial out;
  GaussianPolynomial qv = GaussianPolynomial::variable(position_var());
  for (const auto& [e, c] : op.terms()) {
    // qh^a ph^b acts as q^a * (-i d/dq)^b.
    GaussianPolynomial t = testg;
    for (unsigned k = 0; k < e.second; ++k) t = t.diff(position_var());
    t = t * GaussianRational(Rational(0), Rational(-1)).pow(e.second);
    t = t * qv.pow(e.first);
    out += t * c;
  }
  return out.substitute(position_var(), GaussianPolynomial::variable(position_var_out()));
}

}  // namespace ordcal
