#include "egh/polynomial.hpp"

#include <algorithm>
#include <stdexcept>

namespace egh {

std::strong_ordering order_compare(MonomialOrder order, const Monomial& u, const Monomial& v) {
  if (order == MonomialOrder::lex) return lex_compare(u, v);
  if (u.var_count() != v.var_count())
    throw std::invalid_argument("monomials live in different ambient rings");
  if (u.degree() != v.degree())
    return u.degree() > v.degree() ? std::strong_ordering::greater : std::strong_ordering::less;
  for (int i = u.var_count() - 1; i >= 0; --i) {
    if (u.exponent(i) != v.exponent(i))
      return u.exponent(i) < v.exponent(i) ? std::strong_ordering::greater
                                           : std::strong_ordering::less;
  }
  return std::strong_ordering::equal;
}

PolyRingPtr make_poly_ring(std::vector<std::string> names, std::uint32_t p) {
  return std::make_shared<const PolyRing>(PolyRing{AmbientInfo(std::move(names)), PrimeField(p)});
}

namespace {

bool degrevlex_greater(const Term& a, const Term& b) {
  return order_compare(MonomialOrder::degrevlex, a.monomial, b.monomial) ==
         std::strong_ordering::greater;
}

void check_same_ring(const Polynomial& f, const Polynomial& g) {
  if (f.ring() != g.ring() && !(*f.ring() == *g.ring()))
    throw std::invalid_argument("polynomials live in different rings");
}

}  // namespace

Polynomial::Polynomial(PolyRingPtr ring, std::vector<Term> terms) : ring_(std::move(ring)) {
  if (!ring_) throw std::invalid_argument("null ring");
  const PrimeField& fp = ring_->field;
  const int n = ring_->ambient.var_count();
  for (Term& t : terms) {
    if (t.monomial.var_count() != n)
      throw std::invalid_argument("term does not match ambient ring");
    t.coefficient %= fp.modulus();
  }
  std::sort(terms.begin(), terms.end(), degrevlex_greater);
  for (const Term& t : terms) {
    if (terms_.empty() || !(terms_.back().monomial == t.monomial)) {
      if (t.coefficient != 0) terms_.push_back(t);
    } else {
      terms_.back().coefficient = fp.add(terms_.back().coefficient, t.coefficient);
      if (terms_.back().coefficient == 0) terms_.pop_back();
    }
  }
  for (const Term& t : terms_) {
    if (t.monomial.degree() != terms_.front().monomial.degree())
      throw std::invalid_argument("polynomial is not homogeneous");
  }
}

Polynomial Polynomial::zero(PolyRingPtr ring) { return Polynomial(std::move(ring), {}); }

Polynomial Polynomial::from_monomial(PolyRingPtr ring, Monomial m, PrimeField::Element c) {
  std::vector<Term> terms{{std::move(m), c}};
  return Polynomial(std::move(ring), std::move(terms));
}

const Term& Polynomial::leading_term(MonomialOrder order) const {
  if (terms_.empty()) throw std::domain_error("leading term of the zero polynomial");
  if (order == MonomialOrder::degrevlex) return terms_.front();
  return *std::max_element(terms_.begin(), terms_.end(), [](const Term& a, const Term& b) {
    return order_compare(MonomialOrder::lex, a.monomial, b.monomial) == std::strong_ordering::less;
  });
}

bool Polynomial::operator==(const Polynomial& other) const {
  if (!(*ring_ == *other.ring_)) return false;
  if (terms_.size() != other.terms_.size()) return false;
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    if (!(terms_[i].monomial == other.terms_[i].monomial)) return false;
    if (terms_[i].coefficient != other.terms_[i].coefficient) return false;
  }
  return true;
}

Polynomial add(const Polynomial& f, const Polynomial& g) {
  check_same_ring(f, g);
  if (f.is_zero()) return g;
  if (g.is_zero()) return f;
  if (f.degree() != g.degree())
    throw std::invalid_argument("sum of homogeneous polynomials of different degrees");
  const PrimeField& fp = f.field();
  std::vector<Term> merged;
  merged.reserve(f.terms().size() + g.terms().size());
  auto it = f.terms().begin();
  auto jt = g.terms().begin();
  while (it != f.terms().end() && jt != g.terms().end()) {
    const auto cmp = order_compare(MonomialOrder::degrevlex, it->monomial, jt->monomial);
    if (cmp == std::strong_ordering::greater) {
      merged.push_back(*it++);
    } else if (cmp == std::strong_ordering::less) {
      merged.push_back(*jt++);
    } else {
      const auto c = fp.add(it->coefficient, jt->coefficient);
      if (c != 0) merged.push_back({it->monomial, c});
      ++it;
      ++jt;
    }
  }
  merged.insert(merged.end(), it, f.terms().end());
  merged.insert(merged.end(), jt, g.terms().end());
  return Polynomial(f.ring(), std::move(merged));
}

Polynomial negate(const Polynomial& f) {
  std::vector<Term> terms(f.terms());
  for (Term& t : terms) t.coefficient = f.field().neg(t.coefficient);
  return Polynomial(f.ring(), std::move(terms));
}

Polynomial sub(const Polynomial& f, const Polynomial& g) { return add(f, negate(g)); }

Polynomial scale(const Polynomial& f, PrimeField::Element c) {
  std::vector<Term> terms(f.terms());
  for (Term& t : terms) t.coefficient = f.field().mul(t.coefficient, c);
  return Polynomial(f.ring(), std::move(terms));
}

Polynomial mul_term(const Polynomial& f, const Monomial& m, PrimeField::Element c) {
  std::vector<Term> terms;
  terms.reserve(f.terms().size());
  for (const Term& t : f.terms()) terms.push_back({mul(t.monomial, m), f.field().mul(t.coefficient, c)});
  return Polynomial(f.ring(), std::move(terms));
}

Polynomial monic(const Polynomial& f, MonomialOrder order) {
  if (f.is_zero()) throw std::domain_error("monic of the zero polynomial");
  return scale(f, f.field().inv(f.leading_term(order).coefficient));
}

std::string to_string(const Polynomial& f, bool compact) {
  if (f.is_zero()) return "0";
  const std::uint32_t p = f.field().modulus();
  std::string out;
  for (const Term& t : f.terms()) {
    // Balanced representative: coefficients above p/2 print as negatives.
    const bool negative = t.coefficient > p / 2;
    const std::uint32_t mag = negative ? p - t.coefficient : t.coefficient;
    if (out.empty()) {
      if (negative) out += '-';
    } else {
      out += compact ? (negative ? "-" : "+") : (negative ? " - " : " + ");
    }
    const std::string mono = to_string(t.monomial, f.ring()->ambient);
    if (mono == "1") {
      out += std::to_string(mag);
    } else {
      if (mag != 1) out += std::to_string(mag) + "*";
      out += mono;
    }
  }
  return out;
}

}  // namespace egh
