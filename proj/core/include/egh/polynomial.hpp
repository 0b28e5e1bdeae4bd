#pragma once

#include <compare>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "egh/monomial.hpp"
#include "egh/prime_field.hpp"

namespace egh {

enum class MonomialOrder { lex, degrevlex };

// Total order used by the Groebner machinery: pure lex, or degree first
// with reverse-lex ties.
std::strong_ordering order_compare(MonomialOrder order, const Monomial& u, const Monomial& v);

struct PolyRing {
  AmbientInfo ambient;
  PrimeField field;
  bool operator==(const PolyRing&) const = default;
};
using PolyRingPtr = std::shared_ptr<const PolyRing>;

PolyRingPtr make_poly_ring(std::vector<std::string> names, std::uint32_t p);

struct Term {
  Monomial monomial;
  PrimeField::Element coefficient;  // always nonzero in stored polynomials
};

// A homogeneous polynomial over a prime field. Terms are kept in canonical
// degrevlex-descending order with nonzero coefficients; mixing degrees or
// rings is a hard error.
class Polynomial {
 public:
  Polynomial(PolyRingPtr ring, std::vector<Term> terms);
  static Polynomial zero(PolyRingPtr ring);
  static Polynomial from_monomial(PolyRingPtr ring, Monomial m, PrimeField::Element c = 1);

  const PolyRingPtr& ring() const noexcept { return ring_; }
  const PrimeField& field() const noexcept { return ring_->field; }
  int var_count() const noexcept { return ring_->ambient.var_count(); }
  const std::vector<Term>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  int degree() const noexcept { return terms_.empty() ? -1 : terms_.front().monomial.degree(); }

  const Term& leading_term(MonomialOrder order) const;  // throws on zero

  bool operator==(const Polynomial& other) const;

 private:
  PolyRingPtr ring_;
  std::vector<Term> terms_;
};

Polynomial add(const Polynomial& f, const Polynomial& g);
Polynomial sub(const Polynomial& f, const Polynomial& g);
Polynomial negate(const Polynomial& f);
Polynomial scale(const Polynomial& f, PrimeField::Element c);
Polynomial mul_term(const Polynomial& f, const Monomial& m, PrimeField::Element c);
// Scales the leading coefficient under the given order to 1; throws on zero.
Polynomial monic(const Polynomial& f, MonomialOrder order = MonomialOrder::degrevlex);

// `x^2 - y*z` style with balanced coefficient representatives; compact
// drops the spaces around + and -.
std::string to_string(const Polynomial& f, bool compact = false);

}  // namespace egh
