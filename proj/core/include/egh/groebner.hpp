#pragma once

#include <optional>
#include <span>

#include "egh/hilbert.hpp"
#include "egh/monomial_ideal.hpp"
#include "egh/polynomial.hpp"

namespace egh {

// A homogeneous ideal over a prime field. Generators of degree 0 are
// rejected; zero generators are dropped. The Groebner basis is computed on
// demand and cached per order (the cache is not synchronized: share
// instances across threads only after forcing the basis).
class PolynomialIdeal {
 public:
  PolynomialIdeal(PolyRingPtr ring, std::vector<Polynomial> generators);

  const PolyRingPtr& ring() const noexcept { return ring_; }
  const std::vector<Polynomial>& generators() const noexcept { return generators_; }
  const std::vector<Polynomial>& groebner_basis(MonomialOrder order) const;

 private:
  PolyRingPtr ring_;
  std::vector<Polynomial> generators_;
  mutable std::optional<std::vector<Polynomial>> basis_[2];
};

// Remainder of f on division by G: no term of the result is divisible by a
// leading monomial of G. Deterministic given the order and the order of G.
Polynomial normal_form(const Polynomial& f, std::span<const Polynomial> basis,
                       MonomialOrder order);

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, MonomialOrder order);

// Buchberger's algorithm with the normal pair strategy (lowest lcm degree
// first, ties by creation index) and the coprimality criterion. The result
// is auto-reduced, monic, and canonically sorted, so recomputing on it is
// the identity.
std::vector<Polynomial> buchberger(std::span<const Polynomial> generators, MonomialOrder order);
std::vector<Polynomial> buchberger(const PolynomialIdeal& I, MonomialOrder order);

MonomialIdeal initial_ideal(const PolynomialIdeal& I,
                            MonomialOrder order = MonomialOrder::degrevlex);

// Quotient-side Hilbert function through the initial ideal.
HilbertFunction hilbert_function_poly(const PolynomialIdeal& I, int bound,
                                      MonomialOrder order = MonomialOrder::degrevlex);

// Independent linear-algebra route: H(S/I, d) = dim S_d minus the rank of
// the matrix of all degree-d multiples of the generators. Subject to the
// slice budget.
BigInt hf_rank_oracle(const PolynomialIdeal& I, int d);

}  // namespace egh
