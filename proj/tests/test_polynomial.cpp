#include "egh/polynomial.hpp"

#include "doctest.h"
#include "egh/input.hpp"
#include "support.hpp"

using namespace egh;

namespace {

PolyRingPtr ring2(std::uint32_t p = 7) { return make_poly_ring({"x", "y"}, p); }

Polynomial poly(const PolyRingPtr& ring, const std::string& text) {
  return parse_polynomial(text, ring);
}

}  // namespace

TEST_CASE("prime field arithmetic") {
  const PrimeField f7(7);
  CHECK(f7.reduce(-1) == 6);
  CHECK(f7.add(5, 4) == 2);
  CHECK(f7.mul(3, 5) == 1);
  CHECK(f7.inv(3) == 5);
  CHECK(f7.pow(3, 6) == 1);
  CHECK_THROWS_AS(f7.inv(0), std::domain_error);
  CHECK_THROWS_AS(PrimeField(4), std::invalid_argument);
  CHECK_THROWS_AS(PrimeField(1 << 16), std::invalid_argument);
  CHECK(PrimeField(2).modulus() == 2);
  CHECK(PrimeField(65521).modulus() == 65521);
}

TEST_CASE("polynomials are homogeneous with canonical term order") {
  const auto r = ring2();
  const auto f = poly(r, "x^2 - y^2");
  CHECK(f.degree() == 2);
  CHECK(f.terms().size() == 2);
  CHECK(f.terms().front().monomial == Monomial({2, 0}));  // degrevlex descending
  CHECK_THROWS_AS(poly(r, "x^2 + y"), ParseError);
  CHECK(poly(r, "x*y - x*y").is_zero());
  CHECK(poly(r, "3*x^2 + 4*x^2").is_zero());  // coefficients collapse mod 7
}

TEST_CASE("degrevlex vs lex leading terms") {
  const auto r3 = make_poly_ring({"x", "y", "z"}, 7);
  const auto f = poly(r3, "x*z^2 + y^3");
  CHECK(f.leading_term(MonomialOrder::degrevlex).monomial == Monomial({0, 3, 0}));
  CHECK(f.leading_term(MonomialOrder::lex).monomial == Monomial({1, 0, 2}));
  // degree dominates in degrevlex
  CHECK(order_compare(MonomialOrder::degrevlex, Monomial({0, 0, 3}), Monomial({2, 0, 0})) ==
        std::strong_ordering::greater);
}

TEST_CASE("arithmetic stays in the field") {
  const auto r = ring2();
  const auto f = poly(r, "x^2 + 3*x*y");
  const auto g = poly(r, "2*x^2 - 3*x*y");
  CHECK(add(f, g) == poly(r, "3*x^2"));
  CHECK(sub(f, f).is_zero());
  CHECK(scale(f, 2) == poly(r, "2*x^2 + 6*x*y"));
  CHECK(mul_term(f, Monomial({0, 1}), 1) == poly(r, "x^2*y + 3*x*y^2"));
  CHECK(monic(poly(r, "3*x^2 + 3*y^2")) == poly(r, "x^2 + y^2"));
  const auto other = make_poly_ring({"x", "y"}, 11);
  CHECK_THROWS_AS(add(f, poly(other, "x^2")), std::invalid_argument);
}

TEST_CASE("text form uses balanced representatives and reparses") {
  const auto r = ring2();
  CHECK(to_string(poly(r, "x^2 - y^2")) == "x^2 - y^2");
  CHECK(to_string(poly(r, "x^2 + 6*y^2")) == "x^2 - y^2");
  CHECK(to_string(poly(r, "5*x*y")) == "-2*x*y");
  CHECK(to_string(Polynomial::zero(r)) == "0");
  CHECK(to_string(poly(r, "x^2 - y^2"), true) == "x^2-y^2");
  auto rng = make_rng(31);
  for (int trial = 0; trial < 50; ++trial) {
    const int d = 1 + static_cast<int>(uniform_below(rng, 4));
    std::vector<Term> terms;
    const ExponentBounds free(2, DegreeSequence::kUnbounded);
    for (const Monomial& m : box_monomials(2, free, d))
      if (uniform01(rng) < 0.6)
        terms.push_back({m, static_cast<PrimeField::Element>(1 + uniform_below(rng, 6))});
    const Polynomial f(r, std::move(terms));
    if (f.is_zero()) continue;
    CHECK(parse_polynomial(to_string(f), r) == f);
  }
}
