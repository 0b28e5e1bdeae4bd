#include "egh/groebner.hpp"

#include "doctest.h"
#include "egh/input.hpp"
#include "egh/regular.hpp"
#include "support.hpp"

using namespace egh;

namespace {

PolyRingPtr ring2(std::uint32_t p = 7) { return make_poly_ring({"x", "y"}, p); }

Polynomial poly(const PolyRingPtr& r, const std::string& text) {
  return parse_polynomial(text, r);
}

PolynomialIdeal ideal_of(const PolyRingPtr& r, const std::vector<std::string>& gens) {
  std::vector<Polynomial> fs;
  for (const auto& g : gens) fs.push_back(poly(r, g));
  return {r, std::move(fs)};
}

using egh::testing::random_groebner_instance;

}  // namespace

TEST_CASE("normal form on the worked examples") {
  const auto r = ring2();
  const std::vector<Polynomial> g1{poly(r, "x*y")};
  CHECK(normal_form(poly(r, "x^2*y"), g1, MonomialOrder::degrevlex).is_zero());
  const std::vector<Polynomial> g2{poly(r, "x^2 - y^2")};
  CHECK(normal_form(poly(r, "x^2"), g2, MonomialOrder::degrevlex) == poly(r, "y^2"));
  const std::vector<Polynomial> g3{poly(r, "x^2")};
  CHECK(normal_form(poly(r, "y^3"), g3, MonomialOrder::degrevlex) == poly(r, "y^3"));
  CHECK_THROWS_AS(normal_form(poly(r, "x"), std::vector<Polynomial>{}, MonomialOrder::degrevlex),
                  std::invalid_argument);
}

TEST_CASE("s-polynomials") {
  const auto r = ring2();
  const auto s = s_polynomial(poly(r, "x^2 - y^2"), poly(r, "x*y"), MonomialOrder::degrevlex);
  CHECK(s == poly(r, "-y^3"));
  CHECK(s_polynomial(poly(r, "x*y"), poly(r, "x*y"), MonomialOrder::degrevlex).is_zero());
  // coprime leading monomials: the s-polynomial reduces to zero on the pair
  const auto s2 = s_polynomial(poly(r, "x^2"), poly(r, "y^2"), MonomialOrder::degrevlex);
  CHECK(s2.is_zero());
  CHECK_THROWS_AS(s_polynomial(Polynomial::zero(r), poly(r, "x"), MonomialOrder::degrevlex),
                  std::invalid_argument);
}

TEST_CASE("buchberger on the worked examples") {
  const auto r = ring2();
  SUBCASE("circle-and-line style pair gains y^3") {
    const auto basis =
        buchberger(ideal_of(r, {"x^2 - y^2", "x*y"}).generators(), MonomialOrder::degrevlex);
    REQUIRE(basis.size() == 3);
    CHECK(basis[0] == poly(r, "x^2 - y^2"));
    CHECK(basis[1] == poly(r, "x*y"));
    CHECK(basis[2] == poly(r, "y^3"));
  }
  SUBCASE("linear monic generators are already a basis") {
    const auto basis = buchberger(ideal_of(r, {"x", "y"}).generators(), MonomialOrder::degrevlex);
    REQUIRE(basis.size() == 2);
    CHECK(basis[0] == poly(r, "x"));
    CHECK(basis[1] == poly(r, "y"));
  }
  SUBCASE("coprime leading monomials are already a basis") {
    const auto basis =
        buchberger(ideal_of(r, {"x^2", "y^3"}).generators(), MonomialOrder::degrevlex);
    REQUIRE(basis.size() == 2);
  }
}

TEST_CASE("every s-polynomial of the basis reduces to zero; rerun is identity") {
  for (std::uint64_t i = 0; i < 40; ++i) {
    const auto I = random_groebner_instance(0xACE, i);
    if (I.generators().empty()) continue;
    for (const MonomialOrder order : {MonomialOrder::degrevlex, MonomialOrder::lex}) {
      const auto basis = buchberger(I.generators(), order);
      if (basis.empty()) continue;
      for (std::size_t a = 0; a < basis.size(); ++a)
        for (std::size_t b = a + 1; b < basis.size(); ++b)
          CHECK(normal_form(s_polynomial(basis[a], basis[b], order), basis, order).is_zero());
      CHECK(buchberger(basis, order) == basis);
      for (const Polynomial& g : I.generators())
        CHECK(normal_form(g, basis, order).is_zero());
    }
  }
}

TEST_CASE("initial ideal on the worked examples") {
  const auto r = ring2();
  CHECK(initial_ideal(ideal_of(r, {"x^2 - y^2", "x*y"})) ==
        egh::testing::ideal(2, {"x^2", "x*y", "y^3"}));
  CHECK(initial_ideal(ideal_of(r, {"x^2", "x*y"})) == egh::testing::ideal(2, {"x^2", "x*y"}));
  CHECK(initial_ideal(ideal_of(r, {"x + y"})) == egh::testing::ideal(2, {"x"}));
}

TEST_CASE("Hilbert functions through the initial ideal") {
  const auto r = ring2();
  CHECK(hilbert_function_poly(ideal_of(r, {"x^2 - y^2", "x*y"}), 4).values() ==
        std::vector<BigInt>{1, 2, 1, 0, 0});
  const auto zero = PolynomialIdeal(r, {});
  CHECK(hilbert_function_poly(zero, 3).values() == std::vector<BigInt>{1, 2, 3, 4});
  CHECK(hilbert_function_poly(ideal_of(r, {"x^2", "y^3"}), 4) ==
        ci_hilbert(egh::testing::degrees({2, 3}), 2, 4));
}

TEST_CASE("rank oracle on the worked examples") {
  const auto r = ring2();
  const auto I = ideal_of(r, {"x^2 - y^2", "x*y"});
  CHECK(hf_rank_oracle(I, 2) == 1);
  CHECK(hf_rank_oracle(I, 0) == 1);
  CHECK(hf_rank_oracle(I, 3) == 0);
}

TEST_CASE("Groebner route equals the rank oracle on 200 seeded instances") {
  for (std::uint64_t i = 0; i < 200; ++i) {
    const auto I = random_groebner_instance(0xFEED, i);
    const auto h = hilbert_function_poly(I, 6);
    for (int d = 0; d <= 6; ++d) CHECK(h.at(d) == hf_rank_oracle(I, d));
  }
}

TEST_CASE("Hilbert function is order independent") {
  for (std::uint64_t i = 0; i < 60; ++i) {
    const auto I = random_groebner_instance(0xDEED, i);
    CHECK(hilbert_function_poly(I, 6, MonomialOrder::degrevlex) ==
          hilbert_function_poly(I, 6, MonomialOrder::lex));
  }
}

TEST_CASE("degree-0 generators are rejected") {
  const auto r = ring2();
  CHECK_THROWS_AS(PolynomialIdeal(r, {poly(r, "3")}), std::invalid_argument);
}
