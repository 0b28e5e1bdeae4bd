#include "egh/regular.hpp"

#include <algorithm>

#include "doctest.h"
#include "egh/input.hpp"
#include "support.hpp"

using namespace egh;

namespace {

Polynomial poly(const PolyRingPtr& r, const std::string& text) {
  return parse_polynomial(text, r);
}

using egh::testing::random_certifier_instance;

}  // namespace

TEST_CASE("regularity of the worked examples") {
  const auto r2 = make_poly_ring({"x", "y"}, 7);
  CHECK(is_regular_sequence(std::vector<Polynomial>{poly(r2, "x^2"), poly(r2, "y^3")}).regular);
  const auto bad =
      is_regular_sequence(std::vector<Polynomial>{poly(r2, "x"), poly(r2, "x^2")});
  CHECK_FALSE(bad.regular);
  CHECK(bad.witness_degree == 2);
  const auto f2 = make_poly_ring({"x", "y"}, 2);
  CHECK_FALSE(
      is_regular_sequence(std::vector<Polynomial>{poly(f2, "x + y"), poly(f2, "x - y")}).regular);
  const auto f7 = make_poly_ring({"x", "y"}, 7);
  CHECK(
      is_regular_sequence(std::vector<Polynomial>{poly(f7, "x + y"), poly(f7, "x - y")}).regular);
}

TEST_CASE("too many or degenerate forms are rejected") {
  const auto r2 = make_poly_ring({"x", "y"}, 7);
  CHECK_THROWS_AS(is_regular_sequence(std::vector<Polynomial>{
                      poly(r2, "x"), poly(r2, "y"), poly(r2, "x^2")}),
                  std::invalid_argument);
  CHECK_THROWS_AS(is_regular_sequence(std::vector<Polynomial>{Polynomial::zero(r2)}),
                  std::invalid_argument);
}

TEST_CASE("quotient dimension via vertex covers") {
  const auto r2 = make_poly_ring({"x", "y"}, 7);
  CHECK(quotient_dimension(PolynomialIdeal(r2, {poly(r2, "x*y")})) == 1);
  CHECK(quotient_dimension(PolynomialIdeal(r2, {poly(r2, "x^2"), poly(r2, "y^3")})) == 0);
  CHECK(quotient_dimension(PolynomialIdeal(r2, {})) == 2);
}

TEST_CASE("random regular sequences are regular and deterministic") {
  const auto ring = make_poly_ring({"x", "y", "z"}, 101);
  const DegreeSequence a({2, 3});
  const auto fs = random_regular_sequence(a, ring, 1);
  CHECK(fs.size() == 2);
  CHECK(fs[0].degree() == 2);
  CHECK(fs[1].degree() == 3);
  CHECK(is_regular_sequence(fs).regular);
  CHECK(random_regular_sequence(a, ring, 1) == fs);  // same seed, same forms
  const auto one_var = make_poly_ring({"x"}, 101);
  const auto single = random_regular_sequence(DegreeSequence({2}), one_var, 5);
  REQUIRE(single.size() == 1);
  CHECK(single[0].terms().front().monomial == Monomial({2}));
}

TEST_CASE("random containing ideals echo their inputs") {
  const auto ring = make_poly_ring({"x", "y"}, 101);
  const auto fs = random_regular_sequence(DegreeSequence({2, 2}), ring, 9);
  const auto none = random_containing_ideal(fs, std::vector<int>{}, 0.5, 3);
  CHECK(none.generators() == fs);
  const std::vector<int> extra{3, 4};
  const auto I = random_containing_ideal(fs, extra, 0.5, 3);
  CHECK(I.generators().size() == 4);
  CHECK(I.generators()[2].degree() == 3);
  CHECK(I.generators()[3].degree() == 4);
  const auto again = random_containing_ideal(fs, extra, 0.5, 3);
  CHECK(I.generators() == again.generators());
}

TEST_CASE("certifiers agree on 200 regular and 200 broken inputs, any permutation") {
  int checked = 0;
  for (std::uint64_t i = 0; i < 200; ++i) {
    auto instance = random_certifier_instance(0xC0FFEE, i);
    CHECK(is_regular_sequence(instance.regular).regular);
    CHECK_FALSE(is_regular_sequence(instance.broken).regular);
    // permutation invariance: rotate and reverse
    auto rotated = instance.regular;
    std::rotate(rotated.begin(), rotated.begin() + 1, rotated.end());
    CHECK(is_regular_sequence(rotated).regular);
    auto broken_reversed = instance.broken;
    std::reverse(broken_reversed.begin(), broken_reversed.end());
    CHECK_FALSE(is_regular_sequence(broken_reversed).regular);
    ++checked;
  }
  CHECK(checked == 200);
}

TEST_CASE("complete intersections have symmetric Hilbert functions") {
  for (std::uint64_t i = 0; i < 20; ++i) {
    std::mt19937_64 rng = make_instance_rng(0xABBA, i);
    const int n = 2 + static_cast<int>(uniform_below(rng, 2));
    const auto ring = make_poly_ring(AmbientInfo::with_default_names(n).names(), 101);
    std::vector<std::int64_t> entries;
    for (int k = 0; k < n; ++k) entries.push_back(2 + static_cast<std::int64_t>(uniform_below(rng, 2)));
    std::sort(entries.begin(), entries.end());
    const DegreeSequence a(entries);
    const int s = a.socle_degree();
    const auto fs = random_regular_sequence(a, ring, rng());
    const auto h = hilbert_function_poly(PolynomialIdeal(ring, fs), s + 1);
    for (int d = 0; d <= s; ++d) CHECK(h.at(d) == h.at(s - d));
    CHECK(h.at(s + 1) == 0);
  }
}
