#include "egh/conjecture.hpp"

#include "doctest.h"
#include "support.hpp"

using namespace egh;
using egh::testing::ambient;
using egh::testing::degrees;
using egh::testing::ideal;

TEST_CASE("socle degree") {
  CHECK(socle_degree(degrees({2, 2})) == 2);
  CHECK(socle_degree(degrees({2, 3})) == 3);
  CHECK(socle_degree(degrees({2, 3, 5})) == 7);
  CHECK_THROWS_AS(socle_degree(DegreeSequence::all_unbounded(2)), std::domain_error);
}

TEST_CASE("gap condition") {
  CHECK(gap_condition(degrees({2, 3, 5})));
  CHECK(gap_condition(degrees({2, 2})));
  CHECK_FALSE(gap_condition(degrees({2, 2, 2})));
  CHECK(gap_condition(degrees({7})));
  CHECK(gap_condition(DegreeSequence()));
}

TEST_CASE("gap condition is monotone in later entries") {
  const std::vector<std::int64_t> base{2, 3, 5};
  CHECK(gap_condition(degrees(base)));
  for (std::int64_t bump = 6; bump <= 12; ++bump)
    CHECK(gap_condition(degrees({2, 3, bump})));
}

TEST_CASE("under the gap condition the top degree clears half the socle") {
  // a_n > floor((s-1)/2) + 1 for every passing sequence, n <= 5, entries <= 9.
  for (int n = 1; n <= 5; ++n) {
    std::vector<std::int64_t> entries(static_cast<std::size_t>(n), 2);
    while (true) {
      const DegreeSequence a(entries);
      if (gap_condition(a)) {
        const int s = a.socle_degree();
        CHECK(a.entry(n - 1) > (s - 1) / 2 + 1);
      }
      int pos = n - 1;
      while (pos >= 0 && entries[static_cast<std::size_t>(pos)] == 9) --pos;
      if (pos < 0) break;
      const std::int64_t bumped = entries[static_cast<std::size_t>(pos)] + 1;
      for (int i = pos; i < n; ++i) entries[static_cast<std::size_t>(i)] = bumped;
    }
  }
}

TEST_CASE("dual degree") {
  CHECK(dual_degree(degrees({2, 3}), 0) == 2);
  CHECK(dual_degree(degrees({2, 3}), 1) == 1);
  CHECK(dual_degree(degrees({2, 2}), 0) == 1);
  CHECK_THROWS_AS(dual_degree(degrees({2, 2}), 2), std::out_of_range);
}

TEST_CASE("per-degree check on quotient values") {
  CHECK(egh_at_degree(1, 1, degrees({2, 3}), 2, 1));
  // (1, 1) at degree 2 is unreachable: x*y^2 needs both x*y and y^2 standard.
  CHECK_FALSE(egh_at_degree(1, 1, degrees({2, 3}), 2, 2));
  CHECK_FALSE(egh_at_degree(2, 3, degrees({2, 3}), 2, 1));
  CHECK(egh_at_degree(0, 0, degrees({2, 3}), 2, 1));
  CHECK_THROWS_AS(egh_at_degree(3, 0, degrees({2, 3}), 2, 1), std::out_of_range);
}

TEST_CASE("per-degree check matches exhaustive achievability") {
  for (const auto& entries : {std::vector<std::int64_t>{2, 2}, {2, 3}, {3, 3}}) {
    const DegreeSequence a(entries);
    const int s = a.socle_degree();
    const auto all = egh::testing::all_ideals_containing_powers(2, a);
    for (int d = 0; d < s; ++d) {
      const BigInt box_d = box_count(2, a, d);
      const BigInt box_d1 = box_count(2, a, d + 1);
      for (BigInt q = 0; q <= box_d; ++q) {
        for (BigInt q1 = 0; q1 <= box_d1; ++q1) {
          bool witnessed = false;
          for (const MonomialIdeal& J : all) {
            const auto h = hilbert_function(J, d + 1);
            if (h.at(d) == q && h.at(d + 1) == q1) {
              witnessed = true;
              break;
            }
          }
          CHECK(egh_at_degree(q, q1, a, 2, d) == witnessed);
        }
      }
    }
  }
}

TEST_CASE("liaison transform on the worked examples") {
  const auto M22 = degrees({2, 2});
  CHECK(liaison_transform(ideal(2, {"x^2", "y^2"}), M22).is_unit());
  CHECK(liaison_transform(ideal(2, {"x", "y^2"}), M22) == ideal(2, {"x", "y^2"}));
  CHECK(liaison_transform(ideal(2, {"x", "y"}), M22) == ideal(2, {"x^2", "x*y", "y^2"}));
  CHECK_THROWS_AS(liaison_transform(ideal(2, {"x"}), M22), std::invalid_argument);
}

TEST_CASE("liaison identity on the worked example") {
  CHECK(liaison_check(ideal(2, {"x", "y^2"}), degrees({2, 2})));
  CHECK(liaison_check(ideal(2, {"x^2", "y^2"}), degrees({2, 2})));
}

TEST_CASE("liaison identity holds for every ideal above the pure powers") {
  for (const auto& entries : {std::vector<std::int64_t>{2, 2}, {2, 3}, {3, 3}}) {
    const DegreeSequence a(entries);
    for (const MonomialIdeal& J : egh::testing::all_ideals_containing_powers(2, a))
      CHECK(liaison_check(J, a));
  }
}

TEST_CASE("liaison is an involution on the tested range") {
  for (const auto& entries : {std::vector<std::int64_t>{2, 2}, {2, 3}}) {
    const DegreeSequence a(entries);
    for (const MonomialIdeal& J : egh::testing::all_ideals_containing_powers(2, a))
      CHECK(liaison_transform(liaison_transform(J, a), a) == J);
  }
}

TEST_CASE("per-degree checks pass on both sides of the linkage") {
  for (const auto& entries : {std::vector<std::int64_t>{2, 2}, {2, 3}}) {
    const DegreeSequence a(entries);
    const int s = a.socle_degree();
    for (const MonomialIdeal& J : egh::testing::all_ideals_containing_powers(2, a)) {
      const auto linked = liaison_transform(J, a);
      const auto hJ = hilbert_function(J, s + 1);
      const auto hL = hilbert_function(linked, s + 1);
      for (int d = 0; d <= s; ++d) {
        CHECK(egh_at_degree(hJ.at(d), hJ.at(d + 1), a, 2, d));
        CHECK(egh_at_degree(hL.at(d), hL.at(d + 1), a, 2, d));
      }
    }
  }
}

TEST_CASE("slice construction on the worked examples") {
  SUBCASE("<x^2, y*z> with a = (2)") {
    const auto I = ideal(3, {"x^2", "y*z"});
    const auto out = slice_construct(I, degrees({2}));
    CHECK(out.result() == ideal(3, {"x^2", "x*z", "y^2*z"}));
    CHECK(out.saturation_index() == 1);
    CHECK(out.slices()[0].compressed.whole() == ideal(2, {"x^2"}));
    CHECK(out.slices()[1].compressed.whole() == ideal(2, {"x", "y^2"}));
    CHECK(out.verify(I));
  }
  SUBCASE("fixed points in two variables") {
    const auto I = ideal(2, {"x^2", "x*y"});
    CHECK(slice_construct(I, degrees({2})).result() == I);
    const auto J = ideal(2, {"x^2", "y^2"});
    const auto out = slice_construct(J, degrees({2}));
    CHECK(out.result() == J);
    CHECK(out.saturation_index() == 2);
  }
  SUBCASE("preconditions") {
    CHECK_THROWS_AS(slice_construct(ideal(2, {"x^2"}), degrees({2, 2})),
                    std::invalid_argument);  // needs r < n
    CHECK_THROWS_AS(slice_construct(ideal(3, {"x*y"}), degrees({2})), std::invalid_argument);
  }
}

TEST_CASE("slice construction preserves Hilbert functions on random instances") {
  for (std::uint64_t i = 0; i < 40; ++i) {
    const auto instance = egh::testing::random_slice_instance(0xDECAF, i);
    const int bound = instance.a.socle_degree() + 2;
    const auto out = slice_construct(instance.ideal, instance.a, bound);
    CHECK(hilbert_function(out.result(), bound) == hilbert_function(instance.ideal, bound));
    CHECK(contains_pure_powers(out.result(), instance.a));
    CHECK(out.verify(instance.ideal));
    for (std::size_t j = 1; j < out.slices().size(); ++j)
      CHECK(contains(out.slices()[j].compressed.whole(),
                     out.slices()[j - 1].compressed.whole()));
  }
}

TEST_CASE("Hilbert function decomposition along the last variable") {
  CHECK(slice_hf_identity(ideal(3, {"x^2", "y*z"}), 4));
  CHECK(slice_hf_identity(MonomialIdeal::zero(ambient(3)), 5));
  CHECK(slice_hf_identity(ideal(2, {"x^2", "x*y^3"}), 6));
  for (std::uint64_t i = 0; i < 25; ++i) {
    const auto instance = egh::testing::random_slice_instance(0xBEEF, i);
    CHECK(slice_hf_identity(instance.ideal, instance.a.socle_degree() + 2));
  }
}
