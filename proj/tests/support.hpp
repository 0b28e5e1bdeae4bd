#pragma once

// Shared helpers for the test suites: terse constructors driven by the
// input-language parsers, independent brute-force oracles, and the seeded
// random instance generators the campaigns use.

#include <algorithm>
#include <string>
#include <vector>

#include "egh/box.hpp"
#include "egh/input.hpp"
#include "egh/monomial_ideal.hpp"
#include "egh/regular.hpp"
#include "egh/rng.hpp"

namespace egh::testing {

inline AmbientInfo ambient(int n) { return AmbientInfo::with_default_names(n); }

inline Monomial mono(int n, const std::string& text) {
  return parse_monomial(text, ambient(n));
}

inline MonomialIdeal ideal(int n, const std::vector<std::string>& generators) {
  std::vector<Monomial> gens;
  for (const auto& g : generators) gens.push_back(mono(n, g));
  return {ambient(n), std::move(gens)};
}

inline DegreeSequence degrees(std::vector<std::int64_t> entries) {
  return DegreeSequence(std::move(entries));
}

// Independent counting oracle: plain recursion over exponent choices, no
// inclusion-exclusion, no shared code with box_count.
inline long long count_box_recursive(const ExponentBounds& bounds, std::size_t var, int degree) {
  if (var == bounds.size()) return degree == 0 ? 1 : 0;
  long long total = 0;
  const std::int64_t cap = bounds[var] == DegreeSequence::kUnbounded
                               ? degree
                               : std::min<std::int64_t>(degree, bounds[var] - 1);
  for (std::int64_t e = 0; e <= cap; ++e)
    total += count_box_recursive(bounds, var + 1, degree - static_cast<int>(e));
  return total;
}

// Brute-force colon membership: m lies in (I : J) iff m*g lies in I for
// every generator g of J.
inline bool colon_member_oracle(const MonomialIdeal& I, const MonomialIdeal& J,
                                const Monomial& m) {
  if (J.is_zero()) return true;  // colon by the zero ideal is the unit ideal
  for (const Monomial& g : J.generators())
    if (!contains(I, mul(m, g))) return false;
  return true;
}

// All monomial ideals containing the pure powers of a, for tiny boxes:
// every subset of the box closed under taking box multiples, added to the
// pure powers.
inline std::vector<MonomialIdeal> all_ideals_containing_powers(int n, const DegreeSequence& a) {
  const auto bounds = a.bounds(n);
  std::vector<Monomial> box;
  std::int64_t socle = 0;
  for (std::int64_t b : bounds) socle += b - 1;
  for (int d = 0; d <= static_cast<int>(socle); ++d)
    for (const Monomial& m : box_monomials(n, bounds, d)) box.push_back(m);
  if (box.size() > 20) throw std::invalid_argument("box too large to enumerate ideals");

  const MonomialIdeal powers = MonomialIdeal::pure_powers(ambient(n), a);
  std::vector<MonomialIdeal> out;
  for (std::size_t mask = 0; mask < (std::size_t{1} << box.size()); ++mask) {
    bool closed = true;
    for (std::size_t i = 0; i < box.size() && closed; ++i) {
      if (!(mask & (std::size_t{1} << i))) continue;
      for (std::size_t j = 0; j < box.size() && closed; ++j) {
        if (i == j || (mask & (std::size_t{1} << j))) continue;
        if (divides(box[i], box[j])) closed = false;  // a box multiple is missing
      }
    }
    if (!closed) continue;
    std::vector<Monomial> gens(powers.generators());
    for (std::size_t i = 0; i < box.size(); ++i)
      if (mask & (std::size_t{1} << i)) gens.push_back(box[i]);
    out.emplace_back(ambient(n), std::move(gens));
  }
  return out;
}

// A random monomial of the given degree: degree units thrown at variables.
inline Monomial random_monomial(std::mt19937_64& rng, int n, int degree) {
  std::vector<int> exps(static_cast<std::size_t>(n), 0);
  for (int i = 0; i < degree; ++i) ++exps[uniform_below(rng, static_cast<std::uint64_t>(n))];
  return Monomial(std::move(exps));
}

// One seeded instance for the slice-construction campaigns: a monomial
// ideal in n variables containing the pure powers of a random sequence of
// length r < n.
struct SliceInstance {
  MonomialIdeal ideal;
  DegreeSequence a;
};

inline SliceInstance random_slice_instance(std::uint64_t master_seed, std::uint64_t index) {
  std::mt19937_64 rng = make_instance_rng(master_seed, index);
  const int n = 3 + static_cast<int>(index % 2);
  const int r = 1 + static_cast<int>(uniform_below(rng, static_cast<std::uint64_t>(n - 1)));
  std::vector<std::int64_t> entries;
  for (int i = 0; i < r; ++i) entries.push_back(2 + static_cast<std::int64_t>(uniform_below(rng, 3)));
  std::sort(entries.begin(), entries.end());
  DegreeSequence a(std::move(entries));
  const int s = a.socle_degree();

  std::vector<Monomial> gens;
  for (int i = 0; i < r; ++i)
    gens.push_back(Monomial::pure_power(n, i, static_cast<int>(a.entry(i))));
  const int extra = 1 + static_cast<int>(uniform_below(rng, 4));
  for (int i = 0; i < extra; ++i) {
    const int degree = 2 + static_cast<int>(uniform_below(rng, static_cast<std::uint64_t>(s + 1)));
    gens.push_back(random_monomial(rng, n, degree));
  }
  return {MonomialIdeal(ambient(n), std::move(gens)), std::move(a)};
}

// Seeded random homogeneous ideals for the Groebner agreement campaigns.
inline PolynomialIdeal random_groebner_instance(std::uint64_t master, std::uint64_t index) {
  std::mt19937_64 rng = make_instance_rng(master, index);
  const int n = 2 + static_cast<int>(uniform_below(rng, 2));
  const std::uint32_t p = index % 2 == 0 ? 7 : 101;
  const auto ring = make_poly_ring(AmbientInfo::with_default_names(n).names(), p);
  const int count = 1 + static_cast<int>(uniform_below(rng, 3));
  std::vector<Polynomial> gens;
  for (int i = 0; i < count; ++i) {
    const int degree = 1 + static_cast<int>(uniform_below(rng, 4));
    gens.push_back(random_form(ring, degree, 0.5, rng));
  }
  return {ring, std::move(gens)};
}

// A random regular sequence and its broken sibling (last form replaced by
// a multiple of the first, so the sequence drops rank).
struct CertifierInstance {
  std::vector<Polynomial> regular;
  std::vector<Polynomial> broken;
};

inline CertifierInstance random_certifier_instance(std::uint64_t master, std::uint64_t index) {
  std::mt19937_64 rng = make_instance_rng(master, index);
  const int n = 2 + static_cast<int>(uniform_below(rng, 2));
  const std::uint32_t p = index % 2 == 0 ? 101 : 7;
  const auto ring = make_poly_ring(AmbientInfo::with_default_names(n).names(), p);
  // r >= 2: replacing the last form only breaks sequences with a partner
  const int r = 2 + static_cast<int>(uniform_below(rng, static_cast<std::uint64_t>(n - 1)));
  std::vector<std::int64_t> entries;
  for (int i = 0; i < r; ++i) entries.push_back(2 + static_cast<std::int64_t>(uniform_below(rng, 2)));
  std::sort(entries.begin(), entries.end());
  CertifierInstance out;
  out.regular = random_regular_sequence(DegreeSequence(entries), ring, rng());
  out.broken = out.regular;
  const int gap = static_cast<int>(entries.back() - entries.front());
  const Polynomial multiplier =
      gap == 0 ? Polynomial::from_monomial(
                     ring, Monomial::unit(n),
                     static_cast<PrimeField::Element>(1 + uniform_below(rng, p - 1)))
               : random_form(ring, gap, 0.7, rng);
  Polynomial replacement = Polynomial::zero(ring);
  for (const Term& t : multiplier.terms())
    replacement = add(replacement, mul_term(out.regular.front(), t.monomial, t.coefficient));
  out.broken.back() = replacement;
  return out;
}

}  // namespace egh::testing
