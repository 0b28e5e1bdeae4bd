#pragma once

#include <string>
#include <vector>

#include "egh/degree_sequence.hpp"
#include "egh/monomial.hpp"

namespace egh {

// A monomial ideal held by its minimal generators, canonically ordered
// (degree ascending, lex descending within a degree). Immutable.
class MonomialIdeal {
 public:
  // Minimalizes and canonicalizes the generating set.
  MonomialIdeal(AmbientInfo ambient, std::vector<Monomial> generators);

  static MonomialIdeal zero(AmbientInfo ambient);
  static MonomialIdeal unit(AmbientInfo ambient);
  // <x_i^{a_i} : a_i finite>, indices mapped onto the first length(a) variables.
  static MonomialIdeal pure_powers(AmbientInfo ambient, const DegreeSequence& a);

  const AmbientInfo& ambient() const noexcept { return ambient_; }
  int var_count() const noexcept { return ambient_.var_count(); }
  const std::vector<Monomial>& generators() const noexcept { return generators_; }

  bool is_zero() const noexcept { return generators_.empty(); }
  bool is_unit() const noexcept;
  int max_generator_degree() const noexcept;  // -1 for the zero ideal

  bool operator==(const MonomialIdeal&) const = default;

 private:
  AmbientInfo ambient_;
  std::vector<Monomial> generators_;
};

// Membership: some generator divides m.
bool contains(const MonomialIdeal& ideal, const Monomial& m);
bool contains(const MonomialIdeal& outer, const MonomialIdeal& inner);

// Divisibility-minimal subset generating the same ideal.
MonomialIdeal minimalize(AmbientInfo ambient, std::vector<Monomial> generators);

MonomialIdeal sum(const MonomialIdeal& I, const MonomialIdeal& J);
MonomialIdeal intersect(const MonomialIdeal& I, const MonomialIdeal& J);

// (I : g) = < m / gcd(m, g) : m generator of I >.
MonomialIdeal colon(const MonomialIdeal& I, const Monomial& g);
// (I : J) as the intersection of (I : g) over generators g of J. The colon
// by the zero ideal is the unit ideal (vacuous intersection).
MonomialIdeal colon(const MonomialIdeal& I, const MonomialIdeal& J);

// The least N >= 0 with (I : x_v^N) = (I : x_v^{N+1}), together with the
// chain (I : x_v^j) for j = 0..N.
struct SaturationChain {
  int stabilization_index = 0;
  std::vector<MonomialIdeal> chain;
};
SaturationChain colon_power_saturate(const MonomialIdeal& I, int var);

// Ideal generated by the generators of I of degree < D.
MonomialIdeal truncate_below_degree(const MonomialIdeal& I, int D);

// True iff x_i^{a_i} lies in I for every finite entry of a.
bool contains_pure_powers(const MonomialIdeal& I, const DegreeSequence& a);

// Text form: `<x^2, x*y, y^4>`; `<>` for the zero ideal.
std::string to_string(const MonomialIdeal& ideal);

}  // namespace egh
