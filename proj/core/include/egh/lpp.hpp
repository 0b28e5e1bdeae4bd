#pragma once

#include <stdexcept>
#include <string>

#include "egh/hilbert.hpp"
#include "egh/monomial_ideal.hpp"

namespace egh {

// Raised by lpp_from_hf when the requested Hilbert function cannot be
// realized by any ideal containing the pure powers of the sequence.
class NotAchievableError : public std::runtime_error {
 public:
  explicit NotAchievableError(int degree);
  int degree() const noexcept { return degree_; }

 private:
  int degree_;
};

// J = <x_i^{a_i} : a_i finite> + L with L lexicographic. The lex part and
// the assembled ideal are materialized up to bound(); with unbounded
// entries in the sequence the Hilbert function is certified only there.
class LppIdeal {
 public:
  LppIdeal(AmbientInfo ambient, DegreeSequence a, MonomialIdeal lex_part, int bound);

  const AmbientInfo& ambient() const noexcept { return whole_.ambient(); }
  const DegreeSequence& sequence() const noexcept { return a_; }
  const MonomialIdeal& lex_part() const noexcept { return lex_part_; }
  const MonomialIdeal& whole() const noexcept { return whole_; }
  int bound() const noexcept { return bound_; }

  bool operator==(const LppIdeal&) const = default;

 private:
  DegreeSequence a_;
  MonomialIdeal lex_part_;
  MonomialIdeal whole_;
  int bound_;
};

// The two readings of the lex-plus-powers predicate. The box-lex condition
// asks that in every degree the box monomials of I form a lex-initial
// segment of the box; the strict reading additionally requires the finite
// pure powers to lie in I. Both ship: the classical example
// <x^2, x*y, y^4> with a = (2, 3) satisfies only the weak reading.
bool is_lpp(const MonomialIdeal& I, const DegreeSequence& a);       // strict
bool is_lpp_weak(const MonomialIdeal& I, const DegreeSequence& a);  // box-lex only

// The unique lex-plus-powers ideal whose standard monomials in each degree
// d <= h.bound() are the h(d) lex-smallest box monomials. Throws
// NotAchievableError at the first degree where no such ideal exists.
LppIdeal lpp_from_hf(const DegreeSequence& a, AmbientInfo ambient, const HilbertFunction& h);
LppIdeal lpp_from_hf(const DegreeSequence& a, int n, const HilbertFunction& h);

// H(S/J, d+1) for the unique J = <x^a> + L with L lex generated in degree
// d and H(S/J, d) = q. This is the maximal H(S/I, d+1) over ideals
// containing a degree-a regular sequence with H(S/I, d) = q, assuming the
// per-degree conjecture. q is quotient-side.
BigInt lpp_growth(const DegreeSequence& a, int n, int d, const BigInt& q);

// Macaulay's bound q^<d>: lpp_growth with every entry unbounded. Computed
// both by lex-segment construction and by Macaulay-representation
// arithmetic; the two routes must agree.
BigInt macaulay_growth(int n, int d, const BigInt& q);
BigInt macaulay_rep_growth(int d, const BigInt& q);  // representation arithmetic, d >= 1

// lpp_growth with a padded to length n by unbounded entries: the refined
// Macaulay bound for ideals containing a length-r regular sequence of
// degrees a. Always <= macaulay_growth(n, d, q).
BigInt refined_bound(int n, const DegreeSequence& a, int d, const BigInt& q);

// The lex-plus-powers ideal with the same Hilbert function as I, which
// must contain the finite pure powers of a. bound < 0 picks the box socle
// degree when the padded sequence is fully finite, and the max generator
// degree + 1 otherwise.
LppIdeal cl_compress(const MonomialIdeal& I, const DegreeSequence& a, int bound = -1);

}  // namespace egh
