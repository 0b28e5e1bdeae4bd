#pragma once

#include <vector>

#include "egh/lpp.hpp"

namespace egh {

// s = sum of (a_i - 1). All entries must be finite.
int socle_degree(const DegreeSequence& a);

// True iff a_j > sum_{i<j} (a_i - 1) for every j >= 2; vacuously true for
// singletons. Sequences passing this are the ones whose per-degree
// conjecture instances reduce to the halfway point via duality.
bool gap_condition(const DegreeSequence& a);

// The degree paired with d under liaison duality: s - d - 1.
int dual_degree(const DegreeSequence& a, int d);

// Per-degree conjecture check on quotient-side values: true iff some ideal
// containing the pure powers matches h_d at degree d and h_d1 at d+1,
// decided as h_d1 <= lpp_growth(a, n, d, h_d).
bool egh_at_degree(const BigInt& h_d, const BigInt& h_d1, const DegreeSequence& a, int n, int d);

// (M : J) for M = <x_i^{a_i}>, requiring J to contain M and a to be fully
// finite of full length.
MonomialIdeal liaison_transform(const MonomialIdeal& J, const DegreeSequence& a);

// The linkage identity H(S/M, t) = H(S/J, t) + H(S/(M:J), s-t) for all
// 0 <= t <= s.
bool liaison_check(const MonomialIdeal& J, const DegreeSequence& a);

// One slice of the construction that lifts compressions across a variable:
// the ideal (I : x_n^j) + <x_n> seen in one variable fewer, and its
// lex-plus-powers compression there.
struct Slice {
  int power = 0;
  MonomialIdeal projected;
  LppIdeal compressed;
};

// Result of rebuilding I slice by slice along the last variable: K is
// generated by the compressed slices stacked back up, has the Hilbert
// function of I up to bound(), and contains the pure powers of a.
class SliceDecomposition {
 public:
  SliceDecomposition(int slicing_variable, std::vector<Slice> slices, MonomialIdeal result,
                     int bound);

  int slicing_variable() const noexcept { return slicing_variable_; }
  int saturation_index() const noexcept { return static_cast<int>(slices_.size()) - 1; }
  const std::vector<Slice>& slices() const noexcept { return slices_; }
  const MonomialIdeal& result() const noexcept { return result_; }
  int bound() const noexcept { return bound_; }

  // Re-checks the slice bookkeeping: nested compressed slices, pairwise
  // disjoint stacked monomial sets covering exactly the monomials of the
  // result, degree by degree up to the bound.
  bool verify(const MonomialIdeal& original) const;

 private:
  int slicing_variable_;
  std::vector<Slice> slices_;
  MonomialIdeal result_;
  int bound_;
};

// The slice construction along x_n for a monomial ideal I containing
// x_i^{a_i} for i <= r = length(a) < n. bound < 0 defaults to
// socle_degree(a) + 2 or the max generator degree + 1, whichever is larger.
SliceDecomposition slice_construct(const MonomialIdeal& I, const DegreeSequence& a,
                                   int bound = -1);

// Checks H(S/I, t) = sum_{j=0}^{t} H(S/((I : x_n^j) + <x_n>), t - j) for
// all t <= bound, with the terms past the saturation index using the
// stabilized colon.
bool slice_hf_identity(const MonomialIdeal& I, int bound);

}  // namespace egh
