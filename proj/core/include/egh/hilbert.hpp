#pragma once

#include <string>
#include <vector>

#include "egh/bigint.hpp"
#include "egh/degree_sequence.hpp"
#include "egh/monomial_ideal.hpp"

namespace egh {

enum class HilbertSide { quotient, ideal };

// A finite table degree -> value, valid for 0 <= degree <= bound(). There
// is no extrapolation past the bound: reading there throws.
class HilbertFunction {
 public:
  HilbertFunction(int var_count, HilbertSide side, std::vector<BigInt> values);

  int var_count() const noexcept { return var_count_; }
  HilbertSide side() const noexcept { return side_; }
  int bound() const noexcept { return static_cast<int>(values_.size()) - 1; }
  const std::vector<BigInt>& values() const noexcept { return values_; }

  const BigInt& at(int degree) const;

  // Value of the other side at this degree: the two sides of a degree sum
  // to the full slice dimension C(d+n-1, n-1).
  BigInt complement_at(int degree) const;
  HilbertFunction complement() const;

  bool operator==(const HilbertFunction&) const = default;

 private:
  int var_count_;
  HilbertSide side_;
  std::vector<BigInt> values_;
};

std::string to_string(const HilbertFunction& h);  // "(1, 2, 1, 1, 0)"

// Quotient-side Hilbert function of S/I by degree-slice enumeration,
// exact, for 0 <= d <= bound. Subject to the slice budget.
HilbertFunction hilbert_function(const MonomialIdeal& I, int bound);

// H(S/<x_1^{a_1},...,x_r^{a_r}>, d) in n variables: coefficients of
// prod_i (1 + t + ... + t^{a_i - 1}) * (1 - t)^{-(n-r)}. All entries of a
// must be finite.
HilbertFunction ci_hilbert(const DegreeSequence& a, int n, int bound);

}  // namespace egh
