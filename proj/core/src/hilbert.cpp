#include "egh/hilbert.hpp"

#include <stdexcept>

#include "egh/box.hpp"
#include "egh/budget.hpp"

namespace egh {

HilbertFunction::HilbertFunction(int var_count, HilbertSide side, std::vector<BigInt> values)
    : var_count_(var_count), side_(side), values_(std::move(values)) {
  if (var_count_ < 1) throw std::invalid_argument("variable count must be positive");
  if (values_.empty()) throw std::invalid_argument("Hilbert function needs at least degree 0");
  for (int d = 0; d <= bound(); ++d) {
    const BigInt& v = values_[static_cast<std::size_t>(d)];
    if (v < 0) throw std::invalid_argument("negative Hilbert function value");
    if (v > slice_dimension(var_count_, d))
      throw std::invalid_argument("Hilbert function value exceeds the slice dimension");
  }
}

const BigInt& HilbertFunction::at(int degree) const {
  if (degree < 0 || degree > bound())
    throw std::out_of_range("Hilbert function read past its validity bound");
  return values_[static_cast<std::size_t>(degree)];
}

BigInt HilbertFunction::complement_at(int degree) const {
  return slice_dimension(var_count_, degree) - at(degree);
}

HilbertFunction HilbertFunction::complement() const {
  std::vector<BigInt> vals;
  vals.reserve(values_.size());
  for (int d = 0; d <= bound(); ++d) vals.push_back(complement_at(d));
  return {var_count_,
          side_ == HilbertSide::quotient ? HilbertSide::ideal : HilbertSide::quotient,
          std::move(vals)};
}

std::string to_string(const HilbertFunction& h) {
  std::string out = "(";
  for (int d = 0; d <= h.bound(); ++d) {
    if (d > 0) out += ", ";
    out += h.at(d).str();
  }
  out += ")";
  return out;
}

HilbertFunction hilbert_function(const MonomialIdeal& I, int bound) {
  if (bound < 0) throw std::invalid_argument("negative bound");
  const int n = I.var_count();
  const ExponentBounds free(static_cast<std::size_t>(n), DegreeSequence::kUnbounded);
  std::vector<BigInt> values;
  values.reserve(static_cast<std::size_t>(bound) + 1);
  for (int d = 0; d <= bound; ++d) {
    require_within_budget(slice_dimension(n, d), "degree slice enumeration");
    BigInt standard = 0;
    for (const Monomial& m : box_monomials(n, free, d))
      if (!contains(I, m)) ++standard;
    values.push_back(std::move(standard));
  }
  return {n, HilbertSide::quotient, std::move(values)};
}

HilbertFunction ci_hilbert(const DegreeSequence& a, int n, int bound) {
  if (bound < 0) throw std::invalid_argument("negative bound");
  if (!a.all_finite()) throw std::invalid_argument("ci_hilbert needs a fully finite sequence");
  if (a.length() > n) throw std::invalid_argument("degree sequence longer than variable count");
  std::vector<BigInt> coeffs(static_cast<std::size_t>(bound) + 1, 0);
  coeffs[0] = 1;
  // Multiply by (1 + t + ... + t^{a_i-1}) for each finite entry.
  for (int i = 0; i < a.length(); ++i) {
    const std::int64_t ai = a.entry(i);
    std::vector<BigInt> next(coeffs.size(), 0);
    for (std::size_t d = 0; d < coeffs.size(); ++d) {
      if (coeffs[d] == 0) continue;
      for (std::int64_t j = 0; j < ai && d + static_cast<std::size_t>(j) < next.size(); ++j)
        next[d + static_cast<std::size_t>(j)] += coeffs[d];
    }
    coeffs = std::move(next);
  }
  // Multiply by (1 - t)^{-(n-r)}: r-fold prefix sums, once per free variable.
  for (int i = 0; i < n - a.length(); ++i)
    for (std::size_t d = 1; d < coeffs.size(); ++d) coeffs[d] += coeffs[d - 1];
  return {n, HilbertSide::quotient, std::move(coeffs)};
}

}  // namespace egh
