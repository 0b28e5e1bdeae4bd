#include "egh/conjecture.hpp"

#include <algorithm>
#include <stdexcept>

#include "egh/box.hpp"

namespace egh {

int socle_degree(const DegreeSequence& a) { return a.socle_degree(); }

bool gap_condition(const DegreeSequence& a) {
  if (!a.all_finite()) throw std::invalid_argument("gap condition needs finite entries");
  std::int64_t partial = 0;  // sum of (a_i - 1) over the prefix
  for (int j = 0; j < a.length(); ++j) {
    if (j >= 1 && a.entry(j) <= partial) return false;
    partial += a.entry(j) - 1;
  }
  return true;
}

int dual_degree(const DegreeSequence& a, int d) {
  const int s = a.socle_degree();
  if (d < 0 || d > s - 1) throw std::out_of_range("degree outside [0, s-1]");
  return s - d - 1;
}

bool egh_at_degree(const BigInt& h_d, const BigInt& h_d1, const DegreeSequence& a, int n, int d) {
  if (h_d1 < 0 || h_d1 > slice_dimension(n, d + 1))
    throw std::out_of_range("quotient value out of range at degree d+1");
  return h_d1 <= lpp_growth(a, n, d, h_d);  // lpp_growth validates h_d
}

MonomialIdeal liaison_transform(const MonomialIdeal& J, const DegreeSequence& a) {
  if (a.length() != J.var_count())
    throw std::invalid_argument("liaison needs a full-length degree sequence");
  if (!a.all_finite()) throw std::invalid_argument("liaison needs finite degrees");
  if (!contains_pure_powers(J, a))
    throw std::invalid_argument("ideal does not contain the pure powers of the sequence");
  return colon(MonomialIdeal::pure_powers(J.ambient(), a), J);
}

bool liaison_check(const MonomialIdeal& J, const DegreeSequence& a) {
  const int s = a.socle_degree();
  const MonomialIdeal M = MonomialIdeal::pure_powers(J.ambient(), a);
  const MonomialIdeal linked = liaison_transform(J, a);
  const HilbertFunction hM = hilbert_function(M, s);
  const HilbertFunction hJ = hilbert_function(J, s);
  const HilbertFunction hL = hilbert_function(linked, s);
  for (int t = 0; t <= s; ++t)
    if (hM.at(t) != hJ.at(t) + hL.at(s - t)) return false;
  return true;
}

namespace {

// Image of an ideal containing <x_n> worth of slack in one variable fewer:
// keep the generators free of x_n and drop the last coordinate.
MonomialIdeal project_drop_last(const MonomialIdeal& I) {
  const int n = I.var_count();
  std::vector<std::string> names(I.ambient().names().begin(), I.ambient().names().end() - 1);
  std::vector<Monomial> gens;
  for (const Monomial& g : I.generators()) {
    if (g.exponent(n - 1) > 0) continue;
    gens.emplace_back(std::vector<int>(g.exponents().begin(), g.exponents().end() - 1));
  }
  return {AmbientInfo(std::move(names)), std::move(gens)};
}

Monomial lift_with_power(const Monomial& m, int extra_var_power) {
  std::vector<int> exps(m.exponents());
  exps.push_back(extra_var_power);
  return Monomial(std::move(exps));
}

}  // namespace

SliceDecomposition::SliceDecomposition(int slicing_variable, std::vector<Slice> slices,
                                       MonomialIdeal result, int bound)
    : slicing_variable_(slicing_variable),
      slices_(std::move(slices)),
      result_(std::move(result)),
      bound_(bound) {
  for (std::size_t j = 1; j < slices_.size(); ++j) {
    if (!contains(slices_[j].compressed.whole(), slices_[j - 1].compressed.whole()))
      throw std::logic_error("compressed slices are not nested; this is a bug");
  }
}

bool SliceDecomposition::verify(const MonomialIdeal& original) const {
  const int n = result_.var_count();
  const int N = saturation_index();
  const ExponentBounds free(static_cast<std::size_t>(n), DegreeSequence::kUnbounded);
  const HilbertFunction h_original = hilbert_function(original, bound_);
  const HilbertFunction h_result = hilbert_function(result_, bound_);
  if (!(h_original == h_result)) return false;
  // Stacked slices partition the monomials of the result.
  for (int t = 0; t <= bound_; ++t) {
    for (const Monomial& m : box_monomials(n, free, t)) {
      const int j = std::min(m.exponent(n - 1), N);
      std::vector<int> lower(m.exponents().begin(), m.exponents().end() - 1);
      const bool in_slice =
          contains(slices_[static_cast<std::size_t>(j)].compressed.whole(), Monomial(lower));
      if (in_slice != contains(result_, m)) return false;
    }
  }
  return true;
}

SliceDecomposition slice_construct(const MonomialIdeal& I, const DegreeSequence& a, int bound) {
  const int n = I.var_count();
  const int r = a.length();
  if (r >= n) throw std::invalid_argument("slice construction needs length(a) < n");
  if (!a.all_finite()) throw std::invalid_argument("slice construction needs finite degrees");
  if (!contains_pure_powers(I, a))
    throw std::invalid_argument("ideal does not contain the pure powers of the sequence");
  if (bound < 0) bound = std::max(a.socle_degree() + 2, I.max_generator_degree() + 1);

  const SaturationChain sat = colon_power_saturate(I, n - 1);
  std::vector<Slice> slices;
  slices.reserve(sat.chain.size());
  std::vector<Monomial> k_gens;
  for (int j = 0; j < static_cast<int>(sat.chain.size()); ++j) {
    MonomialIdeal projected = project_drop_last(sat.chain[static_cast<std::size_t>(j)]);
    LppIdeal compressed = cl_compress(projected, a, bound);
    for (const Monomial& g : compressed.whole().generators())
      k_gens.push_back(lift_with_power(g, j));
    slices.push_back({j, std::move(projected), std::move(compressed)});
  }
  MonomialIdeal result(I.ambient(), std::move(k_gens));
  return SliceDecomposition(n - 1, std::move(slices), std::move(result), bound);
}

bool slice_hf_identity(const MonomialIdeal& I, int bound) {
  if (bound < 0) throw std::invalid_argument("negative bound");
  const int n = I.var_count();
  const SaturationChain sat = colon_power_saturate(I, n - 1);
  const int N = sat.stabilization_index;
  const MonomialIdeal last_var(I.ambient(), {Monomial::variable(n, n - 1)});
  std::vector<HilbertFunction> slice_hf;
  for (const MonomialIdeal& link : sat.chain)
    slice_hf.push_back(hilbert_function(sum(link, last_var), bound));
  const HilbertFunction h = hilbert_function(I, bound);
  for (int t = 0; t <= bound; ++t) {
    BigInt total = 0;
    for (int j = 0; j <= t; ++j)
      total += slice_hf[static_cast<std::size_t>(std::min(j, N))].at(t - j);
    if (total != h.at(t)) return false;
  }
  return true;
}

}  // namespace egh
