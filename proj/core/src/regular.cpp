#include "egh/regular.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>

#include "egh/box.hpp"

namespace egh {

namespace {

// Complete-intersection quotient series for arbitrary degrees >= 1:
// coefficients of prod_i (1 + ... + t^{deg_i - 1}) * (1 - t)^{-(n - r)}.
std::vector<BigInt> ci_series(const std::vector<int>& degrees, int n, int bound) {
  std::vector<BigInt> coeffs(static_cast<std::size_t>(bound) + 1, 0);
  coeffs[0] = 1;
  for (int deg : degrees) {
    std::vector<BigInt> next(coeffs.size(), 0);
    for (std::size_t d = 0; d < coeffs.size(); ++d) {
      if (coeffs[d] == 0) continue;
      for (int j = 0; j < deg && d + static_cast<std::size_t>(j) < next.size(); ++j)
        next[d + static_cast<std::size_t>(j)] += coeffs[d];
    }
    coeffs = std::move(next);
  }
  for (int i = 0; i < n - static_cast<int>(degrees.size()); ++i)
    for (std::size_t d = 1; d < coeffs.size(); ++d) coeffs[d] += coeffs[d - 1];
  return coeffs;
}

int min_variable_cover(const std::vector<Monomial>& generators, int n) {
  if (n > 30) throw std::invalid_argument("too many variables for the cover search");
  std::vector<std::uint32_t> supports;
  for (const Monomial& g : generators) {
    std::uint32_t mask = 0;
    for (int i = 0; i < n; ++i)
      if (g.exponent(i) > 0) mask |= 1u << i;
    supports.push_back(mask);
  }
  for (int size = 0; size <= n; ++size) {
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
      if (std::popcount(mask) != size) continue;
      bool covers = std::all_of(supports.begin(), supports.end(),
                                [mask](std::uint32_t s) { return (s & mask) != 0; });
      if (covers) return size;
    }
  }
  return n;
}

}  // namespace

int quotient_dimension(const PolynomialIdeal& I) {
  const int n = I.ring()->ambient.var_count();
  return n - min_variable_cover(initial_ideal(I).generators(), n);
}

RegularityCertificate is_regular_sequence(std::span<const Polynomial> fs) {
  if (fs.empty()) return {true, std::nullopt};
  const PolyRingPtr& ring = fs.front().ring();
  const int n = ring->ambient.var_count();
  if (static_cast<int>(fs.size()) > n)
    throw std::invalid_argument("sequence longer than the variable count");
  std::vector<int> degrees;
  for (const Polynomial& f : fs) {
    if (!(*f.ring() == *ring)) throw std::invalid_argument("forms from different rings");
    if (f.is_zero() || f.degree() < 1)
      throw std::invalid_argument("regular sequence entries must be forms of positive degree");
    degrees.push_back(f.degree());
  }
  std::sort(degrees.begin(), degrees.end());
  const int certification_bound =
      std::accumulate(degrees.begin(), degrees.end(), 0, std::plus<int>());

  PolynomialIdeal ideal(ring, std::vector<Polynomial>(fs.begin(), fs.end()));
  const HilbertFunction actual = hilbert_function_poly(ideal, certification_bound);
  const std::vector<BigInt> expected = ci_series(degrees, n, certification_bound);
  RegularityCertificate cert{true, std::nullopt};
  for (int d = 0; d <= certification_bound; ++d) {
    if (actual.at(d) != expected[static_cast<std::size_t>(d)]) {
      cert.regular = false;
      cert.witness_degree = d;
      break;
    }
  }

  const bool by_dimension = quotient_dimension(ideal) == n - static_cast<int>(fs.size());
  if (by_dimension != cert.regular)
    throw std::logic_error("regularity certifiers disagree; this is a bug");
  return cert;
}

Polynomial random_form(const PolyRingPtr& ring, int degree, double density,
                       std::mt19937_64& rng) {
  if (degree < 0) throw std::invalid_argument("negative degree");
  const int n = ring->ambient.var_count();
  const std::uint32_t p = ring->field.modulus();
  const ExponentBounds free(static_cast<std::size_t>(n), DegreeSequence::kUnbounded);
  const auto slice = box_monomials(n, free, degree);
  while (true) {
    std::vector<Term> terms;
    for (const Monomial& m : slice) {
      if (uniform01(rng) >= density) continue;
      terms.push_back({m, static_cast<PrimeField::Element>(
                              1 + uniform_below(rng, p - 1))});
    }
    if (!terms.empty()) return Polynomial(ring, std::move(terms));
  }
}

std::vector<Polynomial> random_regular_sequence(const DegreeSequence& a, const PolyRingPtr& ring,
                                                std::uint64_t seed, double density,
                                                int max_attempts) {
  if (!a.all_finite()) throw std::invalid_argument("degrees must be finite");
  std::mt19937_64 rng = make_rng(seed);
  for (int attempt = 0; attempt < max_attempts; ++attempt) {
    std::vector<Polynomial> fs;
    for (int i = 0; i < a.length(); ++i)
      fs.push_back(random_form(ring, static_cast<int>(a.entry(i)), density, rng));
    if (is_regular_sequence(fs).regular) return fs;
  }
  throw std::runtime_error("no regular sequence found in " + std::to_string(max_attempts) +
                           " attempts; a larger prime field may help");
}

PolynomialIdeal random_containing_ideal(std::span<const Polynomial> fs,
                                        std::span<const int> extra_degrees, double density,
                                        std::uint64_t seed) {
  if (fs.empty()) throw std::invalid_argument("need at least one form");
  const PolyRingPtr& ring = fs.front().ring();
  std::mt19937_64 rng = make_rng(seed);
  std::vector<Polynomial> gens(fs.begin(), fs.end());
  for (int degree : extra_degrees) gens.push_back(random_form(ring, degree, density, rng));
  return PolynomialIdeal(ring, std::move(gens));
}

}  // namespace egh
