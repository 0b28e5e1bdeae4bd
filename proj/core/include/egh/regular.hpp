#pragma once

#include <optional>

#include "egh/groebner.hpp"
#include "egh/rng.hpp"

namespace egh {

struct RegularityCertificate {
  bool regular = false;
  // First degree where the Hilbert function leaves the complete-intersection
  // values, when not regular.
  std::optional<int> witness_degree;
};

// Decides regularity of a homogeneous sequence by comparing H(S/<fs>, d)
// with the complete-intersection values for d up to the sum of the
// degrees. A second, independent certifier (Krull dimension of the initial
// ideal, via minimal vertex covers of the generator supports) must agree,
// or std::logic_error is thrown.
RegularityCertificate is_regular_sequence(std::span<const Polynomial> fs);

// n minus the minimum number of variables meeting every minimal generator
// of the initial ideal: the Krull dimension of S/I.
int quotient_dimension(const PolynomialIdeal& I);

// Homogeneous forms of the given degrees passing is_regular_sequence,
// retried with fresh randomness up to max_attempts, then
// std::runtime_error. Deterministic given the seed.
std::vector<Polynomial> random_regular_sequence(const DegreeSequence& a, const PolyRingPtr& ring,
                                                std::uint64_t seed, double density = 0.5,
                                                int max_attempts = 64);

// <fs> plus random homogeneous forms of the given degrees (terms kept with
// probability `density`, coefficients uniform over the nonzero elements).
// Deterministic given the seed; fs is trusted to be regular.
PolynomialIdeal random_containing_ideal(std::span<const Polynomial> fs,
                                        std::span<const int> extra_degrees, double density,
                                        std::uint64_t seed);

// One random nonzero homogeneous form, drawing through the shared helpers.
Polynomial random_form(const PolyRingPtr& ring, int degree, double density, std::mt19937_64& rng);

}  // namespace egh
