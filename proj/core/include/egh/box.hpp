#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "egh/bigint.hpp"
#include "egh/degree_sequence.hpp"
#include "egh/monomial.hpp"

namespace egh {

// Per-variable exponent bounds: a monomial x^u lies inside the box when
// u_i < bounds[i] for every i. DegreeSequence::kUnbounded lifts the bound.
// The raw-bounds entry points make no monotonicity assumption, so callers
// may box against any variable order; DegreeSequence overloads pad with
// kUnbounded on the right.
using ExponentBounds = std::vector<std::int64_t>;

bool in_box(const Monomial& m, const ExponentBounds& bounds);

// Number of degree-d monomials inside the box. Inclusion-exclusion over the
// finitely bounded variables, exact BigInt arithmetic.
BigInt box_count(int n, const ExponentBounds& bounds, int degree);
BigInt box_count(int n, const DegreeSequence& a, int degree);

// The box monomials of the given degree in decreasing lex order.
std::vector<Monomial> box_monomials(int n, const ExponentBounds& bounds, int degree);
std::vector<Monomial> box_monomials(int n, const DegreeSequence& a, int degree);

// The k lex-largest box monomials of the given degree.
std::vector<Monomial> lex_segment(int n, const ExponentBounds& bounds, int degree, const BigInt& k);
std::vector<Monomial> lex_segment(int n, const DegreeSequence& a, int degree, const BigInt& k);

// All box monomials of degree d+1 divisible by some element of the given
// degree-d set, lex-descending. Throws on mixed input degrees or elements
// outside the box.
std::vector<Monomial> upper_shadow(std::span<const Monomial> monomials, const ExponentBounds& bounds);
std::vector<Monomial> upper_shadow(std::span<const Monomial> monomials, const DegreeSequence& a, int n);

}  // namespace egh
