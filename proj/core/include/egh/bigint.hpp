#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace egh {

// Exact arbitrary-precision count type. Binomial counts overflow 64 bits
// already at moderate n*d, so every counting API speaks BigInt.
using BigInt = boost::multiprecision::cpp_int;

// C(m, k), with C(m, k) = 0 whenever m < 0, k < 0 or k > m.
BigInt binomial(long long m, long long k);

// dim of the degree-d slice of a polynomial ring in n variables.
inline BigInt slice_dimension(int n, int d) { return binomial(d + n - 1, n - 1); }

}  // namespace egh
