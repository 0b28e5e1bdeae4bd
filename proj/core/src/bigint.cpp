#include "egh/bigint.hpp"

namespace egh {

BigInt binomial(long long m, long long k) {
  if (m < 0 || k < 0 || k > m) return 0;
  if (k > m - k) k = m - k;
  BigInt result = 1;
  for (long long i = 1; i <= k; ++i) {
    result *= m - k + i;
    result /= i;
  }
  return result;
}

}  // namespace egh
