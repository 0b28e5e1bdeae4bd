#include "egh/prime_field.hpp"

#include <stdexcept>

namespace egh {

bool is_prime(std::uint32_t value) noexcept {
  if (value < 2) return false;
  for (std::uint32_t d = 2; d * d <= value; ++d)
    if (value % d == 0) return false;
  return true;
}

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
  if (p < 2 || p >= (1u << 16)) throw std::invalid_argument("modulus out of range [2, 2^16)");
  if (!is_prime(p)) throw std::invalid_argument("modulus " + std::to_string(p) + " is not prime");
}

PrimeField::Element PrimeField::reduce(long long value) const noexcept {
  long long r = value % p_;
  if (r < 0) r += p_;
  return static_cast<Element>(r);
}

PrimeField::Element PrimeField::pow(Element base, std::uint64_t exponent) const noexcept {
  Element result = 1 % p_;
  Element b = base % p_;
  while (exponent > 0) {
    if (exponent & 1) result = mul(result, b);
    b = mul(b, b);
    exponent >>= 1;
  }
  return result;
}

PrimeField::Element PrimeField::inv(Element a) const {
  if (a % p_ == 0) throw std::domain_error("inverse of zero");
  return pow(a % p_, p_ - 2);
}

}  // namespace egh
