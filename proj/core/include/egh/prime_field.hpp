#pragma once

#include <cstdint>

namespace egh {

// Arithmetic mod a prime p with 2 <= p < 2^16. Elements are canonical
// residues in [0, p).
class PrimeField {
 public:
  using Element = std::uint32_t;

  explicit PrimeField(std::uint32_t p);  // throws unless p is prime and in range

  std::uint32_t modulus() const noexcept { return p_; }

  Element reduce(long long value) const noexcept;
  Element add(Element a, Element b) const noexcept { return (a + b) % p_; }
  Element sub(Element a, Element b) const noexcept { return (a + p_ - b) % p_; }
  Element neg(Element a) const noexcept { return a == 0 ? 0 : p_ - a; }
  Element mul(Element a, Element b) const noexcept {
    return static_cast<Element>(static_cast<std::uint64_t>(a) * b % p_);
  }
  Element pow(Element base, std::uint64_t exponent) const noexcept;
  Element inv(Element a) const;  // throws on zero

  bool operator==(const PrimeField&) const = default;

 private:
  std::uint32_t p_;
};

bool is_prime(std::uint32_t value) noexcept;

}  // namespace egh
