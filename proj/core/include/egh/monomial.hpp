#pragma once

#include <compare>
#include <string>
#include <vector>

namespace egh {

// Names of the ambient ring variables. Position 0 is the lex-greatest
// variable; the order is fixed for the lifetime of the object.
class AmbientInfo {
 public:
  explicit AmbientInfo(std::vector<std::string> names);
  static AmbientInfo with_default_names(int n);  // x, y, z, w then x1..xn

  int var_count() const noexcept { return static_cast<int>(names_.size()); }
  const std::vector<std::string>& names() const noexcept { return names_; }
  const std::string& name(int i) const { return names_.at(static_cast<std::size_t>(i)); }

  bool operator==(const AmbientInfo&) const = default;

 private:
  std::vector<std::string> names_;
};

// An exponent vector. Always concrete: no sentinel entries.
class Monomial {
 public:
  explicit Monomial(std::vector<int> exponents);

  static Monomial unit(int n);
  static Monomial variable(int n, int i);
  static Monomial pure_power(int n, int i, int e);

  int var_count() const noexcept { return static_cast<int>(exponents_.size()); }
  int exponent(int i) const { return exponents_.at(static_cast<std::size_t>(i)); }
  int degree() const noexcept { return degree_; }
  const std::vector<int>& exponents() const noexcept { return exponents_; }
  bool is_unit() const noexcept { return degree_ == 0; }

  bool operator==(const Monomial&) const;

 private:
  std::vector<int> exponents_;
  int degree_;
};

// Lexicographic comparison with x1 > x2 > ... > xn. Total on monomials of
// equal degree (and on all monomials, degree ignored). Throws
// std::invalid_argument on length mismatch.
std::strong_ordering lex_compare(const Monomial& u, const Monomial& v);
bool lex_greater(const Monomial& u, const Monomial& v);

// Canonical generator order: by degree, then lex-descending. Equal ideals
// get identical text forms this way.
bool canonical_less(const Monomial& u, const Monomial& v);

bool divides(const Monomial& divisor, const Monomial& m);
Monomial mul(const Monomial& u, const Monomial& v);
Monomial mul_var(const Monomial& m, int i);
Monomial quotient(const Monomial& m, const Monomial& divisor);  // exact division, throws if not divisible
Monomial colon_quotient(const Monomial& m, const Monomial& g);  // m / gcd(m, g)
Monomial gcd(const Monomial& u, const Monomial& v);
Monomial lcm(const Monomial& u, const Monomial& v);

// Text form: `x^2*y` style, `1` for the unit monomial.
std::string to_string(const Monomial& m, const AmbientInfo& ambient);

}  // namespace egh
