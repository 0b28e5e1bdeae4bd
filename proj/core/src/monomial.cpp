#include "egh/monomial.hpp"

#include <numeric>
#include <set>
#include <stdexcept>

namespace egh {

AmbientInfo::AmbientInfo(std::vector<std::string> names) : names_(std::move(names)) {
  if (names_.empty()) throw std::invalid_argument("ambient ring needs at least one variable");
  std::set<std::string> seen;
  for (const auto& name : names_) {
    if (name.empty()) throw std::invalid_argument("empty variable name");
    if (!seen.insert(name).second)
      throw std::invalid_argument("duplicate variable name: " + name);
  }
}

AmbientInfo AmbientInfo::with_default_names(int n) {
  if (n < 1) throw std::invalid_argument("variable count must be positive");
  static const char* kShort[] = {"x", "y", "z", "w"};
  std::vector<std::string> names;
  names.reserve(static_cast<std::size_t>(n));
  if (n <= 4) {
    for (int i = 0; i < n; ++i) names.emplace_back(kShort[i]);
  } else {
    for (int i = 0; i < n; ++i) names.push_back("x" + std::to_string(i + 1));
  }
  return AmbientInfo(std::move(names));
}

Monomial::Monomial(std::vector<int> exponents) : exponents_(std::move(exponents)) {
  if (exponents_.empty()) throw std::invalid_argument("monomial needs at least one variable");
  long long total = 0;
  for (int e : exponents_) {
    if (e < 0) throw std::invalid_argument("negative exponent");
    total += e;
  }
  if (total > std::numeric_limits<int>::max()) throw std::invalid_argument("degree overflow");
  degree_ = static_cast<int>(total);
}

Monomial Monomial::unit(int n) { return Monomial(std::vector<int>(static_cast<std::size_t>(n), 0)); }

Monomial Monomial::variable(int n, int i) { return pure_power(n, i, 1); }

Monomial Monomial::pure_power(int n, int i, int e) {
  if (i < 0 || i >= n) throw std::invalid_argument("variable index out of range");
  std::vector<int> exps(static_cast<std::size_t>(n), 0);
  exps[static_cast<std::size_t>(i)] = e;
  return Monomial(std::move(exps));
}

bool Monomial::operator==(const Monomial& other) const { return exponents_ == other.exponents_; }

namespace {
void check_same_length(const Monomial& u, const Monomial& v) {
  if (u.var_count() != v.var_count())
    throw std::invalid_argument("monomials live in different ambient rings");
}
}  // namespace

std::strong_ordering lex_compare(const Monomial& u, const Monomial& v) {
  check_same_length(u, v);
  for (int i = 0; i < u.var_count(); ++i) {
    if (u.exponent(i) != v.exponent(i))
      return u.exponent(i) > v.exponent(i) ? std::strong_ordering::greater
                                           : std::strong_ordering::less;
  }
  return std::strong_ordering::equal;
}

bool lex_greater(const Monomial& u, const Monomial& v) {
  return lex_compare(u, v) == std::strong_ordering::greater;
}

bool canonical_less(const Monomial& u, const Monomial& v) {
  if (u.degree() != v.degree()) return u.degree() < v.degree();
  return lex_greater(u, v);
}

bool divides(const Monomial& divisor, const Monomial& m) {
  check_same_length(divisor, m);
  for (int i = 0; i < m.var_count(); ++i)
    if (divisor.exponent(i) > m.exponent(i)) return false;
  return true;
}

Monomial mul(const Monomial& u, const Monomial& v) {
  check_same_length(u, v);
  std::vector<int> exps(u.exponents());
  for (int i = 0; i < v.var_count(); ++i) exps[static_cast<std::size_t>(i)] += v.exponent(i);
  return Monomial(std::move(exps));
}

Monomial mul_var(const Monomial& m, int i) {
  std::vector<int> exps(m.exponents());
  exps.at(static_cast<std::size_t>(i)) += 1;
  return Monomial(std::move(exps));
}

Monomial quotient(const Monomial& m, const Monomial& divisor) {
  if (!divides(divisor, m)) throw std::invalid_argument("monomial division is not exact");
  std::vector<int> exps(m.exponents());
  for (int i = 0; i < m.var_count(); ++i) exps[static_cast<std::size_t>(i)] -= divisor.exponent(i);
  return Monomial(std::move(exps));
}

Monomial colon_quotient(const Monomial& m, const Monomial& g) {
  check_same_length(m, g);
  std::vector<int> exps(m.exponents());
  for (int i = 0; i < m.var_count(); ++i) {
    exps[static_cast<std::size_t>(i)] -= std::min(m.exponent(i), g.exponent(i));
  }
  return Monomial(std::move(exps));
}

Monomial gcd(const Monomial& u, const Monomial& v) {
  check_same_length(u, v);
  std::vector<int> exps(static_cast<std::size_t>(u.var_count()));
  for (int i = 0; i < u.var_count(); ++i)
    exps[static_cast<std::size_t>(i)] = std::min(u.exponent(i), v.exponent(i));
  return Monomial(std::move(exps));
}

Monomial lcm(const Monomial& u, const Monomial& v) {
  check_same_length(u, v);
  std::vector<int> exps(static_cast<std::size_t>(u.var_count()));
  for (int i = 0; i < u.var_count(); ++i)
    exps[static_cast<std::size_t>(i)] = std::max(u.exponent(i), v.exponent(i));
  return Monomial(std::move(exps));
}

std::string to_string(const Monomial& m, const AmbientInfo& ambient) {
  if (ambient.var_count() != m.var_count())
    throw std::invalid_argument("monomial does not match ambient ring");
  if (m.is_unit()) return "1";
  std::string out;
  for (int i = 0; i < m.var_count(); ++i) {
    int e = m.exponent(i);
    if (e == 0) continue;
    if (!out.empty()) out += '*';
    out += ambient.name(i);
    if (e > 1) out += '^' + std::to_string(e);
  }
  return out;
}

}  // namespace egh
