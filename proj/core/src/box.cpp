#include "egh/box.hpp"

#include <algorithm>
#include <stdexcept>

#include "egh/budget.hpp"

namespace egh {

namespace {

void check_bounds(int n, const ExponentBounds& bounds) {
  if (static_cast<int>(bounds.size()) != n)
    throw std::invalid_argument("exponent bounds length does not match variable count");
  for (std::int64_t b : bounds)
    if (b < 1) throw std::invalid_argument("exponent bounds must be at least 1");
}

// Max degree of a box monomial, or -1 when some bound is lifted.
std::int64_t box_socle(const ExponentBounds& bounds) {
  std::int64_t s = 0;
  for (std::int64_t b : bounds) {
    if (b == DegreeSequence::kUnbounded) return -1;
    s += b - 1;
  }
  return s;
}

void emit_box(int n, const ExponentBounds& bounds, int remaining, int var,
              std::vector<int>& partial, std::vector<Monomial>& out) {
  if (var == n - 1) {
    if (bounds[static_cast<std::size_t>(var)] != DegreeSequence::kUnbounded &&
        remaining >= bounds[static_cast<std::size_t>(var)])
      return;
    partial[static_cast<std::size_t>(var)] = remaining;
    out.emplace_back(partial);
    return;
  }
  std::int64_t cap = bounds[static_cast<std::size_t>(var)] == DegreeSequence::kUnbounded
                         ? remaining
                         : std::min<std::int64_t>(remaining, bounds[static_cast<std::size_t>(var)] - 1);
  // Descending first exponent yields lex-descending output.
  for (std::int64_t e = cap; e >= 0; --e) {
    partial[static_cast<std::size_t>(var)] = static_cast<int>(e);
    emit_box(n, bounds, remaining - static_cast<int>(e), var + 1, partial, out);
  }
}

}  // namespace

bool in_box(const Monomial& m, const ExponentBounds& bounds) {
  check_bounds(m.var_count(), bounds);
  for (int i = 0; i < m.var_count(); ++i) {
    std::int64_t b = bounds[static_cast<std::size_t>(i)];
    if (b != DegreeSequence::kUnbounded && m.exponent(i) >= b) return false;
  }
  return true;
}

BigInt box_count(int n, const ExponentBounds& bounds, int degree) {
  check_bounds(n, bounds);
  if (degree < 0) throw std::invalid_argument("negative degree");
  // Inclusion-exclusion over subsets S of the bounded variables:
  // sum (-1)^|S| C(d - sum_{i in S} a_i + n - 1, n - 1).
  std::vector<std::int64_t> finite;
  for (std::int64_t b : bounds)
    if (b != DegreeSequence::kUnbounded) finite.push_back(b);
  const std::size_t r = finite.size();
  if (r > 62) throw std::invalid_argument("too many bounded variables for inclusion-exclusion");
  BigInt total = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << r); ++mask) {
    std::int64_t shift = 0;
    int bits = 0;
    for (std::size_t i = 0; i < r; ++i) {
      if (mask & (std::uint64_t{1} << i)) {
        shift += finite[i];
        ++bits;
      }
    }
    if (shift > degree) continue;  // binomial would vanish
    BigInt term = binomial(degree - shift + n - 1, n - 1);
    if (bits % 2 == 0)
      total += term;
    else
      total -= term;
  }
  return total;
}

std::vector<Monomial> box_monomials(int n, const ExponentBounds& bounds, int degree) {
  check_bounds(n, bounds);
  if (degree < 0) throw std::invalid_argument("negative degree");
  std::int64_t socle = box_socle(bounds);
  if (socle >= 0 && degree > socle) return {};
  require_within_budget(box_count(n, bounds, degree), "box enumeration");
  std::vector<Monomial> out;
  std::vector<int> partial(static_cast<std::size_t>(n), 0);
  emit_box(n, bounds, degree, 0, partial, out);
  return out;
}

std::vector<Monomial> lex_segment(int n, const ExponentBounds& bounds, int degree,
                                  const BigInt& k) {
  BigInt total = box_count(n, bounds, degree);
  if (k < 0 || k > total) throw std::out_of_range("lex segment size out of range");
  if (k == 0) return {};
  auto all = box_monomials(n, bounds, degree);
  all.erase(all.begin() + static_cast<std::ptrdiff_t>(k.convert_to<std::size_t>()), all.end());
  return all;
}

std::vector<Monomial> upper_shadow(std::span<const Monomial> monomials,
                                   const ExponentBounds& bounds) {
  if (monomials.empty()) return {};
  const int n = monomials.front().var_count();
  check_bounds(n, bounds);
  const int degree = monomials.front().degree();
  std::vector<Monomial> out;
  for (const Monomial& m : monomials) {
    if (m.degree() != degree) throw std::invalid_argument("upper_shadow input has mixed degrees");
    if (!in_box(m, bounds)) throw std::invalid_argument("upper_shadow input outside the box");
    for (int i = 0; i < n; ++i) {
      std::int64_t b = bounds[static_cast<std::size_t>(i)];
      if (b != DegreeSequence::kUnbounded && m.exponent(i) + 1 >= b) continue;
      out.push_back(mul_var(m, i));
    }
  }
  std::sort(out.begin(), out.end(), [](const Monomial& u, const Monomial& v) {
    return lex_greater(u, v);
  });
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

BigInt box_count(int n, const DegreeSequence& a, int degree) {
  return box_count(n, a.bounds(n), degree);
}

std::vector<Monomial> box_monomials(int n, const DegreeSequence& a, int degree) {
  return box_monomials(n, a.bounds(n), degree);
}

std::vector<Monomial> lex_segment(int n, const DegreeSequence& a, int degree, const BigInt& k) {
  return lex_segment(n, a.bounds(n), degree, k);
}

std::vector<Monomial> upper_shadow(std::span<const Monomial> monomials, const DegreeSequence& a,
                                   int n) {
  return upper_shadow(monomials, a.bounds(n));
}

}  // namespace egh
