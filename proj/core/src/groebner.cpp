#include "egh/groebner.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "egh/box.hpp"
#include "egh/budget.hpp"

namespace egh {

PolynomialIdeal::PolynomialIdeal(PolyRingPtr ring, std::vector<Polynomial> generators)
    : ring_(std::move(ring)) {
  if (!ring_) throw std::invalid_argument("null ring");
  for (Polynomial& g : generators) {
    if (!(*g.ring() == *ring_)) throw std::invalid_argument("generator from a different ring");
    if (g.is_zero()) continue;
    if (g.degree() == 0) throw std::invalid_argument("degree-0 generator");
    generators_.push_back(std::move(g));
  }
}

const std::vector<Polynomial>& PolynomialIdeal::groebner_basis(MonomialOrder order) const {
  auto& slot = basis_[order == MonomialOrder::lex ? 0 : 1];
  if (!slot) slot = buchberger(std::span<const Polynomial>(generators_), order);
  return *slot;
}

Polynomial normal_form(const Polynomial& f, std::span<const Polynomial> basis,
                       MonomialOrder order) {
  if (basis.empty()) throw std::invalid_argument("division by an empty basis");
  for (const Polynomial& g : basis) {
    if (!(*g.ring() == *f.ring())) throw std::invalid_argument("basis from a different ring");
    if (g.is_zero()) throw std::invalid_argument("zero element in division basis");
  }
  const PrimeField& fp = f.field();
  Polynomial remainder = Polynomial::zero(f.ring());
  Polynomial work = f;
  while (!work.is_zero()) {
    const Term& lt = work.leading_term(order);
    bool reduced = false;
    for (const Polynomial& g : basis) {
      const Term& gt = g.leading_term(order);
      if (!divides(gt.monomial, lt.monomial)) continue;
      const Monomial shift = quotient(lt.monomial, gt.monomial);
      const PrimeField::Element c = fp.mul(lt.coefficient, fp.inv(gt.coefficient));
      work = sub(work, mul_term(g, shift, c));
      reduced = true;
      break;
    }
    if (!reduced) {
      remainder = add(remainder, Polynomial::from_monomial(f.ring(), lt.monomial, lt.coefficient));
      work = sub(work, Polynomial::from_monomial(f.ring(), lt.monomial, lt.coefficient));
    }
  }
  return remainder;
}

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, MonomialOrder order) {
  if (f.is_zero() || g.is_zero()) throw std::invalid_argument("s-polynomial of zero");
  const PrimeField& fp = f.field();
  const Term& ft = f.leading_term(order);
  const Term& gt = g.leading_term(order);
  const Monomial common = lcm(ft.monomial, gt.monomial);
  const Polynomial left = mul_term(f, quotient(common, ft.monomial), fp.inv(ft.coefficient));
  const Polynomial right = mul_term(g, quotient(common, gt.monomial), fp.inv(gt.coefficient));
  return sub(left, right);
}

namespace {

struct PendingPair {
  int lcm_degree;
  long long serial;
  std::size_t i, j;
  bool operator<(const PendingPair& other) const {
    if (lcm_degree != other.lcm_degree) return lcm_degree < other.lcm_degree;
    return serial < other.serial;
  }
};

bool canonical_basis_less(MonomialOrder order, const Polynomial& a, const Polynomial& b) {
  const Monomial& u = a.leading_term(order).monomial;
  const Monomial& v = b.leading_term(order).monomial;
  if (u.degree() != v.degree()) return u.degree() < v.degree();
  return order_compare(order, u, v) == std::strong_ordering::greater;
}

}  // namespace

std::vector<Polynomial> buchberger(std::span<const Polynomial> generators, MonomialOrder order) {
  std::vector<Polynomial> basis;
  for (const Polynomial& g : generators)
    if (!g.is_zero()) basis.push_back(monic(g, order));
  std::set<PendingPair> pending;
  long long serial = 0;
  auto queue_pairs_with = [&](std::size_t j) {
    for (std::size_t i = 0; i < j; ++i) {
      const Monomial common = lcm(basis[i].leading_term(order).monomial,
                                  basis[j].leading_term(order).monomial);
      pending.insert({common.degree(), serial++, i, j});
    }
  };
  for (std::size_t j = 0; j < basis.size(); ++j) queue_pairs_with(j);

  while (!pending.empty()) {
    const PendingPair pair = *pending.begin();
    pending.erase(pending.begin());
    const Monomial& mi = basis[pair.i].leading_term(order).monomial;
    const Monomial& mj = basis[pair.j].leading_term(order).monomial;
    if (gcd(mi, mj).is_unit()) continue;  // coprime leading monomials reduce to zero
    const Polynomial s = s_polynomial(basis[pair.i], basis[pair.j], order);
    const Polynomial r = normal_form(s, basis, order);
    if (r.is_zero()) continue;
    basis.push_back(monic(r, order));
    queue_pairs_with(basis.size() - 1);
  }

  // Auto-reduce: keep divisibility-minimal leading monomials, then reduce
  // every tail against the rest.
  std::vector<Polynomial> minimal;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    const Monomial& m = basis[i].leading_term(order).monomial;
    bool redundant = false;
    for (std::size_t j = 0; j < basis.size() && !redundant; ++j) {
      if (i == j) continue;
      const Monomial& other = basis[j].leading_term(order).monomial;
      if (other == m) {
        redundant = j < i;  // duplicates keep the earliest
      } else {
        redundant = divides(other, m);
      }
    }
    if (!redundant) minimal.push_back(basis[i]);
  }
  if (minimal.size() > 1) {
    for (std::size_t i = 0; i < minimal.size(); ++i) {
      std::vector<Polynomial> others;
      for (std::size_t j = 0; j < minimal.size(); ++j)
        if (j != i) others.push_back(minimal[j]);
      minimal[i] = normal_form(minimal[i], others, order);
    }
  }
  std::sort(minimal.begin(), minimal.end(), [order](const Polynomial& a, const Polynomial& b) {
    return canonical_basis_less(order, a, b);
  });
  return minimal;
}

std::vector<Polynomial> buchberger(const PolynomialIdeal& I, MonomialOrder order) {
  return I.groebner_basis(order);
}

MonomialIdeal initial_ideal(const PolynomialIdeal& I, MonomialOrder order) {
  std::vector<Monomial> leads;
  for (const Polynomial& g : I.groebner_basis(order))
    leads.push_back(g.leading_term(order).monomial);
  return {I.ring()->ambient, std::move(leads)};
}

HilbertFunction hilbert_function_poly(const PolynomialIdeal& I, int bound, MonomialOrder order) {
  return hilbert_function(initial_ideal(I, order), bound);
}

BigInt hf_rank_oracle(const PolynomialIdeal& I, int d) {
  if (d < 0) throw std::invalid_argument("negative degree");
  const int n = I.ring()->ambient.var_count();
  const PrimeField& fp = I.ring()->field;
  const BigInt dim_big = slice_dimension(n, d);
  require_within_budget(dim_big, "rank oracle slice");
  const ExponentBounds free(static_cast<std::size_t>(n), DegreeSequence::kUnbounded);
  const auto slice = box_monomials(n, free, d);
  std::map<std::vector<int>, std::size_t> index;
  for (std::size_t i = 0; i < slice.size(); ++i) index[slice[i].exponents()] = i;

  std::vector<std::vector<PrimeField::Element>> rows;
  for (const Polynomial& g : I.generators()) {
    if (g.degree() > d) continue;
    for (const Monomial& shift : box_monomials(n, free, d - g.degree())) {
      std::vector<PrimeField::Element> row(slice.size(), 0);
      for (const Term& t : g.terms())
        row[index.at(mul(t.monomial, shift).exponents())] = t.coefficient;
      rows.push_back(std::move(row));
    }
  }

  // Gaussian elimination over the prime field.
  std::size_t rank = 0;
  for (std::size_t col = 0; col < slice.size() && rank < rows.size(); ++col) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][col] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[rank], rows[pivot]);
    const PrimeField::Element inv = fp.inv(rows[rank][col]);
    for (std::size_t c = col; c < slice.size(); ++c) rows[rank][c] = fp.mul(rows[rank][c], inv);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || rows[r][col] == 0) continue;
      const PrimeField::Element factor = rows[r][col];
      for (std::size_t c = col; c < slice.size(); ++c)
        rows[r][c] = fp.sub(rows[r][c], fp.mul(factor, rows[rank][c]));
    }
    ++rank;
  }
  return dim_big - static_cast<std::int64_t>(rank);
}

}  // namespace egh
