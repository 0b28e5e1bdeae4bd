#include "egh/lpp.hpp"

#include <algorithm>
#include <optional>

#include "egh/box.hpp"
#include "egh/budget.hpp"

namespace egh {

NotAchievableError::NotAchievableError(int degree)
    : std::runtime_error("Hilbert function not achievable at degree " + std::to_string(degree)),
      degree_(degree) {}

LppIdeal::LppIdeal(AmbientInfo ambient, DegreeSequence a, MonomialIdeal lex_part, int bound)
    : a_(std::move(a)),
      lex_part_(std::move(lex_part)),
      whole_(sum(MonomialIdeal::pure_powers(ambient, a_), lex_part_)),
      bound_(bound) {
  if (!(lex_part_.ambient() == ambient))
    throw std::invalid_argument("lex part does not match ambient ring");
}

namespace {

int lpp_check_bound(const MonomialIdeal& I, const DegreeSequence& a) {
  const auto bounds = a.bounds(I.var_count());
  std::int64_t socle = 0;
  for (std::int64_t b : bounds) {
    if (b == DegreeSequence::kUnbounded) return std::max(I.max_generator_degree(), 0);
    socle += b - 1;
  }
  return static_cast<int>(socle);
}

bool box_parts_are_segments(const MonomialIdeal& I, const DegreeSequence& a) {
  const int n = I.var_count();
  const auto bounds = a.bounds(n);
  const int top = lpp_check_bound(I, a);
  for (int d = 0; d <= top; ++d) {
    bool gap = false;
    for (const Monomial& m : box_monomials(n, bounds, d)) {
      if (contains(I, m)) {
        if (gap) return false;
      } else {
        gap = true;
      }
    }
  }
  return true;
}

}  // namespace

bool is_lpp_weak(const MonomialIdeal& I, const DegreeSequence& a) {
  if (a.length() > I.var_count())
    throw std::invalid_argument("degree sequence longer than variable count");
  return box_parts_are_segments(I, a);
}

bool is_lpp(const MonomialIdeal& I, const DegreeSequence& a) {
  return contains_pure_powers(I, a) && is_lpp_weak(I, a);
}

LppIdeal lpp_from_hf(const DegreeSequence& a, AmbientInfo ambient, const HilbertFunction& h) {
  const int n = ambient.var_count();
  if (h.var_count() != n)
    throw std::invalid_argument("Hilbert function does not match variable count");
  const auto bounds = a.bounds(n);
  const int bound = h.bound();

  std::vector<Monomial> lex_gens;
  std::vector<Monomial> prev_prescribed;           // ideal-side box monomials one degree down
  std::optional<Monomial> prev_threshold;          // full-ring segment threshold one degree down

  for (int d = 0; d <= bound; ++d) {
    const auto box = box_monomials(n, bounds, d);  // lex-descending
    const BigInt standard_count = h.at(d);
    if (standard_count > static_cast<std::int64_t>(box.size())) throw NotAchievableError(d);
    const std::size_t k = box.size() - standard_count.convert_to<std::size_t>();
    std::vector<Monomial> prescribed(box.begin(), box.begin() + static_cast<std::ptrdiff_t>(k));

    // Multiplication by variables must keep the ideal side inside itself.
    for (const Monomial& m : upper_shadow(prev_prescribed, bounds)) {
      if (std::find(prescribed.begin(), prescribed.end(), m) == prescribed.end())
        throw NotAchievableError(d);
    }

    // The lex part's degree-d piece is the smallest full-ring lex segment
    // covering both the prescribed box monomials and the multiples of the
    // previous piece. Its threshold is the lex-min of the two candidates.
    std::optional<Monomial> threshold;
    if (!prescribed.empty()) threshold = prescribed.back();
    std::optional<Monomial> carried;
    if (prev_threshold) {
      carried = mul_var(*prev_threshold, n - 1);
      if (!threshold || lex_greater(*threshold, *carried)) threshold = carried;
    }

    if (threshold) {
      require_within_budget(slice_dimension(n, d), "lex segment materialization");
      const ExponentBounds free(static_cast<std::size_t>(n), DegreeSequence::kUnbounded);
      std::size_t boxed = 0;
      for (const Monomial& m : box_monomials(n, free, d)) {
        if (lex_compare(m, *threshold) == std::strong_ordering::less) continue;
        if (in_box(m, bounds)) ++boxed;
        // New generators are the segment monomials not reachable from the
        // previous degree's piece.
        if (!carried || lex_compare(m, *carried) == std::strong_ordering::less)
          lex_gens.push_back(m);
      }
      if (boxed != k)
        throw std::logic_error("lex closure altered the prescribed box part; this is a bug");
    }

    prev_prescribed = std::move(prescribed);
    prev_threshold = std::move(threshold);
  }

  MonomialIdeal lex_part(ambient, std::move(lex_gens));
  return LppIdeal(std::move(ambient), a, std::move(lex_part), bound);
}

LppIdeal lpp_from_hf(const DegreeSequence& a, int n, const HilbertFunction& h) {
  return lpp_from_hf(a, AmbientInfo::with_default_names(n), h);
}

BigInt lpp_growth(const DegreeSequence& a, int n, int d, const BigInt& q) {
  if (d < 0) throw std::invalid_argument("negative degree");
  const BigInt total = box_count(n, a, d);
  if (q < 0 || q > total) throw std::out_of_range("quotient value out of range for the box");
  const auto segment = lex_segment(n, a, d, total - q);
  const auto shadow = upper_shadow(segment, a, n);
  return box_count(n, a, d + 1) - static_cast<std::int64_t>(shadow.size());
}

BigInt macaulay_rep_growth(int d, const BigInt& q) {
  if (d < 1) throw std::invalid_argument("Macaulay representation needs degree >= 1");
  if (q < 0) throw std::out_of_range("negative value");
  // Greedy d-th Macaulay representation q = C(b_d, d) + ... + C(b_j, j),
  // then bump both arguments of every term.
  BigInt rest = q;
  BigInt growth = 0;
  long long level = d;
  while (rest > 0 && level >= 1) {
    long long b = level;
    while (binomial(b + 1, level) <= rest) ++b;
    rest -= binomial(b, level);
    growth += binomial(b + 1, level + 1);
    --level;
  }
  if (rest != 0) throw std::logic_error("Macaulay representation did not terminate");
  return growth;
}

BigInt macaulay_growth(int n, int d, const BigInt& q) {
  const auto free = DegreeSequence::all_unbounded(n);
  const BigInt by_segment = lpp_growth(free, n, d, q);
  if (d >= 1) {
    const BigInt by_representation = macaulay_rep_growth(d, q);
    if (by_segment != by_representation)
      throw std::logic_error("Macaulay growth routes disagree; this is a bug");
  }
  return by_segment;
}

BigInt refined_bound(int n, const DegreeSequence& a, int d, const BigInt& q) {
  return lpp_growth(DegreeSequence(a.bounds(n)), n, d, q);
}

LppIdeal cl_compress(const MonomialIdeal& I, const DegreeSequence& a, int bound) {
  if (!contains_pure_powers(I, a))
    throw std::invalid_argument("ideal does not contain the pure powers of the sequence");
  const int n = I.var_count();
  int B = bound;
  if (B < 0) {
    const auto bounds = a.bounds(n);
    bool finite = std::all_of(bounds.begin(), bounds.end(),
                              [](std::int64_t b) { return b != DegreeSequence::kUnbounded; });
    if (finite) {
      std::int64_t socle = 0;
      for (std::int64_t b : bounds) socle += b - 1;
      B = static_cast<int>(socle);
    } else {
      B = std::max(I.max_generator_degree() + 1, 0);
    }
  }
  try {
    return lpp_from_hf(a, I.ambient(), hilbert_function(I, B));
  } catch (const NotAchievableError& e) {
    throw std::logic_error(
        "compression of an ideal containing the pure powers must be achievable (failed at degree " +
        std::to_string(e.degree()) + "); this is a bug");
  }
}

}  // namespace egh
