#include "egh/monomial_ideal.hpp"

#include <algorithm>
#include <stdexcept>

namespace egh {

namespace {

std::vector<Monomial> minimal_generators(int n, std::vector<Monomial> gens) {
  for (const Monomial& g : gens)
    if (g.var_count() != n) throw std::invalid_argument("generator does not match ambient ring");
  std::sort(gens.begin(), gens.end(), canonical_less);
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  std::vector<Monomial> minimal;
  for (const Monomial& g : gens) {
    bool redundant = std::any_of(minimal.begin(), minimal.end(),
                                 [&](const Monomial& m) { return divides(m, g); });
    if (!redundant) minimal.push_back(g);
  }
  return minimal;
}

void check_same_ambient(const MonomialIdeal& I, const MonomialIdeal& J) {
  if (!(I.ambient() == J.ambient()))
    throw std::invalid_argument("ideals live in different ambient rings");
}

}  // namespace

MonomialIdeal::MonomialIdeal(AmbientInfo ambient, std::vector<Monomial> generators)
    : ambient_(std::move(ambient)),
      generators_(minimal_generators(ambient_.var_count(), std::move(generators))) {}

MonomialIdeal MonomialIdeal::zero(AmbientInfo ambient) { return {std::move(ambient), {}}; }

MonomialIdeal MonomialIdeal::unit(AmbientInfo ambient) {
  int n = ambient.var_count();
  return {std::move(ambient), {Monomial::unit(n)}};
}

MonomialIdeal MonomialIdeal::pure_powers(AmbientInfo ambient, const DegreeSequence& a) {
  const int n = ambient.var_count();
  if (a.length() > n) throw std::invalid_argument("degree sequence longer than variable count");
  std::vector<Monomial> gens;
  for (int i = 0; i < a.length(); ++i) {
    if (!a.is_finite(i)) continue;
    gens.push_back(Monomial::pure_power(n, i, static_cast<int>(a.entry(i))));
  }
  return {std::move(ambient), std::move(gens)};
}

bool MonomialIdeal::is_unit() const noexcept {
  return generators_.size() == 1 && generators_.front().is_unit();
}

int MonomialIdeal::max_generator_degree() const noexcept {
  return generators_.empty() ? -1 : generators_.back().degree();
}

bool contains(const MonomialIdeal& ideal, const Monomial& m) {
  if (m.var_count() != ideal.var_count())
    throw std::invalid_argument("monomial does not match ambient ring");
  return std::any_of(ideal.generators().begin(), ideal.generators().end(),
                     [&](const Monomial& g) { return divides(g, m); });
}

bool contains(const MonomialIdeal& outer, const MonomialIdeal& inner) {
  check_same_ambient(outer, inner);
  return std::all_of(inner.generators().begin(), inner.generators().end(),
                     [&](const Monomial& g) { return contains(outer, g); });
}

MonomialIdeal minimalize(AmbientInfo ambient, std::vector<Monomial> generators) {
  return MonomialIdeal(std::move(ambient), std::move(generators));
}

MonomialIdeal sum(const MonomialIdeal& I, const MonomialIdeal& J) {
  check_same_ambient(I, J);
  std::vector<Monomial> gens(I.generators());
  gens.insert(gens.end(), J.generators().begin(), J.generators().end());
  return {I.ambient(), std::move(gens)};
}

MonomialIdeal intersect(const MonomialIdeal& I, const MonomialIdeal& J) {
  check_same_ambient(I, J);
  std::vector<Monomial> gens;
  for (const Monomial& a : I.generators())
    for (const Monomial& b : J.generators()) gens.push_back(lcm(a, b));
  return {I.ambient(), std::move(gens)};
}

MonomialIdeal colon(const MonomialIdeal& I, const Monomial& g) {
  std::vector<Monomial> gens;
  gens.reserve(I.generators().size());
  for (const Monomial& m : I.generators()) gens.push_back(colon_quotient(m, g));
  return {I.ambient(), std::move(gens)};
}

MonomialIdeal colon(const MonomialIdeal& I, const MonomialIdeal& J) {
  check_same_ambient(I, J);
  MonomialIdeal result = MonomialIdeal::unit(I.ambient());
  for (const Monomial& g : J.generators()) result = intersect(result, colon(I, g));
  return result;
}

SaturationChain colon_power_saturate(const MonomialIdeal& I, int var) {
  if (var < 0 || var >= I.var_count()) throw std::invalid_argument("variable index out of range");
  SaturationChain out;
  out.chain.push_back(I);
  const Monomial x = Monomial::variable(I.var_count(), var);
  while (true) {
    MonomialIdeal next = colon(out.chain.back(), x);
    if (next == out.chain.back()) break;
    out.chain.push_back(std::move(next));
  }
  out.stabilization_index = static_cast<int>(out.chain.size()) - 1;
  return out;
}

MonomialIdeal truncate_below_degree(const MonomialIdeal& I, int D) {
  if (D < 0) throw std::invalid_argument("negative degree");
  std::vector<Monomial> gens;
  for (const Monomial& g : I.generators())
    if (g.degree() < D) gens.push_back(g);
  return {I.ambient(), std::move(gens)};
}

bool contains_pure_powers(const MonomialIdeal& I, const DegreeSequence& a) {
  if (a.length() > I.var_count())
    throw std::invalid_argument("degree sequence longer than variable count");
  for (int i = 0; i < a.length(); ++i) {
    if (!a.is_finite(i)) continue;
    if (!contains(I, Monomial::pure_power(I.var_count(), i, static_cast<int>(a.entry(i)))))
      return false;
  }
  return true;
}

std::string to_string(const MonomialIdeal& ideal) {
  std::string out = "<";
  for (std::size_t i = 0; i < ideal.generators().size(); ++i) {
    if (i > 0) out += ", ";
    out += to_string(ideal.generators()[i], ideal.ambient());
  }
  out += ">";
  return out;
}

}  // namespace egh
