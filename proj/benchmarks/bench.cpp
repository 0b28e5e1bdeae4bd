#include <benchmark/benchmark.h>

#include "egh/box.hpp"
#include "egh/commands.hpp"
#include "egh/conjecture.hpp"
#include "egh/groebner.hpp"
#include "egh/regular.hpp"

namespace {

void BM_BoxCount(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const egh::DegreeSequence a(std::vector<std::int64_t>(n, 4));
  const int d = 2 * n;
  for (auto _ : state) {
    benchmark::DoNotOptimize(egh::box_count(n, a, d));
  }
}
BENCHMARK(BM_BoxCount)->Arg(4)->Arg(8)->Arg(12);

void BM_BoxMonomials(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const egh::DegreeSequence a(std::vector<std::int64_t>(n, 4));
  const int d = n;
  for (auto _ : state) {
    benchmark::DoNotOptimize(egh::box_monomials(n, a, d));
  }
}
BENCHMARK(BM_BoxMonomials)->Arg(4)->Arg(6)->Arg(8);

void BM_LppGrowth(benchmark::State& state) {
  const egh::DegreeSequence a({2, 3, 5});
  const int d = static_cast<int>(state.range(0));
  const egh::BigInt q = egh::box_count(3, a, d) / 2;
  for (auto _ : state) {
    benchmark::DoNotOptimize(egh::lpp_growth(a, 3, d, q));
  }
}
BENCHMARK(BM_LppGrowth)->Arg(2)->Arg(4)->Arg(6);

void BM_HilbertFunction(benchmark::State& state) {
  const auto ambient = egh::AmbientInfo::with_default_names(4);
  const egh::MonomialIdeal ideal(ambient, {
      egh::Monomial({2, 0, 0, 0}), egh::Monomial({0, 1, 2, 0}),
      egh::Monomial({1, 0, 0, 3}), egh::Monomial({0, 2, 0, 1})});
  const int bound = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(egh::hilbert_function(ideal, bound));
  }
}
BENCHMARK(BM_HilbertFunction)->Arg(6)->Arg(10)->Arg(14);

void BM_Buchberger(benchmark::State& state) {
  const auto ring = egh::make_poly_ring({"x", "y", "z"}, 101);
  auto rng = egh::make_rng(7);
  std::vector<egh::Polynomial> gens;
  for (int degree : {2, 3, 5})
    gens.push_back(egh::random_form(ring, degree, 0.5, rng));
  for (auto _ : state) {
    benchmark::DoNotOptimize(egh::buchberger(gens, egh::MonomialOrder::degrevlex));
  }
}
BENCHMARK(BM_Buchberger);

void BM_SliceConstruct(benchmark::State& state) {
  const auto ambient = egh::AmbientInfo::with_default_names(3);
  const egh::DegreeSequence a({2});
  const egh::MonomialIdeal ideal(ambient, {egh::Monomial({2, 0, 0}), egh::Monomial({0, 1, 1}),
                                           egh::Monomial({0, 3, 0})});
  for (auto _ : state) {
    benchmark::DoNotOptimize(egh::slice_construct(ideal, a));
  }
}
BENCHMARK(BM_SliceConstruct);

}  // namespace

BENCHMARK_MAIN();
