#include <benchmark/benchmark.h>

#include <random>

#include "liaison/poly.hpp"
#include "liaison/ring.hpp"

namespace {

using namespace liaison;

Polynomial random_poly(const RingPtr& R, std::mt19937& rng, int nterms,
                       int maxdeg) {
  std::vector<Term> ts;
  for (int i = 0; i < nterms; ++i) {
    Monomial m(R->nvars);
    for (int v = 0; v < R->nvars; ++v) m.e[v] = rng() % (maxdeg + 1);
    ts.push_back({static_cast<std::uint32_t>(
                      1 + rng() % (R->field.characteristic() - 1)),
                  m});
  }
  return Polynomial::from_terms(R, std::move(ts));
}

void BM_poly_multiply(benchmark::State& state) {
  auto R = make_ring(32003, 4);
  std::mt19937 rng(7);
  Polynomial f = random_poly(R, rng, static_cast<int>(state.range(0)), 3);
  Polynomial g = random_poly(R, rng, static_cast<int>(state.range(0)), 3);
  for (auto _ : state) benchmark::DoNotOptimize(f * g);
}
BENCHMARK(BM_poly_multiply)->Arg(8)->Arg(32)->Arg(128);

void BM_field_inverse(benchmark::State& state) {
  PrimeField F(32003);
  std::uint32_t x = 17;
  for (auto _ : state) {
    benchmark::DoNotOptimize(x = F.inv(x) + 1);
    if (x >= 32003) x = 17;
  }
}
BENCHMARK(BM_field_inverse);

}  // namespace

BENCHMARK_MAIN();
