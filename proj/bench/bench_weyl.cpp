#include <benchmark/benchmark.h>

#include "weylres/random.hpp"
#include "weylres/weyl.hpp"

using namespace weylres;

namespace {

Weyl random_weyl(const FieldSpec& f, std::uint32_t deg, Rng& rng) {
  Weyl w(f, 1);
  for (std::uint32_t i = 0; i <= deg; ++i)
    for (std::uint32_t j = 0; i + j <= deg; ++j) w.add_term(WeylKey{i, 0, j, 0}, random_element(f, rng));
  return w;
}

void multiply(benchmark::State& state, Execution ex) {
  const auto& f = FieldSpec::extension(5, 2);
  Rng rng(1);
  const auto deg = static_cast<std::uint32_t>(state.range(0));
  const Weyl a = random_weyl(f, deg, rng);
  const Weyl b = random_weyl(f, deg, rng);
  for (auto _ : state) benchmark::DoNotOptimize(Weyl::multiply(a, b, ex));
  state.SetComplexityN(state.range(0));
}

void batch(benchmark::State& state, Execution ex) {
  const auto& f = FieldSpec::prime(7);
  Rng rng(2);
  std::vector<Poly> cases;
  for (int k = 0; k < state.range(0); ++k) cases.push_back(random_poly(f, 21, rng));
  for (auto _ : state)
    benchmark::DoNotOptimize(
        run_batch(cases, [](const Poly& g) { return verify_power_identity(g, Execution::serial); }, ex));
}

}  // namespace

BENCHMARK_CAPTURE(multiply, serial, Execution::serial)->RangeMultiplier(2)->Range(8, 64);
BENCHMARK_CAPTURE(multiply, parallel, Execution::parallel)->RangeMultiplier(2)->Range(8, 64);
BENCHMARK_CAPTURE(batch, serial, Execution::serial)->Arg(64)->Arg(256);
BENCHMARK_CAPTURE(batch, parallel, Execution::parallel)->Arg(64)->Arg(256);

BENCHMARK_MAIN();
