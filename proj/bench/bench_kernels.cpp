#include <benchmark/benchmark.h>

#include "altdet/laws.hpp"
#include "altdet/parallel.hpp"
#include "altdet/semantics.hpp"
#include "altdet/set_monad.hpp"
#include "altdet/suite.hpp"

using namespace altdet;

namespace {

HarnessOptions options(const benchmark::State& state) {
  HarnessOptions o;
  o.serial = state.range(0) == 0;
  return o;
}

void label(benchmark::State& state) {
  state.SetLabel(state.range(0) == 0 ? "serial" : "openmp x" + std::to_string(parallel::thread_count()));
}

// alt[1].assoc streams the 2^20 top elements over the 20-element middle layer.
void BM_AltAssociativity(benchmark::State& state) {
  const auto o = options(state);
  for (auto _ : state) benchmark::DoNotOptimize(laws::check_set_monad_laws<monad::AltMonad>(1, o));
  label(state);
}
BENCHMARK(BM_AltAssociativity)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_PowersetAssociativity(benchmark::State& state) {
  const auto o = options(state);
  for (auto _ : state) benchmark::DoNotOptimize(laws::check_set_monad_laws<monad::PowersetMonad>(2, o));
  label(state);
}
BENCHMARK(BM_PowersetAssociativity)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_DistNaturality(benchmark::State& state) {
  const auto o = options(state);
  for (auto _ : state) benchmark::DoNotOptimize(laws::check_dist_naturality(3, o));
  label(state);
}
BENCHMARK(BM_DistNaturality)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_CnfNaturality(benchmark::State& state) {
  const auto o = options(state);
  for (auto _ : state) benchmark::DoNotOptimize(laws::check_cnf_naturality(false, 1, 3, o));
  label(state);
}
BENCHMARK(BM_CnfNaturality)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_Correspondence(benchmark::State& state) {
  const auto o = options(state);
  const auto nfas = suite::random_nfas(50, 4, kDefaultSeed);
  for (auto _ : state)
    for (const auto& n : nfas)
      benchmark::DoNotOptimize(semantics::check_semantics_correspondence(semantics::as_t_automaton(n),
                                                                         semantics::max_algebra(), 0, 8, o));
  label(state);
}
BENCHMARK(BM_Correspondence)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
