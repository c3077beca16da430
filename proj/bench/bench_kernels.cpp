// Serial reference kernels against their OpenMP counterparts.

#include <benchmark/benchmark.h>

#include <random>

#include "ua/casebook.hpp"
#include "ua/kernels.hpp"
#include "ua/witness.hpp"

namespace {

ua::UnaryAlgebra random_algebra(std::size_t n, std::size_t ops, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  ua::OpMap map;
  for (std::size_t k = 0; k < ops; ++k) {
    ua::Table t(n);
    for (auto& v : t) v = static_cast<ua::Element>(rng() % n);
    map.emplace("f" + std::to_string(k), std::move(t));
  }
  return ua::UnaryAlgebra(n, std::move(map));
}

std::vector<ua::Tuple> random_tuples(std::size_t n, std::size_t len, std::size_t count,
                                     std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<ua::Tuple> out(count, ua::Tuple(len));
  for (auto& t : out) {
    for (auto& v : t) v = static_cast<ua::Element>(rng() % n);
  }
  return out;
}

template <auto Kernel>
void congruences(benchmark::State& state) {
  auto const n = static_cast<std::size_t>(state.range(0));
  auto const a = random_algebra(n, 2, 1);
  auto const candidates = ua::kernels::all_partitions(n);
  for (auto _ : state) benchmark::DoNotOptimize(Kernel(a, candidates));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(candidates.size()));
}

template <auto Kernel>
void closure(benchmark::State& state) {
  auto const len = static_cast<std::size_t>(state.range(0));
  auto const a = random_algebra(4, 3, 2);
  auto const gens = random_tuples(4, len, 64, 3);
  for (auto _ : state) benchmark::DoNotOptimize(Kernel(a, gens, 10000000));
}

template <auto Kernel>
void monogenic(benchmark::State& state) {
  auto const exponent = static_cast<std::size_t>(state.range(0));
  auto const a = ua::chain_algebra();
  std::size_t count = 1;
  for (std::size_t i = 0; i < exponent; ++i) count *= a.size();
  for (auto _ : state) benchmark::DoNotOptimize(Kernel(a, exponent, count));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(count));
}

template <auto Kernel>
void boolean_power(benchmark::State& state) {
  auto const ground = static_cast<std::size_t>(state.range(0));
  auto const a = ua::chain_algebra();
  auto const field = ua::FieldOfSets::powerset(ground);
  std::size_t count = 1;
  for (std::size_t i = 0; i < ground; ++i) count *= a.size();
  for (auto _ : state) benchmark::DoNotOptimize(Kernel(a, field, count));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(count));
}

void claim_matrix(benchmark::State& state) {
  ua::kernels::set_thread_limit(static_cast<std::size_t>(state.range(0)));
  auto const cfg = ua::make_witness_config(ua::chain_algebra(), {7, 11, 13});
  for (auto _ : state) benchmark::DoNotOptimize(ua::verify_claims(cfg));
  ua::kernels::set_thread_limit(0);
}

}  // namespace

BENCHMARK(congruences<ua::kernels::serial::filter_congruences>)->Name("congruences/serial")->DenseRange(6, 9);
BENCHMARK(congruences<ua::kernels::parallel::filter_congruences>)->Name("congruences/parallel")->DenseRange(6, 9);
BENCHMARK(closure<ua::kernels::serial::closure>)->Name("closure/serial")->Arg(6)->Arg(8)->Arg(10);
BENCHMARK(closure<ua::kernels::parallel::closure>)->Name("closure/parallel")->Arg(6)->Arg(8)->Arg(10);
BENCHMARK(monogenic<ua::kernels::serial::monogenic_codes>)->Name("monogenic/serial")->DenseRange(3, 6);
BENCHMARK(monogenic<ua::kernels::parallel::monogenic_codes>)->Name("monogenic/parallel")->DenseRange(3, 6);
BENCHMARK(boolean_power<ua::kernels::serial::boolean_power_members>)->Name("boolean_power/serial")->DenseRange(6, 10, 2);
BENCHMARK(boolean_power<ua::kernels::parallel::boolean_power_members>)->Name("boolean_power/parallel")->DenseRange(6, 10, 2);
BENCHMARK(claim_matrix)->Name("S_pair_matrix/threads")->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
