#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "ua/casebook.hpp"
#include "ua/kernels.hpp"

using namespace ua;

namespace {

// Bell numbers B_0..B_8.
constexpr std::size_t kBell[] = {1, 1, 2, 5, 15, 52, 203, 877, 4140};

struct ThreadScope {
  explicit ThreadScope(std::size_t t) { kernels::set_thread_limit(t); }
  ~ThreadScope() { kernels::set_thread_limit(0); }
};

}  // namespace

TEST_CASE("all_partitions enumerates each partition once in order") {
  for (std::size_t n = 1; n <= 8; ++n) {
    auto const all = kernels::all_partitions(n);
    CHECK(all.size() == kBell[n]);
    CHECK(std::is_sorted(all.begin(), all.end()));
    CHECK(std::adjacent_find(all.begin(), all.end()) == all.end());
  }
  CHECK(kernels::all_partitions(4).front() == Partition::full(4));
  CHECK(kernels::all_partitions(4).back() == Partition::discrete(4));
}

TEST_CASE("serial and parallel kernels agree for every thread count") {
  std::mt19937_64 rng(50);
  for (std::size_t threads : {1, 2, 3, 8}) {
    ThreadScope scope(threads);
    for (int trial = 0; trial < 25; ++trial) {
      auto const n = 1 + rng() % 5;
      auto const a = oracle::random_algebra(rng, n, 1 + rng() % 2);
      auto const candidates = kernels::all_partitions(n);
      CHECK(kernels::serial::filter_congruences(a, candidates) ==
            kernels::parallel::filter_congruences(a, candidates));

      auto const N = 1 + rng() % 5;
      std::vector<Tuple> gens;
      for (int k = 0; k < 3; ++k) gens.push_back(oracle::random_tuple(rng, n, N));
      CHECK(kernels::serial::closure(a, gens, 1000000) == kernels::parallel::closure(a, gens, 1000000));

      std::size_t count = 1;
      for (std::size_t i = 0; i < 3; ++i) count *= n;
      CHECK(kernels::serial::monogenic_codes(a, 3, count) == kernels::parallel::monogenic_codes(a, 3, count));

      for (auto const& field : {FieldOfSets::powerset(3), FieldOfSets(4, {0b0000, 0b0011, 0b1100, 0b1111})}) {
        std::size_t total = 1;
        for (std::size_t i = 0; i < field.ground(); ++i) total *= n;
        CHECK(kernels::serial::boolean_power_members(a, field, total) ==
              kernels::parallel::boolean_power_members(a, field, total));
      }
    }
  }
}

TEST_CASE("closure kernels honour the cap") {
  auto const chain = chain_algebra();
  std::vector<Tuple> const gens{{2, 2, 2}};
  CHECK(kernels::serial::closure(chain, gens, 3).size() == 3);
  CHECK_THROWS_AS(kernels::serial::closure(chain, gens, 2), Error);
  CHECK_THROWS_AS(kernels::parallel::closure(chain, gens, 2), Error);
}

TEST_CASE("closure kernels match the brute-force closure on wide frontiers") {
  std::mt19937_64 rng(51);
  ThreadScope scope(4);
  for (int trial = 0; trial < 10; ++trial) {
    auto const a = oracle::random_algebra(rng, 4, 3);
    std::vector<Tuple> gens;
    for (int k = 0; k < 40; ++k) gens.push_back(oracle::random_tuple(rng, 4, 6));
    auto const expected = oracle::closure(a, {gens.begin(), gens.end()});
    auto const got = kernels::parallel::closure(a, gens, 1000000);
    CHECK(std::vector<Tuple>(expected.begin(), expected.end()) == got);
  }
}

TEST_CASE("thread limit round-trips") {
  kernels::set_thread_limit(3);
  CHECK(kernels::thread_limit() == 3);
  kernels::set_thread_limit(0);
  CHECK(kernels::thread_limit() >= 1);
}
