#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "ua/algebra.hpp"
#include "ua/casebook.hpp"

using namespace ua;

namespace {

UnaryAlgebra make(std::size_t n, OpMap ops) { return UnaryAlgebra(n, std::move(ops)); }

std::set<std::vector<std::vector<std::size_t>>> as_blocks(std::vector<Congruence> const& cs) {
  std::set<std::vector<std::vector<std::size_t>>> out;
  for (auto const& c : cs) out.insert(c.blocks());
  return out;
}

}  // namespace

TEST_CASE("UnaryAlgebra validates its tables") {
  CHECK_THROWS_AS(UnaryAlgebra(0, {}), Error);
  CHECK_THROWS_AS(make(2, {{"f", {0}}}), Error);
  CHECK_THROWS_AS(make(2, {{"f", {0, 2}}}), Error);
  CHECK_THROWS_AS(make(2, {{"", {0, 1}}}), Error);
  auto const a = make(2, {{"g", {1, 0}}, {"f", {0, 0}}});
  CHECK(a.op_names() == std::vector<std::string>{"f", "g"});
  CHECK_THROWS_AS(a.op("h"), Error);
  CHECK_THROWS_AS(relabel(a, std::vector<Element>{0, 0}), Error);
  CHECK_THROWS_AS(relabel(a, std::vector<Element>{0}), Error);
}

TEST_CASE("op_kind") {
  CHECK(op_kind(Table{0, 0, 1}) == OpKind::Other);
  CHECK(op_kind(Table{1, 0}) == OpKind::Bijection);
  CHECK(op_kind(Table{2, 2, 2}) == OpKind::Constant);
  CHECK(op_kind(Table{0}) == OpKind::Bijection);
}

TEST_CASE("classify_type") {
  auto const v = classify_type(chain_algebra());
  CHECK(v.verdict == Verdict::Uncountable);
  CHECK(v.witness == "f");

  auto const two = make(2, {{"swap", {1, 0}}, {"c0", {0, 0}}});
  auto const w = classify_type(two);
  CHECK(w.verdict == Verdict::Countable);
  CHECK(w.bijections == std::vector<std::string>{"swap"});
  CHECK(w.constants == std::vector<std::string>{"c0"});

  CHECK(classify_type(make(1, {{"f", {0}}, {"g", {0}}})).verdict == Verdict::Countable);
}

TEST_CASE("every algebra on two elements is countable") {
  std::vector<Table> const maps{{0, 0}, {0, 1}, {1, 0}, {1, 1}};
  for (unsigned mask = 0; mask < 16; ++mask) {
    OpMap ops;
    for (unsigned k = 0; k < 4; ++k) {
      if (mask & (1U << k)) ops.emplace("m" + std::to_string(k), maps[k]);
    }
    CHECK(classify_type(make(2, ops)).verdict == Verdict::Countable);
  }
}

TEST_CASE("generate_monoid examples") {
  auto const chain = generate_monoid(chain_algebra());
  CHECK(chain.elements() == std::vector<Table>{{0, 1, 2}, {0, 0, 1}, {0, 0, 0}});
  CHECK(chain.words() == std::vector<Word>{{}, {"f"}, {"f", "f"}});

  auto const cyc = generate_monoid(make(3, {{"cyc", {1, 2, 0}}}));
  CHECK(cyc.size() == 3);
  CHECK(cyc.elements() == std::vector<Table>{{0, 1, 2}, {1, 2, 0}, {2, 0, 1}});

  auto const empty = generate_monoid(make(4, {}));
  CHECK(empty.size() == 1);
  CHECK(empty.words().front().empty());
}

TEST_CASE("generate_monoid respects the carrier cap") {
  auto const big = make(9, {{"f", {1, 2, 3, 4, 5, 6, 7, 8, 0}}});
  CHECK_THROWS_WITH_AS(generate_monoid(big), doctest::Contains("capped"), Error);
  Limits limits;
  limits.monoid_carrier = 9;
  CHECK(generate_monoid(big, limits).size() == 9);
}

TEST_CASE("generate_monoid: closure, words and order against brute force") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    auto const n = 1 + rng() % 4;
    auto const a = oracle::random_algebra(rng, n, rng() % 3);
    auto const mon = generate_monoid(a);
    std::set<Table> mine(mon.elements().begin(), mon.elements().end());
    CHECK(mine.size() == mon.size());
    CHECK(mine == oracle::monoid(a));
    for (std::size_t i = 0; i < mon.size(); ++i) {
      CHECK(evaluate_word(a, mon.words()[i]) == mon.elements()[i]);
      if (i > 0) {
        auto const& u = mon.words()[i - 1];
        auto const& w = mon.words()[i];
        CHECK((u.size() < w.size() || (u.size() == w.size() && u < w)));
      }
    }
    for (auto const& f : mon.elements()) {
      for (auto const& g : mon.elements()) CHECK(mon.contains(compose(f, g)));
    }
  }
}

TEST_CASE("min_image_nonconstant") {
  auto const f = min_image_nonconstant(chain_algebra());
  CHECK(f == Table{0, 0, 1});
  CHECK(image_size(f) == 2);

  auto const g = min_image_nonconstant(make(4, {{"g", {0, 0, 2, 2}}}));
  CHECK(g == Table{0, 0, 2, 2});

  auto const bij = make(3, {{"cyc", {1, 2, 0}}, {"t", {1, 0, 2}}});
  CHECK_THROWS_AS(min_image_nonconstant(bij), Error);
  try {
    min_image_nonconstant(bij);
  } catch (Error const& e) {
    CHECK(e.code() == ErrorCode::NotUncountable);
  }
}

TEST_CASE("min_image_nonconstant merges a pair and is minimal") {
  std::mt19937_64 rng(5);
  int tested = 0;
  while (tested < 150) {
    auto const n = 3 + rng() % 3;
    auto const a = oracle::random_algebra(rng, n, 1 + rng() % 2);
    if (classify_type(a).verdict != Verdict::Uncountable) continue;
    ++tested;
    auto const f = min_image_nonconstant(a);
    auto const m = image_size(f);
    CHECK(m > 1);
    CHECK(m < n);
    bool merged = false;
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = x + 1; y < n; ++y) merged = merged || f[x] == f[y];
    }
    CHECK(merged);
    for (auto const& t : oracle::monoid(a)) {
      auto const s = image_size(t);
      if (s > 1) CHECK(s >= m);
    }
  }
}

TEST_CASE("congruence_lattice examples") {
  auto const chain = as_blocks(congruence_lattice(chain_algebra()));
  std::set<std::vector<std::vector<std::size_t>>> const expected{
      {{0}, {1}, {2}}, {{0, 1}, {2}}, {{0, 1, 2}}};
  CHECK(chain == expected);

  CHECK(congruence_lattice(make(1, {{"f", {0}}})).size() == 1);
  CHECK(congruence_lattice(make(4, {})).size() == 15);

  Limits limits;
  limits.congruence_carrier = 3;
  CHECK_THROWS_AS(congruence_lattice(make(4, {}), limits), Error);
}

TEST_CASE("congruence_lattice agrees with brute force and is meet-closed") {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 150; ++trial) {
    auto const n = 1 + rng() % 5;
    auto const a = oracle::random_algebra(rng, n, rng() % 3);
    auto const lattice = congruence_lattice(a);
    CHECK(as_blocks(lattice) == oracle::congruences(a));
    CHECK(std::find(lattice.begin(), lattice.end(), Partition::discrete(n)) != lattice.end());
    CHECK(std::find(lattice.begin(), lattice.end(), Partition::full(n)) != lattice.end());
    for (auto const& c : lattice) {
      CHECK(is_congruence(a, c));
      for (auto const& d : lattice) {
        CHECK(std::find(lattice.begin(), lattice.end(), c.meet(d)) != lattice.end());
      }
    }
  }
}

TEST_CASE("is_subdirectly_irreducible examples") {
  CHECK(is_subdirectly_irreducible(chain_algebra()));
  CHECK(is_subdirectly_irreducible(make(2, {})));
  CHECK_FALSE(is_subdirectly_irreducible(make(4, {})));
  CHECK_FALSE(is_subdirectly_irreducible(make(1, {{"f", {0}}})));
}

TEST_CASE("is_subdirectly_irreducible agrees with brute force for n <= 4") {
  std::mt19937_64 rng(33);
  for (int trial = 0; trial < 300; ++trial) {
    auto const n = 1 + rng() % 4;
    auto const a = oracle::random_algebra(rng, n, rng() % 3);
    CHECK(is_subdirectly_irreducible(a) == oracle::subdirectly_irreducible(a));
  }
}
