#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "ua/casebook.hpp"
#include "ua/digraph.hpp"
#include "ua/iso.hpp"
#include "ua/powers.hpp"
#include "ua/witness.hpp"

using namespace ua;

namespace {

UnaryAlgebra make(std::size_t n, OpMap ops) { return UnaryAlgebra(n, std::move(ops)); }

AlgebraDigraph plain(std::size_t n, std::vector<std::pair<std::size_t, std::size_t>> const& arcs) {
  AlgebraDigraph g;
  g.vertex_count = n;
  for (auto [s, t] : arcs) g.edges.push_back({s, t, "e"});
  std::sort(g.edges.begin(), g.edges.end());
  return g;
}

std::vector<CanonicalCode> component_codes(UnaryAlgebra const& a) {
  auto const cc = analyze_components(gamma(a)).connected_components;
  std::vector<CanonicalCode> codes;
  for (auto const& block : cc.blocks()) {
    codes.push_back(canonical_form(subalgebra_on(a, {block.begin(), block.end()})));
  }
  std::sort(codes.begin(), codes.end());
  return codes;
}

}  // namespace

TEST_CASE("are_isomorphic examples") {
  auto const chain = chain_algebra();
  auto const self = are_isomorphic(chain, chain);
  REQUIRE(self.has_value());
  CHECK(*self == std::vector<Element>{0, 1, 2});

  auto const t = induced_algebra(generate_subpower(chain, 2, {{2, 1}}));
  CHECK(are_isomorphic(t.algebra, chain).has_value());

  auto const cfg = make_witness_config(chain, {7, 11});
  auto const t7 = induced_algebra(build_T(cfg, 7));
  auto const t11 = induced_algebra(build_T(cfg, 11));
  CHECK_FALSE(are_isomorphic(t7.algebra, t11.algebra).has_value());

  try {
    are_isomorphic(chain, make(3, {{"g", {0, 0, 1}}}));
    CHECK(false);
  } catch (Error const& e) {
    CHECK(e.code() == ErrorCode::OpSignatureMismatch);
  }
  CHECK_FALSE(are_isomorphic(chain, make(2, {{"f", {0, 0}}})).has_value());
}

TEST_CASE("canonical_form examples") {
  auto const chain = chain_algebra();
  std::mt19937_64 rng(1);
  for (int k = 0; k < 6; ++k) {
    CHECK(canonical_form(chain) == canonical_form(relabel(chain, oracle::random_permutation(rng, 3))));
  }
  CHECK(canonical_form(chain) != canonical_form(make(3, {{"f", {1, 1, 2}}})));

  auto const codes = enumerate_monogenic_up_to_iso(chain, 1);
  CHECK(std::set<CanonicalCode>(codes.begin(), codes.end()).size() == 3);

  CHECK(canonical_form(chain).hex() == "00000003000000010000000166000000010000000200000002");
}

TEST_CASE("canonical_labelling produces the code") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 50; ++trial) {
    auto const a = oracle::random_algebra(rng, 1 + rng() % 6, rng() % 3);
    auto const cl = canonical_labelling(a);
    CHECK(cl.code == canonical_form(relabel(a, cl.labelling)));
  }
}

TEST_CASE("are_isomorphic and canonical_form agree with brute force for n <= 4") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 600; ++trial) {
    auto const n = 1 + rng() % 4;
    auto const ops = 1 + rng() % 2;
    auto const a = oracle::random_algebra(rng, n, ops);
    // half the pairs are relabellings, half independent draws
    auto const b = (trial % 2 == 0) ? relabel(a, oracle::random_permutation(rng, n))
                                    : oracle::random_algebra(rng, n, ops);
    auto const truth = oracle::isomorphism(a, b).has_value();
    auto const found = are_isomorphic(a, b);
    CHECK(found.has_value() == truth);
    if (found) CHECK(is_isomorphism(a, b, *found));
    CHECK((canonical_form(a) == canonical_form(b)) == truth);
  }
}

TEST_CASE("highly symmetric algebras agree with brute force for n <= 7") {
  // ops land on at most two targets, giving many interchangeable leaves
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 150; ++trial) {
    auto const n = 4 + rng() % 4;
    auto random_sparse = [&] {
      OpMap ops;
      for (char const* name : {"f", "g"}) {
        Table t(n);
        for (auto& v : t) v = static_cast<Element>(rng() % 2);
        ops.emplace(name, std::move(t));
      }
      return make(n, ops);
    };
    auto const a = random_sparse();
    auto const b = (trial % 2 == 0) ? relabel(a, oracle::random_permutation(rng, n)) : random_sparse();
    auto const truth = oracle::isomorphism(a, b).has_value();
    CHECK(are_isomorphic(a, b).has_value() == truth);
    CHECK((canonical_form(a) == canonical_form(b)) == truth);
  }
}

TEST_CASE("returned isomorphisms are sound on larger algebras") {
  std::mt19937_64 rng(18);
  for (int trial = 0; trial < 60; ++trial) {
    auto const n = 5 + rng() % 20;
    auto const a = oracle::random_algebra(rng, n, 1 + rng() % 3);
    auto const b = relabel(a, oracle::random_permutation(rng, n));
    auto const phi = are_isomorphic(a, b);
    REQUIRE(phi.has_value());
    for (auto const& [name, t] : a.ops()) {
      for (std::size_t x = 0; x < n; ++x) CHECK((*phi)[t[x]] == b.op(name)[(*phi)[x]]);
    }
    CHECK(canonical_form(a) == canonical_form(b));
    CHECK(algebra_invariants(a) == algebra_invariants(b));
  }
}

TEST_CASE("symmetric algebras canonise quickly") {
  // many identical components and wide fan-ins
  std::vector<Element> star(40, 0);
  auto const a = make(40, {{"f", star}});
  std::vector<Element> cycles(60);
  for (std::size_t i = 0; i < 60; ++i) cycles[i] = static_cast<Element>((i / 3) * 3 + (i + 1) % 3);
  auto const b = make(60, {{"f", cycles}});
  std::mt19937_64 rng(19);
  SearchOptions options;
  options.timeout = std::chrono::milliseconds(5000);
  CHECK(canonical_form(a, options) == canonical_form(relabel(a, oracle::random_permutation(rng, 40)), options));
  CHECK(canonical_form(b, options) == canonical_form(relabel(b, oracle::random_permutation(rng, 60)), options));
}

TEST_CASE("isomorphic algebras have matching component codes") {
  std::mt19937_64 rng(20);
  for (int trial = 0; trial < 100; ++trial) {
    auto const n = 1 + rng() % 8;
    auto const a = oracle::random_algebra(rng, n, 1 + rng() % 2);
    auto const b = relabel(a, oracle::random_permutation(rng, n));
    CHECK(component_codes(a) == component_codes(b));
  }
}

TEST_CASE("digraph_isomorphic") {
  auto const c1 = plain(3, {{0, 1}, {1, 2}, {2, 0}});
  auto const c2 = plain(3, {{0, 2}, {2, 1}, {1, 0}});
  CHECK(digraph_isomorphic(c1, c2));
  CHECK_FALSE(digraph_isomorphic(plain(3, {{0, 1}, {1, 2}}), c1));
  CHECK_FALSE(digraph_isomorphic(plain(2, {}), plain(3, {})));
}

TEST_CASE("mono-unary algebras: algebra isomorphism iff digraph isomorphism") {
  std::mt19937_64 rng(22);
  for (int trial = 0; trial < 400; ++trial) {
    auto const n = 1 + rng() % 5;
    auto const a = oracle::random_algebra(rng, n, 1);
    auto const b = (trial % 2 == 0) ? relabel(a, oracle::random_permutation(rng, n))
                                    : oracle::random_algebra(rng, n, 1);
    CHECK(digraph_isomorphic(gamma(a), gamma(b)) == oracle::isomorphism(a, b).has_value());
  }
}

TEST_CASE("timeouts surface as Timeout errors") {
  std::vector<Element> id(200);
  std::iota(id.begin(), id.end(), Element{0});
  auto const a = make(200, {{"f", id}});
  SearchOptions options;
  options.timeout = std::chrono::milliseconds(0);
  try {
    canonical_form(a, options);
    // finishing instantly is also acceptable
  } catch (Error const& e) {
    CHECK(e.code() == ErrorCode::Timeout);
  }
}
