#pragma once

// Brute-force reference computations used only by the tests. None of these
// share code paths with the library routines they check.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <vector>

#include "ua/algebra.hpp"
#include "ua/powers.hpp"

namespace oracle {

using ua::Element;
using ua::Table;
using ua::Tuple;
using ua::UnaryAlgebra;

// Naive fixpoint: keep composing every pair until nothing new appears.
inline std::set<Table> monoid(UnaryAlgebra const& a) {
  std::set<Table> s;
  Table id(a.size());
  std::iota(id.begin(), id.end(), Element{0});
  s.insert(id);
  for (auto const& [name, t] : a.ops()) s.insert(t);
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<Table> items(s.begin(), s.end());
    for (auto const& f : items) {
      for (auto const& g : items) {
        Table h(a.size());
        for (std::size_t x = 0; x < a.size(); ++x) h[x] = f[g[x]];
        grew = s.insert(h).second || grew;
      }
    }
  }
  return s;
}

// All set partitions, as block lists, by recursive insertion.
inline void partitions_rec(std::size_t i, std::size_t n, std::vector<std::vector<std::size_t>>& cur,
                           std::vector<std::vector<std::vector<std::size_t>>>& out) {
  if (i == n) {
    out.push_back(cur);
    return;
  }
  for (std::size_t b = 0; b < cur.size(); ++b) {
    cur[b].push_back(i);
    partitions_rec(i + 1, n, cur, out);
    cur[b].pop_back();
  }
  cur.push_back({i});
  partitions_rec(i + 1, n, cur, out);
  cur.pop_back();
}

inline std::vector<std::vector<std::vector<std::size_t>>> partitions(std::size_t n) {
  std::vector<std::vector<std::vector<std::size_t>>> out;
  std::vector<std::vector<std::size_t>> cur;
  partitions_rec(0, n, cur, out);
  return out;
}

inline std::vector<std::size_t> block_labels(std::vector<std::vector<std::size_t>> const& blocks,
                                             std::size_t n) {
  std::vector<std::size_t> label(n);
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    for (auto x : blocks[b]) label[x] = b;
  }
  return label;
}

// a ≡ b  =>  f(a) ≡ f(b), checked over all pairs.
inline bool compatible(UnaryAlgebra const& a, std::vector<std::size_t> const& label) {
  for (auto const& [name, t] : a.ops()) {
    for (std::size_t x = 0; x < a.size(); ++x) {
      for (std::size_t y = 0; y < a.size(); ++y) {
        if (label[x] == label[y] && label[t[x]] != label[t[y]]) return false;
      }
    }
  }
  return true;
}

// Congruences as sorted block lists (blocks sorted by least element).
inline std::set<std::vector<std::vector<std::size_t>>> congruences(UnaryAlgebra const& a) {
  std::set<std::vector<std::vector<std::size_t>>> out;
  for (auto blocks : partitions(a.size())) {
    if (!compatible(a, block_labels(blocks, a.size()))) continue;
    for (auto& b : blocks) std::sort(b.begin(), b.end());
    std::sort(blocks.begin(), blocks.end());
    out.insert(blocks);
  }
  return out;
}

// Meet of all non-identity congruences is non-identity.
inline bool subdirectly_irreducible(UnaryAlgebra const& a) {
  if (a.size() == 1) return false;
  auto const n = a.size();
  // pair (x,y), x<y, survives if every non-identity congruence merges it
  std::vector<std::vector<bool>> together(n, std::vector<bool>(n, true));
  bool any = false;
  for (auto const& blocks : congruences(a)) {
    if (blocks.size() == n) continue;
    any = true;
    auto const label = block_labels(blocks, n);
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = 0; y < n; ++y) {
        if (label[x] != label[y]) together[x][y] = false;
      }
    }
  }
  if (!any) return false;
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = x + 1; y < n; ++y) {
      if (together[x][y]) return true;
    }
  }
  return false;
}

// Try every bijection.
inline std::optional<std::vector<Element>> isomorphism(UnaryAlgebra const& a, UnaryAlgebra const& b) {
  if (a.size() != b.size()) return std::nullopt;
  std::vector<Element> phi(a.size());
  std::iota(phi.begin(), phi.end(), Element{0});
  do {
    bool ok = true;
    for (auto const& [name, t] : a.ops()) {
      auto const& u = b.op(name);
      for (std::size_t x = 0; x < a.size() && ok; ++x) ok = phi[t[x]] == u[phi[x]];
      if (!ok) break;
    }
    if (ok) return phi;
  } while (std::next_permutation(phi.begin(), phi.end()));
  return std::nullopt;
}

// reach[u][v]: v reachable from u along any op (reflexive).
inline std::vector<std::vector<bool>> reachability(UnaryAlgebra const& a) {
  auto const n = a.size();
  std::vector<std::vector<bool>> r(n, std::vector<bool>(n, false));
  for (std::size_t v = 0; v < n; ++v) {
    r[v][v] = true;
    for (auto const& [name, t] : a.ops()) r[v][t[v]] = true;
  }
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (r[i][k] && r[k][j]) r[i][j] = true;
      }
    }
  }
  return r;
}

// Closure of a tuple set by repeated full sweeps.
inline std::set<Tuple> closure(UnaryAlgebra const& a, std::set<Tuple> s) {
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<Tuple> items(s.begin(), s.end());
    for (auto const& x : items) {
      for (auto const& [name, t] : a.ops()) {
        Tuple y(x.size());
        for (std::size_t i = 0; i < x.size(); ++i) y[i] = t[x[i]];
        grew = s.insert(y).second || grew;
      }
    }
  }
  return s;
}

inline UnaryAlgebra random_algebra(std::mt19937_64& rng, std::size_t n, std::size_t ops) {
  std::uniform_int_distribution<Element> value(0, static_cast<Element>(n - 1));
  ua::OpMap map;
  static char const* names[] = {"f", "g", "h", "k"};
  for (std::size_t k = 0; k < ops; ++k) {
    Table t(n);
    for (auto& v : t) v = value(rng);
    map.emplace(names[k], std::move(t));
  }
  return UnaryAlgebra(n, std::move(map));
}

inline std::vector<Element> random_permutation(std::mt19937_64& rng, std::size_t n) {
  std::vector<Element> p(n);
  std::iota(p.begin(), p.end(), Element{0});
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

inline Tuple random_tuple(std::mt19937_64& rng, std::size_t n, std::size_t len) {
  std::uniform_int_distribution<Element> value(0, static_cast<Element>(n - 1));
  Tuple t(len);
  for (auto& v : t) v = value(rng);
  return t;
}

}  // namespace oracle
