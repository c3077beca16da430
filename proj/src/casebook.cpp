#include "ua/casebook.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <numeric>

#include "ua/digraph.hpp"
#include "ua/iso.hpp"
#include "ua/kernels.hpp"

namespace ua {

UnaryAlgebra chain_algebra() {
  return UnaryAlgebra(3, OpMap{{"f", Table{0, 0, 1}}}, "chain");
}

std::uint64_t tuple_cycle_length(std::span<std::uint64_t const> cycle_lengths) {
  if (cycle_lengths.empty()) {
    throw Error(ErrorCode::EmptyInput, "cycle length sequence is empty");
  }
  std::uint64_t m = 1;
  for (auto s : cycle_lengths) {
    if (s == 0) throw Error(ErrorCode::InvalidArgument, "cycle lengths must be positive");
    m = std::lcm(m, s);
  }
  return m;
}

std::vector<std::uint64_t> cycle_lengths(UnaryAlgebra const& algebra, std::string_view op,
                                         Tuple const& x) {
  auto const& table = algebra.op(op);
  if (op_kind(table) != OpKind::Bijection) {
    throw Error(ErrorCode::InvalidArgument, "operation '" + std::string(op) + "' is not a bijection");
  }
  std::vector<std::uint64_t> out;
  out.reserve(x.size());
  for (auto a : x) {
    std::uint64_t len = 1;
    for (auto b = table[a]; b != a; b = table[b]) ++len;
    out.push_back(len);
  }
  return out;
}

std::optional<std::size_t> transposition_distance(std::size_t m, Tuple const& x, Tuple const& y,
                                                  Limits const& limits) {
  if (x.size() != y.size()) {
    throw Error(ErrorCode::LengthMismatch, "tuples have different lengths");
  }
  for (auto const* t : {&x, &y}) {
    for (auto v : *t) {
      if (v >= m) throw Error(ErrorCode::InvalidArgument, "tuple entry out of range");
    }
  }
  if (x == y) return 0;
  // Transpositions are bijections, so they preserve format.
  if (format(x) != format(y)) return std::nullopt;

  auto const len = x.size();
  auto const states = bounded_power(m, len, limits.enumeration);
  if (!states) {
    throw Error(ErrorCode::Capacity, "transposition search space exceeds the enumeration cap");
  }
  auto encode = [&](Tuple const& t) {
    std::size_t idx = 0;
    for (auto v : t) idx = idx * m + v;
    return idx;
  };
  constexpr std::size_t unseen = static_cast<std::size_t>(-1);
  std::vector<std::size_t> dist(*states, unseen);
  std::deque<Tuple> queue{x};
  dist[encode(x)] = 0;
  auto const goal = encode(y);
  while (!queue.empty()) {
    auto const t = std::move(queue.front());
    queue.pop_front();
    auto const d = dist[encode(t)];
    for (Element a = 0; a < m; ++a) {
      for (Element b = a + 1; b < m; ++b) {
        Tuple next = t;
        bool moved = false;
        for (auto& v : next) {
          if (v == a) {
            v = b;
            moved = true;
          } else if (v == b) {
            v = a;
            moved = true;
          }
        }
        if (!moved) continue;
        auto const idx = encode(next);
        if (dist[idx] != unseen) continue;
        dist[idx] = d + 1;
        if (idx == goal) return d + 1;
        queue.push_back(std::move(next));
      }
    }
  }
  return std::nullopt;
}

FieldOfSets::FieldOfSets(std::size_t ground, std::vector<Mask> members)
    : ground_(ground), members_(std::move(members)) {
  if (ground_ == 0 || ground_ > 64) {
    throw Error(ErrorCode::InvalidArgument, "ground set size must be in 1..64");
  }
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
  auto const full = full_mask();
  for (auto m : members_) {
    if ((m & ~full) != 0) {
      throw Error(ErrorCode::InvalidArgument, "member has elements outside the ground set");
    }
  }
  if (!contains(0) || !contains(full)) {
    throw Error(ErrorCode::InvalidArgument, "field of sets must contain the empty set and X");
  }
  for (auto a : members_) {
    if (!contains(full & ~a)) {
      throw Error(ErrorCode::InvalidArgument, "field of sets is not closed under complement");
    }
    for (auto b : members_) {
      if (!contains(a | b)) {
        throw Error(ErrorCode::InvalidArgument, "field of sets is not closed under union");
      }
    }
  }
}

FieldOfSets FieldOfSets::powerset(std::size_t ground) {
  if (ground == 0 || ground > 20) {
    throw Error(ErrorCode::InvalidArgument, "powerset ground size must be in 1..20");
  }
  std::vector<Mask> members(std::size_t{1} << ground);
  std::iota(members.begin(), members.end(), Mask{0});
  return FieldOfSets(ground, std::move(members));
}

FieldOfSets FieldOfSets::trivial(std::size_t ground) {
  auto const full = ground >= 64 ? ~Mask{0} : (Mask{1} << ground) - 1;
  return FieldOfSets(ground, {Mask{0}, full});
}

FieldOfSets::Mask FieldOfSets::full_mask() const noexcept {
  return ground_ >= 64 ? ~Mask{0} : (Mask{1} << ground_) - 1;
}

bool FieldOfSets::contains(Mask m) const {
  return std::binary_search(members_.begin(), members_.end(), m);
}

Subpower boolean_power(UnaryAlgebra const& algebra, FieldOfSets const& field,
                       Limits const& limits) {
  auto const count = bounded_power(algebra.size(), field.ground(), limits.enumeration);
  if (!count) {
    throw Error(ErrorCode::Capacity, "A^X has more than " + std::to_string(limits.enumeration) +
                                         " tuples");
  }
  auto members = kernels::parallel::boolean_power_members(algebra, field, *count);
  auto generators = members;
  return Subpower(algebra, field.ground(), std::move(members), std::move(generators));
}

BooleanPowerProfile boolean_power_profile(UnaryAlgebra const& algebra, FieldOfSets const& field,
                                          Limits const& limits) {
  if (algebra.size() != 3 || algebra.op_count() != 1) {
    throw Error(ErrorCode::NotChainAlgebra, "profile needs the three-element chain algebra");
  }
  auto const op_name = algebra.ops().begin()->first;
  auto const renamed = UnaryAlgebra(3, OpMap{{"f", algebra.ops().begin()->second}});
  if (canonical_form(renamed) != canonical_form(chain_algebra())) {
    throw Error(ErrorCode::NotChainAlgebra, "algebra is not isomorphic to the chain algebra");
  }

  auto const power = boolean_power(algebra, field, limits);
  auto const induced = induced_algebra(power);
  auto const& f = induced.algebra.op(op_name);
  auto const counts = predecessor_profile(gamma(induced.algebra), op_name);

  BooleanPowerProfile profile;
  std::optional<std::size_t> sink;
  for (std::size_t v = 0; v < f.size(); ++v) {
    if (f[v] == v) sink = v;  // the chain has a single fixed point
  }
  profile.sink = induced.tuples[*sink];
  profile.sink_predecessors = counts[*sink];
  for (std::size_t v = 0; v < f.size(); ++v) {
    if (v == *sink || f[v] != *sink) continue;
    profile.predecessors.emplace_back(induced.tuples[v], counts[v]);
    ++profile.histogram[counts[v]];
  }
  return profile;
}

}  // namespace ua
