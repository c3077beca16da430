#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "ua/algebra.hpp"
#include "ua/powers.hpp"

namespace ua {

// ({0,1,2}, f(x) = max(x-1, 0)).
UnaryAlgebra chain_algebra();

// Least m > 0 with f^m(x) = x for a tuple whose coordinates lie on cycles of
// the given lengths: their lcm. Throws EmptyInput, InvalidArgument on zero.
std::uint64_t tuple_cycle_length(std::span<std::uint64_t const> cycle_lengths);

// Per-coordinate cycle lengths of x under a bijective op. Throws
// InvalidArgument if the op is not a bijection.
std::vector<std::uint64_t> cycle_lengths(UnaryAlgebra const& algebra, std::string_view op,
                                         Tuple const& x);

// Shortest number of steps from x to y in the power of ({0..m-1}, all
// transpositions), one transposition applied pointwise per step. nullopt when
// y is unreachable (formats differ). Throws LengthMismatch, InvalidArgument
// on entries >= m, Capacity when m^len exceeds limits.enumeration.
std::optional<std::size_t> transposition_distance(std::size_t m, Tuple const& x, Tuple const& y,
                                                  Limits const& limits = {});

// Boolean algebra of subsets of X = {0..ground-1}; bit i of a member is
// element i. Validated on construction.
class FieldOfSets {
 public:
  using Mask = std::uint64_t;

  FieldOfSets(std::size_t ground, std::vector<Mask> members);

  static FieldOfSets powerset(std::size_t ground);
  static FieldOfSets trivial(std::size_t ground);

  std::size_t ground() const noexcept { return ground_; }
  Mask full_mask() const noexcept;
  std::vector<Mask> const& members() const noexcept { return members_; }
  bool contains(Mask m) const;

 private:
  std::size_t ground_;
  std::vector<Mask> members_;  // sorted
};

// Tuples x in A^X with every format block a member of `field`. Subdirectness
// is not assumed; check it with is_subdirect. Throws Capacity when n^|X|
// exceeds limits.enumeration.
Subpower boolean_power(UnaryAlgebra const& algebra, FieldOfSets const& field,
                       Limits const& limits = {});

struct BooleanPowerProfile {
  Tuple sink;
  std::size_t sink_predecessors = 0;
  // Strict predecessors of the sink with their own strict-predecessor counts.
  std::vector<std::pair<Tuple, std::size_t>> predecessors;
  // count -> number of sink predecessors having that many predecessors
  std::map<std::size_t, std::size_t> histogram;

  // Same graph shape (ignores which tuples realise it).
  bool same_shape(BooleanPowerProfile const& other) const {
    return sink_predecessors == other.sink_predecessors && histogram == other.histogram;
  }
};

// Depth-two tree description of Γ of the boolean power. Throws
// NotChainAlgebra unless `algebra` is isomorphic to chain_algebra().
BooleanPowerProfile boolean_power_profile(UnaryAlgebra const& algebra, FieldOfSets const& field,
                                          Limits const& limits = {});

}  // namespace ua
