#pragma once

#include <cstddef>
#include <optional>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "ua/algebra.hpp"
#include "ua/partition.hpp"

namespace ua {

// An element of A^N; position i holds the i-th coordinate. Ordered
// lexicographically.
using Tuple = std::vector<Element>;

struct TupleHash {
  std::size_t operator()(Tuple const& t) const noexcept;
};

Tuple apply_pointwise(UnaryAlgebra const& algebra, std::string_view op, Tuple const& x);
Tuple apply_pointwise(Table const& table, Tuple const& x);

// Distinct entries, increasing.
std::vector<Element> content(Tuple const& x);
// Kernel of x viewed as a map positions -> carrier.
IndexPartition format(Tuple const& x);
// Positions of x holding a (the class [a]_x), increasing.
std::vector<std::size_t> positions_of(Tuple const& x, Element a);

// A subset of A^N closed under the basic operations. Elements are stored in
// lexicographic order; that order is the numbering used by induced_algebra.
class Subpower {
 public:
  Subpower(UnaryAlgebra base, std::size_t exponent);
  // Takes an already-closed element set; duplicates are removed.
  Subpower(UnaryAlgebra base, std::size_t exponent, std::vector<Tuple> elements,
           std::vector<Tuple> generators);

  UnaryAlgebra const& base() const noexcept { return base_; }
  std::size_t exponent() const noexcept { return exponent_; }
  std::size_t size() const noexcept { return elements_.size(); }
  bool empty() const noexcept { return elements_.empty(); }
  std::vector<Tuple> const& elements() const noexcept { return elements_; }
  std::vector<Tuple> const& generators() const noexcept { return generators_; }

  bool contains(Tuple const& x) const { return index_.contains(x); }
  std::optional<std::size_t> index_of(Tuple const& x) const;

  // Closure under every basic operation.
  bool is_closed() const;

  friend bool operator==(Subpower const& a, Subpower const& b) {
    return a.exponent_ == b.exponent_ && a.elements_ == b.elements_;
  }

 private:
  UnaryAlgebra base_;
  std::size_t exponent_;
  std::vector<Tuple> elements_;
  std::vector<Tuple> generators_;
  std::unordered_map<Tuple, std::size_t, TupleHash> index_;
};

// Least closed superset of `generators`. Throws Capacity when the closure
// exceeds limits.subpower_elements.
Subpower generate_subpower(UnaryAlgebra const& algebra, std::size_t exponent,
                           std::vector<Tuple> const& generators, Limits const& limits = {});

// Every coordinate projection is onto the carrier.
bool is_subdirect(Subpower const& subpower);

// Elements in both; the result keeps `a`'s base and no generators.
std::vector<Tuple> intersection(Subpower const& a, Subpower const& b);

Tuple constant_tuple(Element a, std::size_t exponent);

struct Diagonals {
  Subpower full;         // D
  Subpower constants;    // D_0: images of constant maps in Mon(A)
  Subpower basic_constants;  // generated by D_c, see diagonals()
};

// D, D_0 and the subpower generated by D_c (the diagonal over images of
// constant basic operations; its generators are exactly D_c). Throws Capacity
// from monoid generation.
Diagonals diagonals(UnaryAlgebra const& algebra, std::size_t exponent,
                    Limits const& limits = {});

// Images of the constant maps in Mon(A), increasing.
std::vector<Element> constant_images(UnaryAlgebra const& algebra, Limits const& limits = {});

struct InducedAlgebra {
  UnaryAlgebra algebra;
  std::vector<Tuple> tuples;  // element index -> tuple
};

// Throws EmptySubpower.
InducedAlgebra induced_algebra(Subpower const& subpower);

struct CanonicalCode;

// Canonical codes of the monogenic subpowers <x>, x in A^N, deduplicated and
// sorted. Throws Capacity when n^N exceeds limits.enumeration.
std::vector<CanonicalCode> enumerate_monogenic_up_to_iso(UnaryAlgebra const& algebra,
                                                         std::size_t exponent,
                                                         Limits const& limits = {});

// n^N, or nullopt past `cap`.
std::optional<std::size_t> bounded_power(std::size_t base, std::size_t exponent,
                                         std::size_t cap);

// The tuple with mixed-radix index `index` (position 0 most significant).
Tuple tuple_at(std::size_t index, std::size_t carrier, std::size_t exponent);

}  // namespace ua
