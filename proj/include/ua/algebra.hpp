#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ua/error.hpp"
#include "ua/partition.hpp"

namespace ua {

using Element = std::uint32_t;
using Table = std::vector<Element>;
using OpMap = std::map<std::string, Table, std::less<>>;

// A finite unary algebra on the carrier {0, ..., n-1}. Immutable once built;
// the constructor validates every table.
class UnaryAlgebra {
 public:
  UnaryAlgebra(std::size_t carrier_size, OpMap ops, std::string name = {});

  std::size_t size() const noexcept { return size_; }
  OpMap const& ops() const noexcept { return ops_; }
  std::string const& name() const noexcept { return name_; }
  std::size_t op_count() const noexcept { return ops_.size(); }

  bool has_op(std::string_view op) const { return ops_.find(op) != ops_.end(); }
  // Throws UnknownOp.
  Table const& op(std::string_view op) const;
  std::vector<std::string> op_names() const;

  friend bool operator==(UnaryAlgebra const& a, UnaryAlgebra const& b) {
    return a.size_ == b.size_ && a.ops_ == b.ops_;
  }

 private:
  std::size_t size_;
  OpMap ops_;
  std::string name_;
};

// The image of `algebra` under the carrier bijection `perm` (element a of the
// input becomes perm[a]).
UnaryAlgebra relabel(UnaryAlgebra const& algebra, std::span<Element const> perm);

// Table composition: (after ∘ before)(a) = after[before[a]].
Table compose(Table const& after, Table const& before);
Table identity_table(std::size_t n);
std::size_t image_size(std::span<Element const> table);
bool is_constant(std::span<Element const> table);

enum class OpKind { Bijection, Constant, Other };

std::string_view to_string(OpKind kind) noexcept;

// On a one-element carrier the only self-map is reported as a Bijection.
OpKind op_kind(std::span<Element const> table);

enum class Verdict { Countable, Uncountable };

std::string_view to_string(Verdict verdict) noexcept;

struct TypeVerdict {
  Verdict verdict = Verdict::Countable;
  // Set when Uncountable: the first (by name) operation of kind Other.
  std::optional<std::string> witness;
  // Set when Countable.
  std::vector<std::string> bijections;
  std::vector<std::string> constants;
};

TypeVerdict classify_type(UnaryAlgebra const& algebra);

using Word = std::vector<std::string>;

// Mon(A). Elements are listed in breadth-first order, which is shortlex order
// of their shortest generator words (ops applied left to right, so the word
// (f, g) denotes x -> g(f(x))).
class TransformationMonoid {
 public:
  std::size_t size() const noexcept { return elements_.size(); }
  std::vector<Table> const& elements() const noexcept { return elements_; }
  std::vector<Word> const& words() const noexcept { return words_; }
  bool contains(Table const& table) const;
  std::optional<std::size_t> index_of(Table const& table) const;

 private:
  friend TransformationMonoid generate_monoid(UnaryAlgebra const&, Limits const&);

  std::vector<Table> elements_;
  std::vector<Word> words_;
  std::map<Table, std::size_t> index_;
};

// Throws Capacity when the carrier exceeds limits.monoid_carrier.
TransformationMonoid generate_monoid(UnaryAlgebra const& algebra,
                                     Limits const& limits = {});

// Evaluate a word over the basic operations of `algebra`.
Table evaluate_word(UnaryAlgebra const& algebra, Word const& word);

// A non-constant element of Mon(A) of least image size, first in monoid order
// among ties. Throws NotUncountable unless classify_type says Uncountable.
Table min_image_nonconstant(UnaryAlgebra const& algebra, Limits const& limits = {});

using Congruence = Partition;

bool is_congruence(UnaryAlgebra const& algebra, Partition const& partition);

// All congruences, in increasing order of their canonical labels. Throws
// Capacity above limits.congruence_carrier.
std::vector<Congruence> congruence_lattice(UnaryAlgebra const& algebra,
                                           Limits const& limits = {});

// One-element algebras are not subdirectly irreducible.
bool is_subdirectly_irreducible(UnaryAlgebra const& algebra, Limits const& limits = {});

}  // namespace ua
