#include "ua/algebra.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

#include "ua/kernels.hpp"

namespace ua {

UnaryAlgebra::UnaryAlgebra(std::size_t carrier_size, OpMap ops, std::string name)
    : size_(carrier_size), ops_(std::move(ops)), name_(std::move(name)) {
  if (size_ == 0) {
    throw Error(ErrorCode::InvalidArgument, "carrier size must be at least 1");
  }
  for (auto const& [op_name, table] : ops_) {
    if (op_name.empty()) {
      throw Error(ErrorCode::InvalidArgument, "operation name is empty");
    }
    if (table.size() != size_) {
      throw Error(ErrorCode::InvalidArgument,
                  "operation '" + op_name + "' has " + std::to_string(table.size()) +
                      " entries, expected " + std::to_string(size_));
    }
    for (auto v : table) {
      if (v >= size_) {
        throw Error(ErrorCode::InvalidArgument,
                    "operation '" + op_name + "' value " + std::to_string(v) +
                        " out of range");
      }
    }
  }
}

Table const& UnaryAlgebra::op(std::string_view op) const {
  auto it = ops_.find(op);
  if (it == ops_.end()) {
    throw Error(ErrorCode::UnknownOp, "unknown operation '" + std::string(op) + "'");
  }
  return it->second;
}

std::vector<std::string> UnaryAlgebra::op_names() const {
  std::vector<std::string> names;
  names.reserve(ops_.size());
  for (auto const& [name, table] : ops_) names.push_back(name);
  return names;
}

UnaryAlgebra relabel(UnaryAlgebra const& algebra, std::span<Element const> perm) {
  auto const n = algebra.size();
  if (perm.size() != n) {
    throw Error(ErrorCode::InvalidArgument, "relabelling has the wrong length");
  }
  std::vector<bool> hit(n, false);
  for (auto v : perm) {
    if (v >= n || hit[v]) throw Error(ErrorCode::InvalidArgument, "relabelling is not a bijection");
    hit[v] = true;
  }
  OpMap ops;
  for (auto const& [name, table] : algebra.ops()) {
    Table out(n);
    for (std::size_t a = 0; a < n; ++a) out[perm[a]] = perm[table[a]];
    ops.emplace(name, std::move(out));
  }
  return UnaryAlgebra(n, std::move(ops), algebra.name());
}

Table compose(Table const& after, Table const& before) {
  Table out(before.size());
  for (std::size_t a = 0; a < before.size(); ++a) out[a] = after[before[a]];
  return out;
}

Table identity_table(std::size_t n) {
  Table t(n);
  std::iota(t.begin(), t.end(), Element{0});
  return t;
}

std::size_t image_size(std::span<Element const> table) {
  std::vector<bool> hit(table.size(), false);
  std::size_t count = 0;
  for (auto v : table) {
    if (!hit[v]) {
      hit[v] = true;
      ++count;
    }
  }
  return count;
}

bool is_constant(std::span<Element const> table) {
  return std::adjacent_find(table.begin(), table.end(), std::not_equal_to<>()) ==
         table.end();
}

std::string_view to_string(OpKind kind) noexcept {
  switch (kind) {
    case OpKind::Bijection: return "Bijection";
    case OpKind::Constant: return "Constant";
    case OpKind::Other: return "Other";
  }
  return "?";
}

OpKind op_kind(std::span<Element const> table) {
  if (image_size(table) == table.size()) return OpKind::Bijection;
  if (is_constant(table)) return OpKind::Constant;
  return OpKind::Other;
}

std::string_view to_string(Verdict verdict) noexcept {
  return verdict == Verdict::Countable ? "Countable" : "Uncountable";
}

TypeVerdict classify_type(UnaryAlgebra const& algebra) {
  TypeVerdict out;
  for (auto const& [name, table] : algebra.ops()) {
    switch (op_kind(table)) {
      case OpKind::Bijection: out.bijections.push_back(name); break;
      case OpKind::Constant: out.constants.push_back(name); break;
      case OpKind::Other:
        return TypeVerdict{Verdict::Uncountable, name, {}, {}};
    }
  }
  return out;
}

bool TransformationMonoid::contains(Table const& table) const {
  return index_.contains(table);
}

std::optional<std::size_t> TransformationMonoid::index_of(Table const& table) const {
  auto it = index_.find(table);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

TransformationMonoid generate_monoid(UnaryAlgebra const& algebra, Limits const& limits) {
  auto const n = algebra.size();
  if (n > limits.monoid_carrier) {
    throw Error(ErrorCode::Capacity,
                "monoid generation capped at carrier size " +
                    std::to_string(limits.monoid_carrier) + " (got " +
                    std::to_string(n) + ")");
  }
  TransformationMonoid mon;
  auto push = [&](Table t, Word w) {
    auto [it, inserted] = mon.index_.try_emplace(std::move(t), mon.elements_.size());
    if (inserted) {
      mon.elements_.push_back(it->first);
      mon.words_.push_back(std::move(w));
    }
  };
  push(identity_table(n), {});
  for (std::size_t i = 0; i < mon.elements_.size(); ++i) {
    for (auto const& [name, table] : algebra.ops()) {
      Word w = mon.words_[i];
      w.push_back(name);
      push(compose(table, mon.elements_[i]), std::move(w));
    }
  }
  return mon;
}

Table evaluate_word(UnaryAlgebra const& algebra, Word const& word) {
  Table t = identity_table(algebra.size());
  for (auto const& name : word) t = compose(algebra.op(name), t);
  return t;
}

Table min_image_nonconstant(UnaryAlgebra const& algebra, Limits const& limits) {
  if (classify_type(algebra).verdict != Verdict::Uncountable) {
    throw Error(ErrorCode::NotUncountable,
                "every basic operation is a bijection or a constant");
  }
  auto const mon = generate_monoid(algebra, limits);
  std::optional<std::size_t> best;
  std::size_t best_size = algebra.size() + 1;
  for (std::size_t i = 0; i < mon.size(); ++i) {
    auto const& t = mon.elements()[i];
    auto const s = image_size(t);
    if (s > 1 && s < best_size) {
      best = i;
      best_size = s;
    }
  }
  // A non-bijective non-constant basic op guarantees a candidate.
  return mon.elements()[*best];
}

bool is_congruence(UnaryAlgebra const& algebra, Partition const& partition) {
  if (partition.size() != algebra.size()) return false;
  // It suffices to check each element against its block's first element.
  auto const blocks = partition.blocks();
  for (auto const& [name, table] : algebra.ops()) {
    for (auto const& block : blocks) {
      auto const target = partition.block_of(table[block.front()]);
      for (auto a : block) {
        if (partition.block_of(table[a]) != target) return false;
      }
    }
  }
  return true;
}

std::vector<Congruence> congruence_lattice(UnaryAlgebra const& algebra,
                                           Limits const& limits) {
  auto const n = algebra.size();
  if (n > limits.congruence_carrier) {
    throw Error(ErrorCode::Capacity,
                "congruence enumeration capped at carrier size " +
                    std::to_string(limits.congruence_carrier) + " (got " +
                    std::to_string(n) + ")");
  }
  return kernels::parallel::filter_congruences(algebra, kernels::all_partitions(n));
}

bool is_subdirectly_irreducible(UnaryAlgebra const& algebra, Limits const& limits) {
  if (algebra.size() == 1) return false;
  auto const lattice = congruence_lattice(algebra, limits);
  std::optional<Partition> meet;
  for (auto const& c : lattice) {
    if (c.is_discrete()) continue;
    meet = meet ? meet->meet(c) : c;
  }
  return meet && !meet->is_discrete();
}

}  // namespace ua
