#include "ua/powers.hpp"

#include <algorithm>

#include "ua/iso.hpp"
#include "ua/kernels.hpp"

namespace ua {

std::size_t TupleHash::operator()(Tuple const& t) const noexcept {
  // FNV-1a over the entries.
  std::size_t h = 1469598103934665603ULL;
  for (auto v : t) {
    h ^= v;
    h *= 1099511628211ULL;
  }
  return h;
}

Tuple apply_pointwise(Table const& table, Tuple const& x) {
  Tuple y(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) y[i] = table[x[i]];
  return y;
}

Tuple apply_pointwise(UnaryAlgebra const& algebra, std::string_view op, Tuple const& x) {
  return apply_pointwise(algebra.op(op), x);
}

std::vector<Element> content(Tuple const& x) {
  std::vector<Element> c(x.begin(), x.end());
  std::sort(c.begin(), c.end());
  c.erase(std::unique(c.begin(), c.end()), c.end());
  return c;
}

IndexPartition format(Tuple const& x) {
  return Partition::from_labels(std::span<Element const>(x));
}

std::vector<std::size_t> positions_of(Tuple const& x, Element a) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] == a) out.push_back(i);
  }
  return out;
}

Subpower::Subpower(UnaryAlgebra base, std::size_t exponent)
    : base_(std::move(base)), exponent_(exponent) {}

Subpower::Subpower(UnaryAlgebra base, std::size_t exponent, std::vector<Tuple> elements,
                   std::vector<Tuple> generators)
    : base_(std::move(base)),
      exponent_(exponent),
      elements_(std::move(elements)),
      generators_(std::move(generators)) {
  for (auto const* list : {&elements_, &generators_}) {
    for (auto const& t : *list) {
      if (t.size() != exponent_) {
        throw Error(ErrorCode::InvalidArgument, "tuple length differs from the exponent");
      }
      for (auto v : t) {
        if (v >= base_.size()) {
          throw Error(ErrorCode::InvalidArgument, "tuple entry out of range");
        }
      }
    }
  }
  std::sort(elements_.begin(), elements_.end());
  elements_.erase(std::unique(elements_.begin(), elements_.end()), elements_.end());
  index_.reserve(elements_.size());
  for (std::size_t i = 0; i < elements_.size(); ++i) index_.emplace(elements_[i], i);
}

std::optional<std::size_t> Subpower::index_of(Tuple const& x) const {
  auto it = index_.find(x);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

bool Subpower::is_closed() const {
  for (auto const& [name, table] : base_.ops()) {
    for (auto const& x : elements_) {
      if (!contains(apply_pointwise(table, x))) return false;
    }
  }
  return true;
}

Subpower generate_subpower(UnaryAlgebra const& algebra, std::size_t exponent,
                           std::vector<Tuple> const& generators, Limits const& limits) {
  for (auto const& g : generators) {
    if (g.size() != exponent) {
      throw Error(ErrorCode::InvalidArgument, "generator length differs from the exponent");
    }
    for (auto v : g) {
      if (v >= algebra.size()) throw Error(ErrorCode::InvalidArgument, "generator entry out of range");
    }
  }
  auto elements = kernels::parallel::closure(algebra, generators, limits.subpower_elements);
  return Subpower(algebra, exponent, std::move(elements), generators);
}

bool is_subdirect(Subpower const& subpower) {
  auto const n = subpower.base().size();
  for (std::size_t i = 0; i < subpower.exponent(); ++i) {
    std::vector<bool> seen(n, false);
    std::size_t count = 0;
    for (auto const& x : subpower.elements()) {
      if (!seen[x[i]]) {
        seen[x[i]] = true;
        if (++count == n) break;
      }
    }
    if (count != n) return false;
  }
  return true;
}

std::vector<Tuple> intersection(Subpower const& a, Subpower const& b) {
  std::vector<Tuple> out;
  std::set_intersection(a.elements().begin(), a.elements().end(), b.elements().begin(),
                        b.elements().end(), std::back_inserter(out));
  return out;
}

Tuple constant_tuple(Element a, std::size_t exponent) { return Tuple(exponent, a); }

std::vector<Element> constant_images(UnaryAlgebra const& algebra, Limits const& limits) {
  std::vector<Element> out;
  auto const monoid = generate_monoid(algebra, limits);
  for (auto const& t : monoid.elements()) {
    if (is_constant(t)) out.push_back(t.front());
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Diagonals diagonals(UnaryAlgebra const& algebra, std::size_t exponent, Limits const& limits) {
  std::vector<Tuple> full;
  for (Element a = 0; a < algebra.size(); ++a) full.push_back(constant_tuple(a, exponent));

  std::vector<Tuple> zero;
  for (auto a : constant_images(algebra, limits)) zero.push_back(constant_tuple(a, exponent));

  std::vector<Tuple> basic;
  for (auto const& [name, table] : algebra.ops()) {
    if (algebra.size() > 1 && op_kind(table) == OpKind::Constant) {
      basic.push_back(constant_tuple(table.front(), exponent));
    }
  }
  std::sort(basic.begin(), basic.end());
  basic.erase(std::unique(basic.begin(), basic.end()), basic.end());

  return Diagonals{Subpower(algebra, exponent, full, full),
                   Subpower(algebra, exponent, zero, zero),
                   generate_subpower(algebra, exponent, basic, limits)};
}

InducedAlgebra induced_algebra(Subpower const& subpower) {
  if (subpower.empty()) {
    throw Error(ErrorCode::EmptySubpower, "cannot induce an algebra on an empty subpower");
  }
  OpMap ops;
  for (auto const& [name, table] : subpower.base().ops()) {
    Table t(subpower.size());
    for (std::size_t i = 0; i < subpower.size(); ++i) {
      auto const image = subpower.index_of(apply_pointwise(table, subpower.elements()[i]));
      if (!image) {
        throw Error(ErrorCode::InvalidArgument, "subpower is not closed under '" + name + "'");
      }
      t[i] = static_cast<Element>(*image);
    }
    ops.emplace(name, std::move(t));
  }
  return InducedAlgebra{UnaryAlgebra(subpower.size(), std::move(ops), subpower.base().name()),
                        subpower.elements()};
}

std::optional<std::size_t> bounded_power(std::size_t base, std::size_t exponent,
                                         std::size_t cap) {
  std::size_t value = 1;
  for (std::size_t i = 0; i < exponent; ++i) {
    if (base != 0 && value > cap / base) return std::nullopt;
    value *= base;
  }
  if (value > cap) return std::nullopt;
  return value;
}

Tuple tuple_at(std::size_t index, std::size_t carrier, std::size_t exponent) {
  Tuple t(exponent);
  for (std::size_t i = exponent; i-- > 0;) {
    t[i] = static_cast<Element>(index % carrier);
    index /= carrier;
  }
  return t;
}

std::vector<CanonicalCode> enumerate_monogenic_up_to_iso(UnaryAlgebra const& algebra,
                                                         std::size_t exponent,
                                                         Limits const& limits) {
  auto const count = bounded_power(algebra.size(), exponent, limits.enumeration);
  if (!count) {
    throw Error(ErrorCode::Capacity, "A^N has more than " + std::to_string(limits.enumeration) +
                                         " tuples");
  }
  return kernels::parallel::monogenic_codes(algebra, exponent, *count);
}

}  // namespace ua
