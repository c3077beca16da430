#include <algorithm>
#include <unordered_set>

#include "ua/casebook.hpp"
#include "ua/kernels.hpp"
#include "kernels_detail.hpp"

namespace ua::kernels {

std::vector<Partition> all_partitions(std::size_t n) {
  std::vector<Partition> out;
  if (n == 0) return out;
  // Restricted growth strings: rgs[0] = 0, rgs[i] <= 1 + max(rgs[0..i-1]).
  std::vector<std::uint32_t> rgs(n, 0), prefix_max(n, 0);
  while (true) {
    out.push_back(Partition::from_labels(std::span<std::uint32_t const>(rgs)));
    std::size_t i = n;
    while (--i > 0) {
      if (rgs[i] <= prefix_max[i - 1]) break;
    }
    if (i == 0) break;
    ++rgs[i];
    prefix_max[i] = std::max(prefix_max[i - 1], rgs[i]);
    for (std::size_t j = i + 1; j < n; ++j) {
      rgs[j] = 0;
      prefix_max[j] = prefix_max[i];
    }
  }
  return out;
}

bool field_admits(FieldOfSets const& field, Tuple const& x, std::size_t carrier) {
  std::vector<FieldOfSets::Mask> blocks(carrier, 0);
  for (std::size_t i = 0; i < x.size(); ++i) blocks[x[i]] |= FieldOfSets::Mask{1} << i;
  return std::all_of(blocks.begin(), blocks.end(),
                     [&](auto mask) { return mask == 0 || field.contains(mask); });
}

namespace serial {

std::vector<Partition> filter_congruences(UnaryAlgebra const& algebra,
                                          std::vector<Partition> const& candidates) {
  std::vector<Partition> out;
  for (auto const& p : candidates) {
    if (is_congruence(algebra, p)) out.push_back(p);
  }
  return out;
}

std::vector<Tuple> closure(UnaryAlgebra const& algebra, std::vector<Tuple> const& generators,
                           std::size_t cap) {
  std::unordered_set<Tuple, TupleHash> seen(generators.begin(), generators.end());
  std::vector<Tuple> order(seen.begin(), seen.end());
  std::sort(order.begin(), order.end());
  if (order.size() > cap) throw Error(ErrorCode::Capacity, "subpower exceeds element cap");
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (auto const& [name, table] : algebra.ops()) {
      auto y = apply_pointwise(table, order[i]);
      if (seen.insert(y).second) {
        order.push_back(std::move(y));
        if (order.size() > cap) {
          throw Error(ErrorCode::Capacity,
                      "subpower exceeds element cap " + std::to_string(cap));
        }
      }
    }
  }
  std::sort(order.begin(), order.end());
  return order;
}

std::vector<CanonicalCode> monogenic_codes(UnaryAlgebra const& algebra, std::size_t exponent,
                                           std::size_t count) {
  std::vector<CanonicalCode> codes;
  for (std::size_t idx = 0; idx < count; ++idx) {
    auto const x = tuple_at(idx, algebra.size(), exponent);
    Subpower sub(algebra, exponent, closure(algebra, {x}, count), {x});
    codes.push_back(canonical_form(induced_algebra(sub).algebra));
  }
  std::sort(codes.begin(), codes.end());
  codes.erase(std::unique(codes.begin(), codes.end()), codes.end());
  return codes;
}

std::vector<Tuple> boolean_power_members(UnaryAlgebra const& algebra, FieldOfSets const& field,
                                         std::size_t count) {
  std::vector<Tuple> out;
  for (std::size_t idx = 0; idx < count; ++idx) {
    auto x = tuple_at(idx, algebra.size(), field.ground());
    if (field_admits(field, x, algebra.size())) out.push_back(std::move(x));
  }
  return out;
}

}  // namespace serial
}  // namespace ua::kernels
