#include "ua/partition.hpp"

#include <numeric>
#include <sstream>

#include "ua/error.hpp"

namespace ua {

namespace {

std::size_t find(std::vector<std::size_t>& parent, std::size_t x) {
  while (parent[x] != x) {
    parent[x] = parent[parent[x]];
    x = parent[x];
  }
  return x;
}

}  // namespace

Partition Partition::from_blocks(std::size_t size,
                                 std::vector<std::vector<std::size_t>> const& blocks) {
  constexpr std::size_t unset = static_cast<std::size_t>(-1);
  std::vector<std::size_t> label(size, unset);
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    if (blocks[b].empty()) {
      throw Error(ErrorCode::InvalidArgument, "partition block is empty");
    }
    for (auto i : blocks[b]) {
      if (i >= size) {
        throw Error(ErrorCode::InvalidArgument, "partition element out of range");
      }
      if (label[i] != unset) {
        throw Error(ErrorCode::InvalidArgument, "partition blocks overlap");
      }
      label[i] = b;
    }
  }
  for (auto l : label) {
    if (l == unset) {
      throw Error(ErrorCode::InvalidArgument, "partition blocks do not cover");
    }
  }
  return from_labels(std::span<std::size_t const>(label));
}

Partition Partition::discrete(std::size_t size) {
  std::vector<std::uint32_t> labels(size);
  std::iota(labels.begin(), labels.end(), 0U);
  return Partition(std::move(labels), size);
}

Partition Partition::full(std::size_t size) {
  return Partition(std::vector<std::uint32_t>(size, 0), size == 0 ? 0 : 1);
}

std::vector<std::vector<std::size_t>> Partition::blocks() const {
  std::vector<std::vector<std::size_t>> out(block_count_);
  for (std::size_t i = 0; i < block_of_.size(); ++i) {
    out[block_of_[i]].push_back(i);
  }
  return out;
}

bool Partition::refines(Partition const& coarser) const {
  if (coarser.size() != size()) return false;
  // Each block of *this must map to exactly one block of `coarser`.
  constexpr std::uint32_t unset = static_cast<std::uint32_t>(-1);
  std::vector<std::uint32_t> image(block_count_, unset);
  for (std::size_t i = 0; i < size(); ++i) {
    auto& slot = image[block_of_[i]];
    if (slot == unset) {
      slot = coarser.block_of_[i];
    } else if (slot != coarser.block_of_[i]) {
      return false;
    }
  }
  return true;
}

Partition Partition::meet(Partition const& other) const {
  if (other.size() != size()) {
    throw Error(ErrorCode::InvalidArgument, "meet of partitions of different sizes");
  }
  std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs(size());
  for (std::size_t i = 0; i < size(); ++i) {
    pairs[i] = {block_of_[i], other.block_of_[i]};
  }
  return from_labels(std::span<std::pair<std::uint32_t, std::uint32_t> const>(pairs));
}

Partition Partition::join(Partition const& other) const {
  if (other.size() != size()) {
    throw Error(ErrorCode::InvalidArgument, "join of partitions of different sizes");
  }
  std::vector<std::size_t> parent(size());
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto unite_blocks = [&](Partition const& p) {
    std::vector<std::size_t> first(p.block_count(), static_cast<std::size_t>(-1));
    for (std::size_t i = 0; i < size(); ++i) {
      auto& f = first[p.block_of_[i]];
      if (f == static_cast<std::size_t>(-1)) {
        f = i;
      } else {
        parent[find(parent, i)] = find(parent, f);
      }
    }
  };
  unite_blocks(*this);
  unite_blocks(other);
  std::vector<std::size_t> roots(size());
  for (std::size_t i = 0; i < size(); ++i) roots[i] = find(parent, i);
  return from_labels(std::span<std::size_t const>(roots));
}

std::string Partition::to_string() const {
  std::ostringstream out;
  out << '{';
  bool first_block = true;
  for (auto const& block : blocks()) {
    if (!first_block) out << ',';
    first_block = false;
    out << '{';
    for (std::size_t k = 0; k < block.size(); ++k) {
      if (k) out << ',';
      out << block[k];
    }
    out << '}';
  }
  out << '}';
  return out.str();
}

}  // namespace ua
