#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

namespace ua {

// A partition of {0, ..., size-1}, stored in canonical form: block ids are
// assigned in order of first occurrence (a restricted growth string), so two
// partitions are equal iff their label vectors are equal.
class Partition {
 public:
  Partition() = default;

  // Kernel of an arbitrary labelling: i and j share a block iff
  // labels[i] == labels[j].
  template <typename T>
  static Partition from_labels(std::span<T const> labels);

  static Partition from_blocks(std::size_t size,
                               std::vector<std::vector<std::size_t>> const& blocks);
  static Partition discrete(std::size_t size);
  static Partition full(std::size_t size);

  std::size_t size() const noexcept { return block_of_.size(); }
  std::size_t block_count() const noexcept { return block_count_; }
  std::size_t block_of(std::size_t i) const { return block_of_[i]; }
  std::vector<std::uint32_t> const& labels() const noexcept { return block_of_; }

  // Blocks sorted internally, ordered by least element.
  std::vector<std::vector<std::size_t>> blocks() const;

  bool same_block(std::size_t i, std::size_t j) const {
    return block_of_[i] == block_of_[j];
  }

  // Every block of *this lies inside a block of `coarser`.
  bool refines(Partition const& coarser) const;

  Partition meet(Partition const& other) const;
  // Finest partition coarser than both.
  Partition join(Partition const& other) const;

  bool is_discrete() const noexcept { return block_count_ == size(); }
  bool is_full() const noexcept { return block_count_ <= 1; }

  std::string to_string() const;

  friend bool operator==(Partition const&, Partition const&) = default;
  friend auto operator<=>(Partition const& a, Partition const& b) {
    return a.block_of_ <=> b.block_of_;
  }

 private:
  explicit Partition(std::vector<std::uint32_t> canonical, std::size_t count)
      : block_of_(std::move(canonical)), block_count_(count) {}

  std::vector<std::uint32_t> block_of_;
  std::size_t block_count_ = 0;
};

using IndexPartition = Partition;

template <typename T>
Partition Partition::from_labels(std::span<T const> labels) {
  std::vector<std::uint32_t> canonical(labels.size());
  std::map<T, std::uint32_t> seen;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    auto const next = static_cast<std::uint32_t>(seen.size());
    canonical[i] = seen.try_emplace(labels[i], next).first->second;
  }
  return Partition(std::move(canonical), seen.size());
}

}  // namespace ua
