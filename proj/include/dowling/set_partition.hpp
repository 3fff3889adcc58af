#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dowling/bigint.hpp"
#include "dowling/poset.hpp"

namespace dowling {

/// Default bound on the number of elements an exhaustive builder may create.
inline constexpr std::size_t kDefaultSizeCap = 20000;

/// A partition of the ground set {first, ..., last} stored as a restricted
/// growth string: block ids are numbered by first appearance, so blocks are
/// ordered by their minimum.
class SetPartition {
 public:
  SetPartition() = default;
  /// Throws DomainError unless `rgs` is a restricted growth string.
  SetPartition(int first, std::vector<std::uint8_t> rgs);
  /// Throws DomainError unless `blocks` partition {first..last}.
  static SetPartition from_blocks(int first, int last, const std::vector<std::vector<int>>& blocks);
  static SetPartition discrete(int first, int last);
  static SetPartition single_block(int first, int last);

  int first() const noexcept { return first_; }
  int last() const noexcept { return first_ + static_cast<int>(rgs_.size()) - 1; }
  std::size_t ground_size() const noexcept { return rgs_.size(); }
  int block_of(int x) const { return rgs_[static_cast<std::size_t>(x - first_)]; }
  int num_blocks() const noexcept;
  /// Ground size minus number of blocks.
  int rank() const noexcept { return static_cast<int>(rgs_.size()) - num_blocks(); }
  const std::vector<std::uint8_t>& rgs() const noexcept { return rgs_; }

  std::vector<std::vector<int>> blocks() const;
  std::vector<int> block_sizes() const;
  /// Every block of *this lies inside a block of `o`. Both must share the ground set.
  bool refines(const SetPartition& o) const;
  /// Blocks separated by '|', elements by spaces, e.g. "0|1 2|3".
  std::string to_string() const;

  auto operator<=>(const SetPartition&) const = default;

 private:
  int first_ = 1;
  std::vector<std::uint8_t> rgs_;
};

/// Every partition of {first..last}, in lexicographic order of restricted growth strings.
std::vector<SetPartition> all_set_partitions(int first, int last);

BigInt bell_number(int n);

/// The partition lattice of {first..first+n-1} ordered by refinement,
/// elements sorted by rank, then restricted growth string.
struct PartitionLattice {
  std::vector<SetPartition> parts;
  Poset poset;
  std::optional<std::size_t> index_of(const SetPartition& p) const;
};

/// Throws ResourceError when Bell(n) exceeds `cap`.
PartitionLattice build_partition_lattice(int n, std::size_t cap = kDefaultSizeCap, int first = 1);

}  // namespace dowling
