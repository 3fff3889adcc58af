#include "dowling/set_partition.hpp"

#include <algorithm>
#include <functional>

#include "dowling/errors.hpp"

namespace dowling {

SetPartition::SetPartition(int first, std::vector<std::uint8_t> rgs) : first_(first), rgs_(std::move(rgs)) {
  int next = 0;
  for (auto b : rgs_) {
    if (b > next) throw DomainError("not a restricted growth string");
    if (b == next) ++next;
  }
}

SetPartition SetPartition::from_blocks(int first, int last, const std::vector<std::vector<int>>& blocks) {
  if (last < first - 1) throw DomainError("empty ground range");
  const std::size_t size = static_cast<std::size_t>(last - first + 1);
  std::vector<int> owner(size, -1);
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    if (blocks[b].empty()) throw DomainError("empty block");
    for (int x : blocks[b]) {
      if (x < first || x > last) throw DomainError("block element " + std::to_string(x) + " outside ground set");
      int& o = owner[static_cast<std::size_t>(x - first)];
      if (o != -1) throw DomainError("element " + std::to_string(x) + " in two blocks");
      o = static_cast<int>(b);
    }
  }
  std::vector<int> renum(blocks.size(), -1);
  std::vector<std::uint8_t> rgs(size);
  int next = 0;
  for (std::size_t i = 0; i < size; ++i) {
    if (owner[i] == -1) throw DomainError("element " + std::to_string(first + static_cast<int>(i)) + " uncovered");
    int& r = renum[static_cast<std::size_t>(owner[i])];
    if (r == -1) r = next++;
    rgs[i] = static_cast<std::uint8_t>(r);
  }
  return SetPartition(first, std::move(rgs));
}

SetPartition SetPartition::discrete(int first, int last) {
  std::vector<std::uint8_t> rgs;
  for (int i = first; i <= last; ++i) rgs.push_back(static_cast<std::uint8_t>(i - first));
  return SetPartition(first, std::move(rgs));
}

SetPartition SetPartition::single_block(int first, int last) {
  return SetPartition(first, std::vector<std::uint8_t>(static_cast<std::size_t>(last - first + 1), 0));
}

int SetPartition::num_blocks() const noexcept {
  int m = 0;
  for (auto b : rgs_) m = std::max(m, b + 1);
  return m;
}

std::vector<std::vector<int>> SetPartition::blocks() const {
  std::vector<std::vector<int>> out(static_cast<std::size_t>(num_blocks()));
  for (std::size_t i = 0; i < rgs_.size(); ++i) out[rgs_[i]].push_back(first_ + static_cast<int>(i));
  return out;
}

std::vector<int> SetPartition::block_sizes() const {
  std::vector<int> out(static_cast<std::size_t>(num_blocks()), 0);
  for (auto b : rgs_) ++out[b];
  return out;
}

bool SetPartition::refines(const SetPartition& o) const {
  if (first_ != o.first_ || rgs_.size() != o.rgs_.size()) throw IncompatibleError("partitions of different ground sets");
  std::vector<int> image(static_cast<std::size_t>(num_blocks()), -1);
  for (std::size_t i = 0; i < rgs_.size(); ++i) {
    int& im = image[rgs_[i]];
    if (im == -1)
      im = o.rgs_[i];
    else if (im != o.rgs_[i])
      return false;
  }
  return true;
}

std::string SetPartition::to_string() const {
  std::string s;
  for (const auto& b : blocks()) {
    if (!s.empty()) s += '|';
    for (std::size_t i = 0; i < b.size(); ++i) {
      if (i) s += ' ';
      s += std::to_string(b[i]);
    }
  }
  return s;
}

std::vector<SetPartition> all_set_partitions(int first, int last) {
  std::vector<SetPartition> out;
  const int size = last - first + 1;
  if (size <= 0) {
    out.emplace_back(first, std::vector<std::uint8_t>{});
    return out;
  }
  std::vector<std::uint8_t> rgs(static_cast<std::size_t>(size), 0);
  std::function<void(int, int)> rec = [&](int pos, int blocks) {
    if (pos == size) {
      out.emplace_back(first, rgs);
      return;
    }
    for (int b = 0; b <= blocks; ++b) {
      rgs[static_cast<std::size_t>(pos)] = static_cast<std::uint8_t>(b);
      rec(pos + 1, std::max(blocks, b + 1));
    }
  };
  rgs[0] = 0;
  rec(1, 1);
  return out;
}

BigInt bell_number(int n) {
  // Bell triangle.
  std::vector<BigInt> row{1};
  for (int i = 0; i < n; ++i) {
    std::vector<BigInt> next{row.back()};
    for (const auto& v : row) next.push_back(next.back() + v);
    row = std::move(next);
  }
  return row.front();
}

std::optional<std::size_t> PartitionLattice::index_of(const SetPartition& p) const {
  auto it = std::lower_bound(parts.begin(), parts.end(), p, [](const SetPartition& a, const SetPartition& b) {
    if (a.rank() != b.rank()) return a.rank() < b.rank();
    return a.rgs() < b.rgs();
  });
  if (it == parts.end() || *it != p) return std::nullopt;
  return static_cast<std::size_t>(it - parts.begin());
}

PartitionLattice build_partition_lattice(int n, std::size_t cap, int first) {
  if (n < 0) throw DomainError("partition lattice of negative size");
  const BigInt projected = bell_number(n);
  if (projected > cap) throw ResourceError("partition lattice exceeds size cap", projected.str());
  PartitionLattice out;
  out.parts = all_set_partitions(first, first + n - 1);
  std::stable_sort(out.parts.begin(), out.parts.end(), [](const SetPartition& a, const SetPartition& b) {
    if (a.rank() != b.rank()) return a.rank() < b.rank();
    return a.rgs() < b.rgs();
  });
  std::vector<std::string> labels;
  for (const auto& p : out.parts) labels.push_back(p.to_string());
  const auto& parts = out.parts;
  out.poset = Poset::from_relation(std::move(labels), [&](std::size_t a, std::size_t b) {
    return parts[a].rank() <= parts[b].rank() && parts[a].refines(parts[b]);
  });
  return out;
}

}  // namespace dowling
