#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "dowling/bigint.hpp"
#include "dowling/groups.hpp"
#include "dowling/poset.hpp"
#include "dowling/set_partition.hpp"

namespace dowling {

/// A point of the base set {0} ∪ ([n] × G). The distinguished point 0 has
/// index 0 and group label 0.
struct BasePoint {
  int index = 0;
  GElem g = 0;
  auto operator<=>(const BasePoint&) const = default;
};

/// A G-symmetric partition of {0} ∪ ([n] × G) whose only non-simple block
/// is the zero block, stored as its associated partition of {0..n} plus one
/// group label per index.
///
/// Block ids follow first appearance (so block 0 holds 0). Inside every
/// nonzero block the smallest index carries the identity, and the block is
/// the orbit representative {(i, label[i])}. Labels on the zero block are 0.
struct DowlingElement {
  int n = 0;
  int k = 1;
  std::vector<std::uint8_t> block;
  std::vector<GElem> label;

  auto operator<=>(const DowlingElement&) const = default;

  SetPartition assoc() const { return SetPartition(0, block); }
  int num_nonzero_blocks() const;
  /// n minus the number of nonzero blocks: 0 at the bottom, n at the top.
  int rank() const { return n - num_nonzero_blocks(); }
  /// Indices i ≥ 1 in the zero block.
  std::vector<int> zero_indices() const;
  bool trivial_zero_block() const;
  /// Index lists of the nonzero blocks, ordered by minimum.
  std::vector<std::vector<int>> nonzero_blocks() const;
  /// Canonical string, e.g. "0|1 2~1|3".
  std::string to_string() const;
};

struct DowlingElementHash {
  std::size_t operator()(const DowlingElement& e) const noexcept;
};

/// Bottom (all singletons) and top (everything in the zero block).
DowlingElement dowling_bottom(int n, const GroupTable& g);
DowlingElement dowling_top(int n, const GroupTable& g);

/// Canonical encoding of a partition of the base set. Throws StructureError
/// if the blocks do not partition the base set or a nonzero block has a
/// short orbit, SymmetryError if the partition is not G-symmetric.
DowlingElement normalize(const std::vector<std::vector<BasePoint>>& raw_blocks, int n, const GroupTable& g);

/// The full partition of the base set (all orbit members listed).
std::vector<std::vector<BasePoint>> decode(const DowlingElement& e, const GroupTable& g);

/// Parses the canonical string format. Blocks may be listed partially: the
/// G-orbit of every listed block is added and unlisted points become
/// singleton orbits. Throws ParseError on malformed text.
DowlingElement parse_element(const std::string& text, int n, const GroupTable& g);

bool leq(const DowlingElement& a, const DowlingElement& b, const GroupTable& g);
DowlingElement meet(const DowlingElement& a, const DowlingElement& b, const GroupTable& g);
DowlingElement join(const DowlingElement& a, const DowlingElement& b, const GroupTable& g);
/// Least upper bound inside Q_n^0(G). Throws DomainError for arguments outside Q_n^0(G).
std::optional<DowlingElement> join_in_q0(const DowlingElement& a, const DowlingElement& b, const GroupTable& g);
/// The associated partition of {0..n}.
SetPartition forgetful(const DowlingElement& e);

/// |Q_n(G)| and |Q_n^0(G)| for |G| = k, from the orbit-counting recurrences.
BigInt dowling_lattice_size(int n, int k);
BigInt q0_size(int n, int k);

/// Every element of Q_n(G), sorted by rank and then encoding.
std::vector<DowlingElement> enumerate_dowling_elements(int n, const GroupTable& g);

/// An enumerated Dowling lattice Q_n(G) or its subposet Q_n^0(G).
class DowlingLattice {
 public:
  DowlingLattice(int n, GroupTable g, std::vector<DowlingElement> elements, bool q0);

  int n() const noexcept { return n_; }
  const GroupTable& group() const noexcept { return group_; }
  bool is_q0() const noexcept { return q0_; }
  const Poset& poset() const noexcept { return poset_; }
  std::size_t size() const noexcept { return elements_.size(); }
  const std::vector<DowlingElement>& elements() const noexcept { return elements_; }
  const DowlingElement& element(std::size_t i) const { return elements_[i]; }
  std::optional<std::size_t> index_of(const DowlingElement& e) const;
  /// index_of, throwing DomainError when absent.
  std::size_t require(const DowlingElement& e) const;
  std::size_t require(const std::string& text) const;
  DowlingElement parse(const std::string& text) const { return parse_element(text, n_, group_); }

 private:
  int n_;
  GroupTable group_;
  bool q0_;
  std::vector<DowlingElement> elements_;
  std::unordered_map<DowlingElement, std::size_t, DowlingElementHash> index_;
  Poset poset_;
};

/// Throws ResourceError when the projected size exceeds `cap`.
DowlingLattice build_dowling_lattice(int n, const GroupTable& g, std::size_t cap = kDefaultSizeCap);
DowlingLattice build_q0(int n, const GroupTable& g, std::size_t cap = kDefaultSizeCap);

/// An order isomorphism from the lower interval [0̂, σ] of Q_n^0(G) onto
/// the lower interval of Π_n below the associated partition.
struct LowerIntervalIso {
  SubPoset source;
  std::vector<SetPartition> target_parts;
  Poset target;
  PosetIsoWitness witness;
};

/// Built from the inverse map: each partition below the associated
/// partition of σ has exactly one lift below σ. The result is verified.
LowerIntervalIso lower_interval_iso_q0(const DowlingLattice& q0, const DowlingElement& sigma);

/// [0̂, ω] ≅ Q_m(G) × Π_{s_1} × ... × Π_{s_r}, where m counts the indices in
/// the zero block of ω and s_j are the sizes of its nonsingleton simple blocks.
struct IntervalDecomposition {
  int m = 0;
  std::vector<int> sizes;
  SubPoset interval;
  Poset product;
  PosetIsoWitness witness;
};

IntervalDecomposition interval_decomposition(const DowlingLattice& q, const DowlingElement& omega);

}  // namespace dowling
