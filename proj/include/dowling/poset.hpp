#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "dowling/bitset.hpp"

namespace dowling {

class SimplicialComplex;

/// A finite partially ordered set over indices 0..size()-1.
///
/// The full order relation is stored as one up-set bitset per element,
/// so `leq` is O(1) and set-valued queries (upper bounds, joins) are word
/// operations. Element payloads live outside; the poset only carries a
/// display label per element.
class Poset {
 public:
  Poset() = default;

  /// Builds the poset from a relation predicate and checks reflexivity,
  /// antisymmetry and transitivity (DomainError on failure).
  static Poset from_relation(std::vector<std::string> labels,
                             const std::function<bool(std::size_t, std::size_t)>& leq);

  std::size_t size() const noexcept { return labels_.size(); }
  const std::string& label(std::size_t i) const { return labels_[i]; }
  const std::vector<std::string>& labels() const noexcept { return labels_; }

  bool leq(std::size_t a, std::size_t b) const noexcept { return up_[a].test(b); }
  bool less(std::size_t a, std::size_t b) const noexcept { return a != b && up_[a].test(b); }
  bool comparable(std::size_t a, std::size_t b) const noexcept { return leq(a, b) || leq(b, a); }

  /// {b : a <= b} and {b : b <= a}.
  const DynBitset& up_set(std::size_t a) const noexcept { return up_[a]; }
  const DynBitset& down_set(std::size_t a) const noexcept { return down_[a]; }

  /// Cover relations (a, b) with a < b and nothing strictly between.
  const std::vector<std::pair<std::size_t, std::size_t>>& hasse() const noexcept { return hasse_; }
  const std::vector<std::size_t>& upper_covers(std::size_t a) const noexcept { return upper_covers_[a]; }
  const std::vector<std::size_t>& lower_covers(std::size_t a) const noexcept { return lower_covers_[a]; }

  std::optional<std::size_t> bottom() const noexcept { return bottom_; }
  std::optional<std::size_t> top() const noexcept { return top_; }

  /// Length of the longest chain from a minimal element up to `a` (0 for minimal elements).
  int height(std::size_t a) const noexcept { return height_[a]; }
  /// Length of the longest chain from `a` up to a maximal element.
  int depth(std::size_t a) const noexcept { return depth_[a]; }

  /// Least upper bound, if it exists.
  std::optional<std::size_t> join(std::size_t a, std::size_t b) const;
  std::optional<std::size_t> meet(std::size_t a, std::size_t b) const;
  std::optional<std::size_t> join_of(std::span<const std::size_t> xs) const;
  std::optional<std::size_t> meet_of(std::span<const std::size_t> xs) const;

  /// Minimal elements of the common upper-bound set of `xs`.
  std::vector<std::size_t> minimal_upper_bounds(std::span<const std::size_t> xs) const;

  /// Maximal / minimal elements of a subset.
  std::vector<std::size_t> maximal_in(const DynBitset& subset) const;
  std::vector<std::size_t> minimal_in(const DynBitset& subset) const;

  bool is_meet_semilattice() const;
  bool is_lattice() const;

  /// Every pair (a, b) with a <= b, reflexive pairs included.
  std::vector<std::pair<std::size_t, std::size_t>> leq_pairs() const;

 private:
  void finalize();

  std::vector<std::string> labels_;
  std::vector<DynBitset> up_;
  std::vector<DynBitset> down_;
  std::vector<std::pair<std::size_t, std::size_t>> hasse_;
  std::vector<std::vector<std::size_t>> upper_covers_;
  std::vector<std::vector<std::size_t>> lower_covers_;
  std::vector<int> height_;
  std::vector<int> depth_;
  std::optional<std::size_t> bottom_;
  std::optional<std::size_t> top_;
};

/// An order isomorphism P -> Q given by `mapping[p] = q`.
struct PosetIsoWitness {
  std::vector<std::size_t> mapping;
};

/// An induced subposet together with the indices of its elements in the parent.
struct SubPoset {
  Poset poset;
  std::vector<std::size_t> to_parent;
};

SubPoset induced_subposet(const Poset& p, std::span<const std::size_t> elements);

/// Closed interval [a, b]. Throws DomainError when a is not below b.
SubPoset interval(const Poset& p, std::size_t a, std::size_t b);

/// Componentwise order on pairs; element (i, j) has index i * |Q| + j.
Poset product(const Poset& p, const Poset& q);

/// Subsets of {1..m} ordered by inclusion; element index is the bitmask.
Poset boolean_lattice(int m);
/// Totally ordered set with k elements.
Poset chain_poset(int k);
Poset antichain_poset(int k);

/// Checks that `w` is a bijection and that it and its inverse preserve <=.
bool verify_isomorphism(const Poset& p, const Poset& q, const PosetIsoWitness& w);

/// Exact backtracking search for an order isomorphism, pruned by
/// height/depth/degree invariants refined along the Hasse diagram.
std::optional<PosetIsoWitness> is_isomorphic(const Poset& p, const Poset& q);

/// The complex of chains of P. With `reduced`, the bottom and top elements
/// (when present) are removed first. Vertex labels are the element labels.
SimplicialComplex order_complex(const Poset& p, bool reduced);

}  // namespace dowling
