#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "dowling/lattice.hpp"
#include "dowling/poset.hpp"
#include "dowling/simplicial.hpp"

namespace dowling {

/// A subset of a meet-semilattice's elements (never the bottom). For J^G the
/// members carry type tags: 1 for members of I^G, 0 for the others.
struct BuildingSet {
  std::vector<std::size_t> members;  // sorted
  std::vector<int> types;            // parallel to members, or empty

  bool contains(std::size_t x) const;
  /// Type tag of a member; -1 when untagged or absent.
  int type_of(std::size_t x) const;
};

struct BuildingSetReport {
  bool ok = true;
  /// First element x at which the factorisation fails.
  std::optional<std::size_t> witness;
  std::string reason;
};

/// For every x above the bottom, the join map from the product of the
/// intervals [0̂, z] over the maximal members z ≤ x to [0̂, x] must be an order
/// isomorphism. Throws DomainError unless L is a meet-semilattice with bottom.
BuildingSetReport check_building_set(const Poset& l, const std::vector<std::size_t>& members);
bool is_building_set(const Poset& l, const std::vector<std::size_t>& members);

/// Elements x whose interval [0̂, x] does not split as [0̂, a] × [0̂, b] via
/// the join map for any a, b strictly between 0̂ and x.
std::vector<std::size_t> minimal_building_set(const Poset& l);

/// Members of Q_n^0(G) whose associated partition has exactly one nonsingleton block.
BuildingSet compute_IG(const DowlingLattice& q0);
/// I^G (type 1) together with the elements of Q_n(G) with nontrivial zero
/// block and singleton simple blocks (type 0).
BuildingSet compute_JG(const DowlingLattice& q);

/// Every subfamily of pairwise incomparable members of size at least two
/// has a join in L that is not in B. A missing join makes X non-nested.
/// Throws DomainError when X is not a subset of the members.
bool is_nested(const Poset& l, const BuildingSet& b, const std::vector<std::size_t>& x);

struct NestedEnumeration {
  /// All nonempty nested sets, each sorted, in lexicographic order.
  std::vector<std::vector<std::size_t>> sets;
  /// Extensions that passed the pairwise test but failed the full definition.
  std::size_t pairwise_only = 0;
};

/// With `reduced`, the top element is excluded when it is a member.
NestedEnumeration enumerate_nested_sets(const Poset& l, const BuildingSet& b, bool reduced);

/// Vertices are the (remaining) members, labelled as in L; faces are nested sets.
SimplicialComplex nested_complex(const Poset& l, const BuildingSet& b, bool reduced);

}  // namespace dowling
