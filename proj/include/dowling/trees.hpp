#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "dowling/groups.hpp"
#include "dowling/lattice.hpp"
#include "dowling/simplicial.hpp"

namespace dowling {

/// Leaves below a vertex as a bitmask; leaf (i, g) is bit (i - 1) * |G| + g.
using LeafSet = std::uint64_t;

/// A rooted tree with leaves labelled by [n] × G, an explicit G-action on
/// vertices and a set of zero vertices. Vertex 0 is the root. A G-symmetric
/// phylogenetic tree is the case where the root is the only zero vertex.
struct GTree {
  int n = 0;
  int k = 1;
  std::vector<int> parent;             // -1 at the root
  std::vector<int> leaf;               // leaf bit, or -1 for inner vertices
  std::vector<std::vector<int>> action;  // action[g][v] = g · v
  std::vector<char> zero;

  std::size_t size() const noexcept { return parent.size(); }
  std::vector<std::vector<int>> children() const;
  /// λ_v for every vertex.
  std::vector<LeafSet> leaf_sets() const;
  /// Non-root inner vertices; each stands for the inner edge above it.
  std::vector<int> inner_vertices() const;

  bool operator==(const GTree&) const = default;
};

enum class TreeCondition {
  Labels,         // not a tree with leaves in bijection with [n] × G
  RootZero,       // (0) the root is a zero vertex
  Degree,         // (1) inner non-root vertices have degree at least 3
  Symmetry,       // (2) the action is a G-action fixing the zero vertices and relabelling leaves
  Separation,     // (3) leaves (i, g), (i, h) are joined through exactly one zero vertex
  ZeroPath,       // (4) zero vertices form a path starting at the root
  ReducedTop,     // the root has a single child and it is a zero vertex
};

struct TreeViolation {
  TreeCondition condition;
  std::string detail;
};

std::string condition_name(TreeCondition c);

std::vector<TreeViolation> validate(const GTree& t, const GroupTable& g);
/// Valid, and the root is the only zero vertex.
bool is_symmetric_tree(const GTree& t, const GroupTable& g);

/// Canonical tree from its clades: `clades` are the leaf sets of the non-root
/// inner vertices, `zero_clades` the subset belonging to zero vertices.
/// Vertices are numbered in preorder with children sorted by smallest leaf.
GTree tree_from_clades(int n, const GroupTable& g, const std::set<LeafSet>& clades, const std::set<LeafSet>& zero_clades);
/// Clades and zero clades of a tree.
std::pair<std::set<LeafSet>, std::set<LeafSet>> tree_clades(const GTree& t);
GTree canonical_tree(const GTree& t, const GroupTable& g);

/// All leaves attached to the root.
GTree star_tree(int n, const GroupTable& g);

/// σ(t) for the inner edge above vertex v: the type-1 element whose
/// nonsingleton orbit is {λ_{g v}}, or the type-0 element with zero block
/// λ_v when v is a zero vertex. Throws DomainError if v is not inner.
DowlingElement sigma_of_edge(const GTree& t, const GroupTable& g, int v);

/// One element per inner orbit, sorted. Throws StructureError on invalid trees.
std::vector<DowlingElement> tree_to_nested(const GTree& t, const GroupTable& g);

/// Pairwise incomparable members have disjoint nonsingleton blocks.
/// Every element must lie in I^G (DomainError otherwise).
bool satisfies_condition_n(const std::vector<DowlingElement>& x, const GroupTable& g);

/// Inner orbit extension by a one-orbit element σ of Q_n^0(G): below the
/// minimal vertex containing each g S, a new vertex collects the children
/// whose leaves lie inside g S. Throws StructureError when some g S cuts across a vertex.
GTree extend_orbit(const GTree& t, const GroupTable& g, const DowlingElement& sigma);
/// Type-0 extension at the root: a new zero vertex collects the root's
/// children whose leaves lie in the zero block of ω.
GTree extend_zero(const GTree& t, const GroupTable& g, const DowlingElement& omega);

/// Tree with N(T) = X by repeated inner orbit extension from the star tree.
/// Throws DomainError when incomparable members overlap or X leaves I^G.
GTree nested_to_tree(const std::vector<DowlingElement>& x, int n, const GroupTable& g);

/// Dowling tree of a J^G-nested set without 1̂: type-1 extensions first,
/// then type-0 extensions from the smallest zero block up. Requires |G| ≥ 2.
/// Throws DomainError for 1̂ ∈ X or members outside J^G, StructureError
/// when X is not nested.
GTree nested_to_dowling_tree(const std::vector<DowlingElement>& x, int n, const GroupTable& g);

/// Contracts every edge in the orbit of the inner edge above v.
GTree contract_orbit(const GTree& t, const GroupTable& g, int v);

/// Every tree reachable from the star tree by single-orbit extensions:
/// the G-symmetric trees, or (with `dowling`) the Dowling trees.
std::vector<GTree> enumerate_trees(int n, const GroupTable& g, bool dowling);

/// T_n^G and T_n(G) as nested set complexes over I^G and J^G; vertex labels
/// are canonical element strings.
SimplicialComplex build_tree_complex(int n, const GroupTable& g, std::size_t cap = kDefaultSizeCap);
SimplicialComplex build_dowling_tree_complex(int n, const GroupTable& g, std::size_t cap = kDefaultSizeCap);

/// The complex whose faces are N(T) over the given trees.
SimplicialComplex complex_from_trees(const std::vector<GTree>& trees, const GroupTable& g);

}  // namespace dowling
