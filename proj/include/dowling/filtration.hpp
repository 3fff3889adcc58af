#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "dowling/bigint.hpp"
#include "dowling/lattice.hpp"
#include "dowling/nested.hpp"
#include "dowling/simplicial.hpp"

namespace dowling {

/// A chain {0} = w_0 ⊂ w_1 ⊂ ... ⊂ w_ℓ ⊂ w_{ℓ+1} = {0..n} of zero blocks.
/// `zero_blocks` holds w_1..w_ℓ, each sorted and containing 0.
struct TypeZeroChain {
  int n = 0;
  int k = 1;
  std::vector<std::vector<int>> zero_blocks;

  int length() const noexcept { return static_cast<int>(zero_blocks.size()); }
  /// p_i = |w_{i+1} \ w_i| for i = 0..ℓ.
  std::vector<int> gaps() const;
  /// q_i = Π_{j=1}^{p_i - 1} (j k - 1).
  std::vector<BigInt> factors() const;
  /// Q = Π q_i.
  BigInt product() const;
  std::string to_string() const;
};

/// Validates the chain: strictly increasing, proper, each block containing 0
/// and at least one index. Throws DomainError otherwise.
TypeZeroChain make_chain(int n, int k, std::vector<std::vector<int>> zero_blocks);

/// q_i for a gap p and group order k.
BigInt gap_factor(int p, int k);

enum class SimplexType { Type0, Type1, Mixed };
std::string type_name(SimplexType t);

/// T_n(G) as the reduced nested set complex of J^G, with each vertex typed.
struct FiltrationContext {
  DowlingLattice lattice;
  BuildingSet jg;
  SimplicialComplex complex;
  std::vector<char> type0;  // per complex vertex

  int n() const { return lattice.n(); }
  const GroupTable& group() const { return lattice.group(); }
  /// Complex vertex of an element, DomainError if it is not one.
  int vertex_of(const DowlingElement& e) const;
  DowlingElement element_of(int vertex) const;
  Face face_of(const std::vector<DowlingElement>& x) const;
};

FiltrationContext make_filtration_context(int n, const GroupTable& g, std::size_t cap = kDefaultSizeCap);

struct Classification {
  SimplexType type = SimplexType::Type1;
  /// X_0 = X \ I^G, ordered along the chain.
  std::vector<DowlingElement> type0_part;
  /// Empty chain when X_0 is empty.
  TypeZeroChain chain;
};

/// Throws DomainError when X is not a nonempty face of T_n(G).
Classification classify(const FiltrationContext& ctx, const std::vector<DowlingElement>& x);

/// Faces of T_n(G) with at most m type-0 vertices. Throws DomainError unless 0 ≤ m ≤ n - 1.
SimplicialComplex build_Km(const FiltrationContext& ctx, int m);
SimplicialComplex build_Km(int n, const GroupTable& g, int m, std::size_t cap = kDefaultSizeCap);

/// Faces of T_n(G) made of type-0 vertices only (the simplices of T_J).
std::vector<Face> type0_simplices(const FiltrationContext& ctx);

/// st(X) ∩ K_{m-1} inside K_m for a type-0 simplex X with ℓ(X) = m, i.e.
/// ∂X joined with the simplicial link of X in K_m. Throws DomainError
/// unless X is a nonempty type-0 face.
SimplicialComplex link_in_Km(const FiltrationContext& ctx, const std::vector<DowlingElement>& x);

struct JoinDecomposition {
  TypeZeroChain chain;
  SimplicialComplex link;
  /// ∂X * N(I^G, Q_{p_0}^0) * ... * N(I^G, Q_{p_m}^0).
  SimplicialComplex model;
  bool isomorphic = false;
  /// The same join with ∂X replaced by the reduced order complex of B_m
  /// has the homology of the link.
  bool boolean_factor_homology = false;
};

JoinDecomposition join_decomposition(const FiltrationContext& ctx, const std::vector<DowlingElement>& x);
bool join_decomposition_check(const FiltrationContext& ctx, const std::vector<DowlingElement>& x);

/// Π_{j=1}^{n-1}(jk+1) - Π_{j=1}^{n-1}(jk-1) against the sum of Q(ω) over
/// all chains of proper nonempty subsets of [n].
struct ChainSum {
  BigInt lhs;
  BigInt rhs;
};
ChainSum chain_sum(int n, int k);

struct PartitionTerm {
  std::vector<int> shape;  // block sizes, decreasing
  BigInt term;
  BigInt multiplicity;     // set partitions of [n] with this shape
};

/// lhs = Π_{j=1}^{n}(jk+1) - Π_{j=1}^{n}(jk-1), rhs = Σ_σ Π_j (jk-1)^{h(σ,j)}
/// with h(σ, j) the number of blocks of σ of size at least j.
struct NumerologyReport {
  int n = 0;
  int k = 1;
  BigInt lhs;
  BigInt rhs_literal;
  bool equal = false;
  std::vector<PartitionTerm> per_partition_terms;
};
NumerologyReport numerology_report(int n, int k);

/// Every link (including K itself) has reduced homology concentrated in
/// degree dim K - |F|. Throws DomainError for impure or void K.
bool cm_link_check(const SimplicialComplex& k);

}  // namespace dowling
