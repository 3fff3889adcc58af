#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "dowling/bigint.hpp"

namespace dowling {

/// A face as a strictly increasing list of vertex indices.
using Face = std::vector<int>;

/// An abstract simplicial complex stored as its full, downward-closed face
/// set, grouped by face size and sorted lexicographically inside each group.
///
/// The vertex list always equals the set of 0-faces; labels are unique.
/// A default-constructed complex is *void* (no faces at all); the *empty*
/// complex has exactly the empty face and is the neutral element of join.
class SimplicialComplex {
 public:
  SimplicialComplex() = default;

  static SimplicialComplex void_complex() { return {}; }
  static SimplicialComplex empty_complex();

  /// Downward closure of facets given by vertex label.
  static SimplicialComplex from_facets(const std::vector<std::vector<std::string>>& facets);

  /// Downward closure of facets given as indices into `labels`. Throws
  /// DomainError on out-of-range indices or duplicate labels.
  static SimplicialComplex from_facets(const std::vector<std::string>& labels,
                                       const std::vector<std::vector<int>>& facets);

  /// Builds from a face list that is already downward closed over `labels`
  /// (checked). Unused labels are dropped.
  static SimplicialComplex from_faces(const std::vector<std::string>& labels, std::vector<Face> faces);

  bool is_void() const noexcept { return by_size_.empty(); }
  /// -1 for the empty complex; -2 for the void complex.
  int dimension() const noexcept { return static_cast<int>(by_size_.size()) - 2; }

  std::size_t num_vertices() const noexcept { return labels_.size(); }
  const std::string& label(int v) const { return labels_[static_cast<std::size_t>(v)]; }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  std::optional<int> vertex_index(const std::string& label) const;

  /// Faces with exactly `s` vertices (s = 0 is the empty face).
  const std::vector<Face>& faces_of_size(std::size_t s) const;
  std::size_t max_face_size() const noexcept { return by_size_.empty() ? 0 : by_size_.size() - 1; }
  std::size_t num_faces() const noexcept;

  /// f_0, f_1, ..., f_dim (the empty face is not counted).
  std::vector<std::size_t> f_vector() const;

  bool contains(const Face& f) const;
  /// Index of `f` inside faces_of_size(f.size()), if present.
  std::optional<std::size_t> face_position(const Face& f) const;

  std::vector<Face> facets() const;
  bool is_pure() const;

  /// Vertex labels of a face, and the inverse (sorted face from labels).
  std::vector<std::string> face_labels(const Face& f) const;
  std::optional<Face> face_from_labels(const std::vector<std::string>& labels) const;

  /// All faces, smallest first.
  std::vector<Face> all_faces() const;

 private:
  std::vector<std::string> labels_;
  std::unordered_map<std::string, int> index_;
  std::vector<std::vector<Face>> by_size_;
};

/// Same face set after identifying vertices by label.
bool same_complex(const SimplicialComplex& k, const SimplicialComplex& l);
/// Every face of `k` (by labels) is a face of `l`.
bool is_subcomplex(const SimplicialComplex& k, const SimplicialComplex& l);

/// Faces are unions of a face of K and a face of L. Labels must be disjoint.
SimplicialComplex join(const SimplicialComplex& k, const SimplicialComplex& l);
/// {G : G ∩ F = ∅, G ∪ F ∈ K}. Throws DomainError if F is not a face.
SimplicialComplex link(const SimplicialComplex& k, const Face& f);
/// Closed star: all faces of simplices containing F.
SimplicialComplex star(const SimplicialComplex& k, const Face& f);
/// Cone with a fresh apex vertex.
SimplicialComplex cone(const SimplicialComplex& k, const std::string& apex);
/// Removes the open star of F and cones the new vertex over ∂F * lk(F).
SimplicialComplex stellar_subdivide(const SimplicialComplex& k, const Face& f, const std::string& new_label);
/// Every set of pairwise adjacent vertices spans a face.
bool is_flag(const SimplicialComplex& k);
/// Faces whose vertices all lie in `keep`.
SimplicialComplex induced_subcomplex(const SimplicialComplex& k, const std::vector<int>& keep);
/// Proper faces of the simplex on `labels` (the empty complex when |labels| = 1).
SimplicialComplex simplex_boundary(const std::vector<std::string>& labels);
/// Full simplex on `labels`.
SimplicialComplex full_simplex(const std::vector<std::string>& labels);
/// Copy with every label prefixed.
SimplicialComplex with_label_prefix(const SimplicialComplex& k, const std::string& prefix);

/// Vertex bijection k -> l inducing a bijection of faces, or nothing.
std::optional<std::vector<int>> is_isomorphic_complexes(const SimplicialComplex& k, const SimplicialComplex& l);

/// Reduced integral homology.
struct HomologyResult {
  /// dim(K); -1 for the empty complex, -2 for the void complex.
  int dimension = -2;
  /// Rank of reduced H_{-1}: 1 exactly for the empty complex.
  std::uint64_t betti_minus_one = 0;
  /// Reduced Betti numbers in dimensions 0..dimension.
  std::vector<std::uint64_t> reduced_betti;
  /// Invariant factors > 1 of the torsion subgroup, per dimension 0..dimension.
  std::vector<std::vector<BigInt>> torsion;

  std::uint64_t betti(int d) const;
  bool torsion_free() const;
  /// β̃_d == count, every other β̃ (including -1) zero, and no torsion.
  bool is_wedge_of_spheres(int d, std::uint64_t count) const;
  /// All reduced homology (Betti and torsion) vanishes outside degree d.
  bool concentrated_in(int d) const;
  /// Identical reduced homology groups in every degree.
  bool same_homology(const HomologyResult& o) const;
};

HomologyResult reduced_homology(const SimplicialComplex& k);

/// Rank and nonzero invariant factors of an integer matrix, computed by a
/// sparse elimination on unit pivots followed by a dense Smith normal form
/// of the residual block with minimal-absolute-value pivoting.
struct SmithSummary {
  std::size_t rank = 0;
  /// Nonzero diagonal of the Smith form, each dividing the next.
  std::vector<BigInt> invariant_factors;
};

struct SparseEntry {
  std::uint32_t row;
  std::uint32_t col;
  std::int64_t value;
};

SmithSummary smith_summary(std::size_t rows, std::size_t cols, const std::vector<SparseEntry>& entries);

/// Signed boundary matrix from faces of size `s` to faces of size `s - 1`,
/// indexed by position inside faces_of_size.
std::vector<SparseEntry> boundary_entries(const SimplicialComplex& k, std::size_t s);

}  // namespace dowling
