#pragma once

#include <string>

#include "json.hpp"

#include "dowling/groups.hpp"
#include "dowling/nested.hpp"
#include "dowling/poset.hpp"
#include "dowling/simplicial.hpp"
#include "dowling/trees.hpp"

namespace dowling {

using Json = nlohmann::ordered_json;

/// {elements, leq_pairs, hasse, bottom, top}; bottom/top are null when absent.
Json poset_to_json(const Poset& p);
/// Poset JSON plus `members` and, for typed sets, `type`.
Json building_set_to_json(const Poset& p, const BuildingSet& b);
/// {vertices, facets}
Json complex_to_json(const SimplicialComplex& k);
/// {f_vector, reduced_betti, torsion}; torsion holds invariant factors per degree.
Json homology_to_json(const SimplicialComplex& k, const HomologyResult& h);
/// {parent, leaf_labels, zero_vertices, action}; leaf labels read `i~g`.
Json tree_to_json(const GTree& t);
/// Inverse of tree_to_json (not validated).
GTree tree_from_json(const Json& j);

std::string tree_to_dot(const GTree& t);
/// The 1-skeleton as an undirected graph.
std::string complex_to_dot(const SimplicialComplex& k);
/// Hasse diagram, edges pointing up.
std::string poset_to_dot(const Poset& p);

/// `{kind: "cyclic", m: K}` or `{kind: "table", mul: [[...]]}`.
GroupTable group_from_json(const Json& j);
/// `cyclic:M` or `table:FILE`, the file holding either a bare table or
/// `{mul: [[...]]}`. Throws ParseError on malformed specs.
GroupTable parse_group_spec(const std::string& spec);

}  // namespace dowling
