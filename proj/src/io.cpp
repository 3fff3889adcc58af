#include "dowling/io.hpp"

#include <fstream>
#include <sstream>

#include "dowling/errors.hpp"

namespace dowling {

namespace {

Json index_or_null(const std::optional<std::size_t>& i) { return i ? Json(*i) : Json(nullptr); }

std::string leaf_label(int bit, int k) { return std::to_string(bit / k + 1) + "~" + std::to_string(bit % k); }

std::string quoted(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

}  // namespace

Json poset_to_json(const Poset& p) {
  Json j;
  j["elements"] = p.labels();
  Json leq = Json::array();
  for (const auto& [a, b] : p.leq_pairs()) leq.push_back({a, b});
  j["leq_pairs"] = std::move(leq);
  Json hasse = Json::array();
  for (const auto& [a, b] : p.hasse()) hasse.push_back({a, b});
  j["hasse"] = std::move(hasse);
  j["bottom"] = index_or_null(p.bottom());
  j["top"] = index_or_null(p.top());
  return j;
}

Json building_set_to_json(const Poset& p, const BuildingSet& b) {
  Json j = poset_to_json(p);
  j["members"] = b.members;
  if (!b.types.empty()) j["type"] = b.types;
  return j;
}

Json complex_to_json(const SimplicialComplex& k) {
  Json j;
  j["vertices"] = k.labels();
  Json facets = Json::array();
  if (!k.is_void())
    for (const Face& f : k.facets()) facets.push_back(f);
  j["facets"] = std::move(facets);
  return j;
}

Json homology_to_json(const SimplicialComplex& k, const HomologyResult& h) {
  Json j;
  j["f_vector"] = k.f_vector();
  j["reduced_betti"] = h.reduced_betti;
  Json tor = Json::array();
  for (const auto& t : h.torsion) {
    Json d = Json::array();
    for (const auto& x : t) d.push_back(x.str());
    tor.push_back(std::move(d));
  }
  j["torsion"] = std::move(tor);
  if (h.betti_minus_one) j["reduced_betti_minus_one"] = h.betti_minus_one;
  return j;
}

Json tree_to_json(const GTree& t) {
  Json j;
  j["n"] = t.n;
  j["group_order"] = t.k;
  j["parent"] = t.parent;
  Json leaves = Json::object();
  for (std::size_t v = 0; v < t.size(); ++v)
    if (t.leaf[v] >= 0) leaves[std::to_string(v)] = leaf_label(t.leaf[v], t.k);
  j["leaf_labels"] = std::move(leaves);
  Json zeros = Json::array();
  for (std::size_t v = 0; v < t.size(); ++v)
    if (t.zero[v]) zeros.push_back(v);
  j["zero_vertices"] = std::move(zeros);
  j["action"] = t.action;
  return j;
}

GTree tree_from_json(const Json& j) {
  try {
    GTree t;
    t.n = j.at("n").get<int>();
    t.k = j.at("group_order").get<int>();
    t.parent = j.at("parent").get<std::vector<int>>();
    t.leaf.assign(t.parent.size(), -1);
    t.zero.assign(t.parent.size(), 0);
    for (const auto& [key, value] : j.at("leaf_labels").items()) {
      const std::size_t v = std::stoul(key);
      const std::string s = value.get<std::string>();
      const auto tilde = s.find('~');
      if (v >= t.size() || tilde == std::string::npos) throw ParseError("bad leaf label " + s);
      t.leaf[v] = (std::stoi(s.substr(0, tilde)) - 1) * t.k + std::stoi(s.substr(tilde + 1));
    }
    for (const auto& v : j.at("zero_vertices")) {
      const auto i = v.get<std::size_t>();
      if (i >= t.size()) throw ParseError("zero vertex out of range");
      t.zero[i] = 1;
    }
    t.action = j.at("action").get<std::vector<std::vector<int>>>();
    return t;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed tree JSON: ") + e.what());
  } catch (const std::logic_error& e) {
    throw ParseError(std::string("malformed tree JSON: ") + e.what());
  }
}

std::string tree_to_dot(const GTree& t) {
  std::ostringstream os;
  os << "digraph tree {\n  node [shape=circle, label=\"\"];\n";
  for (std::size_t v = 0; v < t.size(); ++v) {
    os << "  v" << v << " [";
    if (t.leaf[v] >= 0) os << "shape=plaintext, label=" << quoted(leaf_label(t.leaf[v], t.k));
    else if (t.zero[v]) os << "style=filled, fillcolor=black";
    else os << "style=solid";
    os << "];\n";
  }
  for (std::size_t v = 1; v < t.size(); ++v) os << "  v" << t.parent[v] << " -> v" << v << ";\n";
  os << "}\n";
  return os.str();
}

std::string complex_to_dot(const SimplicialComplex& k) {
  std::ostringstream os;
  os << "graph complex {\n";
  for (std::size_t v = 0; v < k.num_vertices(); ++v) os << "  v" << v << " [label=" << quoted(k.label(static_cast<int>(v))) << "];\n";
  if (k.max_face_size() >= 2)
    for (const Face& e : k.faces_of_size(2)) os << "  v" << e[0] << " -- v" << e[1] << ";\n";
  os << "}\n";
  return os.str();
}

std::string poset_to_dot(const Poset& p) {
  std::ostringstream os;
  os << "digraph poset {\n  rankdir=BT;\n";
  for (std::size_t v = 0; v < p.size(); ++v) os << "  v" << v << " [label=" << quoted(p.label(v)) << "];\n";
  for (const auto& [a, b] : p.hasse()) os << "  v" << a << " -> v" << b << ";\n";
  os << "}\n";
  return os.str();
}

GroupTable group_from_json(const Json& j) {
  try {
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "cyclic") return cyclic_group(j.at("m").get<int>());
    if (kind == "table") return group_from_table(j.at("mul").get<std::vector<std::vector<int>>>());
    throw ParseError("unknown group kind '" + kind + "'");
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed group JSON: ") + e.what());
  }
}

GroupTable parse_group_spec(const std::string& spec) {
  const auto colon = spec.find(':');
  if (colon == std::string::npos) throw ParseError("group spec must read cyclic:M or table:FILE");
  const std::string kind = spec.substr(0, colon), arg = spec.substr(colon + 1);
  if (kind == "cyclic") {
    std::size_t used = 0;
    int m = 0;
    try {
      m = std::stoi(arg, &used);
    } catch (const std::logic_error&) {
      throw ParseError("cyclic group order must be an integer");
    }
    if (used != arg.size()) throw ParseError("cyclic group order must be an integer");
    return cyclic_group(m);
  }
  if (kind == "table") {
    std::ifstream in(arg);
    if (!in) throw ParseError("cannot read group table " + arg);
    Json j;
    try {
      j = Json::parse(in);
    } catch (const nlohmann::json::exception& e) {
      throw ParseError(std::string("group table is not JSON: ") + e.what());
    }
    if (j.is_array()) return group_from_table(j.get<std::vector<std::vector<int>>>());
    if (j.is_object() && j.contains("mul")) {
      Json g = j;
      g["kind"] = "table";
      return group_from_json(g);
    }
    throw ParseError("group table file must hold a table or {mul: ...}");
  }
  throw ParseError("unknown group kind '" + kind + "'");
}

}  // namespace dowling
