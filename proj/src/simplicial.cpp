#include "dowling/simplicial.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>

#include "dowling/errors.hpp"

namespace dowling {

namespace {

bool is_sorted_unique(const Face& f) {
  for (std::size_t i = 1; i < f.size(); ++i)
    if (f[i - 1] >= f[i]) return false;
  return true;
}

using LabelFace = std::vector<std::string>;

std::set<LabelFace> label_faces(const SimplicialComplex& k) {
  std::set<LabelFace> out;
  for (std::size_t s = 0; s <= k.max_face_size() && !k.is_void(); ++s) {
    for (const Face& f : k.faces_of_size(s)) {
      LabelFace lf = k.face_labels(f);
      std::sort(lf.begin(), lf.end());
      out.insert(std::move(lf));
    }
  }
  return out;
}

}  // namespace

SimplicialComplex SimplicialComplex::empty_complex() { return from_faces({}, {Face{}}); }

SimplicialComplex SimplicialComplex::from_facets(const std::vector<std::vector<std::string>>& facets) {
  std::vector<std::string> labels;
  std::unordered_map<std::string, int> idx;
  std::vector<std::vector<int>> as_idx;
  for (const auto& f : facets) {
    std::vector<int> fi;
    for (const auto& l : f) {
      auto [it, inserted] = idx.emplace(l, static_cast<int>(labels.size()));
      if (inserted) labels.push_back(l);
      fi.push_back(it->second);
    }
    as_idx.push_back(std::move(fi));
  }
  return from_facets(labels, as_idx);
}

SimplicialComplex SimplicialComplex::from_facets(const std::vector<std::string>& labels,
                                                 const std::vector<std::vector<int>>& facets) {
  std::set<Face> closure;
  closure.insert(Face{});
  for (const auto& raw : facets) {
    Face f = raw;
    std::sort(f.begin(), f.end());
    f.erase(std::unique(f.begin(), f.end()), f.end());
    for (int v : f)
      if (v < 0 || static_cast<std::size_t>(v) >= labels.size())
        throw DomainError("facet references unknown vertex index " + std::to_string(v));
    if (f.size() > 30) throw DomainError("facet too large for explicit closure");
    const std::uint64_t subsets = std::uint64_t{1} << f.size();
    for (std::uint64_t mask = 1; mask < subsets; ++mask) {
      Face sub;
      for (std::size_t i = 0; i < f.size(); ++i)
        if ((mask >> i) & 1U) sub.push_back(f[i]);
      closure.insert(std::move(sub));
    }
  }
  return from_faces(labels, std::vector<Face>(closure.begin(), closure.end()));
}

SimplicialComplex SimplicialComplex::from_faces(const std::vector<std::string>& labels, std::vector<Face> faces) {
  SimplicialComplex k;
  if (faces.empty()) return k;
  {
    std::set<std::string> seen(labels.begin(), labels.end());
    if (seen.size() != labels.size()) throw DomainError("duplicate vertex labels");
  }
  std::vector<char> used(labels.size(), 0);
  for (const Face& f : faces) {
    if (!is_sorted_unique(f)) throw DomainError("face is not a strictly increasing vertex list");
    for (int v : f) {
      if (v < 0 || static_cast<std::size_t>(v) >= labels.size())
        throw DomainError("face references unknown vertex index " + std::to_string(v));
      used[static_cast<std::size_t>(v)] = 1;
    }
  }
  std::vector<int> remap(labels.size(), -1);
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (!used[i]) continue;
    remap[i] = static_cast<int>(k.labels_.size());
    k.index_.emplace(labels[i], remap[i]);
    k.labels_.push_back(labels[i]);
  }
  std::size_t max_size = 0;
  for (Face& f : faces) {
    for (int& v : f) v = remap[static_cast<std::size_t>(v)];
    max_size = std::max(max_size, f.size());
  }
  k.by_size_.assign(max_size + 1, {});
  for (Face& f : faces) k.by_size_[f.size()].push_back(std::move(f));
  for (auto& bucket : k.by_size_) {
    std::sort(bucket.begin(), bucket.end());
    bucket.erase(std::unique(bucket.begin(), bucket.end()), bucket.end());
  }
  if (k.by_size_[0].empty()) throw DomainError("face set is not downward closed (missing empty face)");
  // Downward closure: every codimension-one face of every face is present.
  for (std::size_t s = 2; s <= max_size; ++s) {
    for (const Face& f : k.by_size_[s]) {
      for (std::size_t drop = 0; drop < f.size(); ++drop) {
        Face sub;
        sub.reserve(f.size() - 1);
        for (std::size_t i = 0; i < f.size(); ++i)
          if (i != drop) sub.push_back(f[i]);
        if (!std::binary_search(k.by_size_[s - 1].begin(), k.by_size_[s - 1].end(), sub))
          throw DomainError("face set is not downward closed");
      }
    }
  }
  if (max_size >= 1 && k.by_size_[1].size() != k.labels_.size())
    throw DomainError("face set is not downward closed (missing vertex)");
  return k;
}

std::optional<int> SimplicialComplex::vertex_index(const std::string& label) const {
  auto it = index_.find(label);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

const std::vector<Face>& SimplicialComplex::faces_of_size(std::size_t s) const {
  static const std::vector<Face> kNone;
  return s < by_size_.size() ? by_size_[s] : kNone;
}

std::size_t SimplicialComplex::num_faces() const noexcept {
  std::size_t c = 0;
  for (const auto& b : by_size_) c += b.size();
  return c;
}

std::vector<std::size_t> SimplicialComplex::f_vector() const {
  std::vector<std::size_t> f;
  for (std::size_t s = 1; s < by_size_.size(); ++s) f.push_back(by_size_[s].size());
  return f;
}

bool SimplicialComplex::contains(const Face& f) const { return face_position(f).has_value(); }

std::optional<std::size_t> SimplicialComplex::face_position(const Face& f) const {
  if (f.size() >= by_size_.size()) return std::nullopt;
  const auto& bucket = by_size_[f.size()];
  auto it = std::lower_bound(bucket.begin(), bucket.end(), f);
  if (it == bucket.end() || *it != f) return std::nullopt;
  return static_cast<std::size_t>(it - bucket.begin());
}

std::vector<Face> SimplicialComplex::facets() const {
  std::vector<Face> out;
  for (std::size_t s = 0; s < by_size_.size(); ++s) {
    for (const Face& f : by_size_[s]) {
      bool maximal = true;
      if (s + 1 < by_size_.size()) {
        for (std::size_t v = 0; v < labels_.size() && maximal; ++v) {
          if (std::binary_search(f.begin(), f.end(), static_cast<int>(v))) continue;
          Face g = f;
          g.insert(std::upper_bound(g.begin(), g.end(), static_cast<int>(v)), static_cast<int>(v));
          if (std::binary_search(by_size_[s + 1].begin(), by_size_[s + 1].end(), g)) maximal = false;
        }
      }
      if (maximal) out.push_back(f);
    }
  }
  return out;
}

bool SimplicialComplex::is_pure() const {
  if (is_void()) return true;
  const std::size_t top = by_size_.size() - 1;
  for (const Face& f : facets())
    if (f.size() != top) return false;
  return true;
}

std::vector<std::string> SimplicialComplex::face_labels(const Face& f) const {
  std::vector<std::string> out;
  out.reserve(f.size());
  for (int v : f) out.push_back(labels_[static_cast<std::size_t>(v)]);
  return out;
}

std::optional<Face> SimplicialComplex::face_from_labels(const std::vector<std::string>& labels) const {
  Face f;
  for (const auto& l : labels) {
    auto v = vertex_index(l);
    if (!v) return std::nullopt;
    f.push_back(*v);
  }
  std::sort(f.begin(), f.end());
  f.erase(std::unique(f.begin(), f.end()), f.end());
  if (!contains(f)) return std::nullopt;
  return f;
}

std::vector<Face> SimplicialComplex::all_faces() const {
  std::vector<Face> out;
  for (const auto& b : by_size_) out.insert(out.end(), b.begin(), b.end());
  return out;
}

bool same_complex(const SimplicialComplex& k, const SimplicialComplex& l) {
  if (k.is_void() != l.is_void()) return false;
  if (k.f_vector() != l.f_vector()) return false;
  return label_faces(k) == label_faces(l);
}

bool is_subcomplex(const SimplicialComplex& k, const SimplicialComplex& l) {
  if (k.is_void()) return true;
  if (l.is_void()) return false;
  for (std::size_t s = 1; s <= k.max_face_size(); ++s) {
    for (const Face& f : k.faces_of_size(s)) {
      if (!l.face_from_labels(k.face_labels(f))) return false;
    }
  }
  return true;
}

SimplicialComplex join(const SimplicialComplex& k, const SimplicialComplex& l) {
  if (k.is_void() || l.is_void()) return SimplicialComplex::void_complex();
  for (const auto& lab : k.labels())
    if (l.vertex_index(lab)) throw DomainError("join operands share vertex label " + lab);
  std::vector<std::string> labels = k.labels();
  labels.insert(labels.end(), l.labels().begin(), l.labels().end());
  const int shift = static_cast<int>(k.num_vertices());
  const auto kf = k.all_faces();
  const auto lf = l.all_faces();
  std::vector<Face> faces;
  faces.reserve(kf.size() * lf.size());
  for (const Face& a : kf) {
    for (const Face& b : lf) {
      Face f = a;
      for (int v : b) f.push_back(v + shift);
      faces.push_back(std::move(f));
    }
  }
  return SimplicialComplex::from_faces(labels, std::move(faces));
}

SimplicialComplex link(const SimplicialComplex& k, const Face& f) {
  if (!k.contains(f)) throw DomainError("link: face not in complex");
  std::vector<Face> faces;
  for (std::size_t s = f.size(); s <= k.max_face_size(); ++s) {
    for (const Face& g : k.faces_of_size(s)) {
      if (!std::includes(g.begin(), g.end(), f.begin(), f.end())) continue;
      Face rest;
      std::set_difference(g.begin(), g.end(), f.begin(), f.end(), std::back_inserter(rest));
      faces.push_back(std::move(rest));
    }
  }
  return SimplicialComplex::from_faces(k.labels(), std::move(faces));
}

SimplicialComplex star(const SimplicialComplex& k, const Face& f) {
  if (!k.contains(f)) throw DomainError("star: face not in complex");
  std::set<Face> faces;
  for (std::size_t s = f.size(); s <= k.max_face_size(); ++s) {
    for (const Face& g : k.faces_of_size(s)) {
      if (!std::includes(g.begin(), g.end(), f.begin(), f.end())) continue;
      const std::uint64_t subsets = std::uint64_t{1} << g.size();
      for (std::uint64_t mask = 0; mask < subsets; ++mask) {
        Face sub;
        for (std::size_t i = 0; i < g.size(); ++i)
          if ((mask >> i) & 1U) sub.push_back(g[i]);
        faces.insert(std::move(sub));
      }
    }
  }
  return SimplicialComplex::from_faces(k.labels(), std::vector<Face>(faces.begin(), faces.end()));
}

SimplicialComplex cone(const SimplicialComplex& k, const std::string& apex) {
  if (k.vertex_index(apex)) throw DomainError("cone apex label already used: " + apex);
  if (k.is_void()) return SimplicialComplex::void_complex();
  std::vector<std::string> labels = k.labels();
  labels.push_back(apex);
  const int a = static_cast<int>(k.num_vertices());
  std::vector<Face> faces;
  for (const Face& f : k.all_faces()) {
    faces.push_back(f);
    Face g = f;
    g.push_back(a);
    faces.push_back(std::move(g));
  }
  return SimplicialComplex::from_faces(labels, std::move(faces));
}

SimplicialComplex stellar_subdivide(const SimplicialComplex& k, const Face& f, const std::string& new_label) {
  if (f.empty() || !k.contains(f)) throw DomainError("stellar subdivision: face not in complex");
  if (k.vertex_index(new_label)) throw DomainError("stellar subdivision: label already used: " + new_label);
  std::vector<std::string> labels = k.labels();
  labels.push_back(new_label);
  const int apex = static_cast<int>(k.num_vertices());

  std::vector<Face> faces;
  for (const Face& g : k.all_faces())
    if (!std::includes(g.begin(), g.end(), f.begin(), f.end())) faces.push_back(g);

  // apex * (∂F * lk F): the sets A ∪ B with A ⊊ F and B ∪ F a face, B ∩ F = ∅.
  const SimplicialComplex lk = link(k, f);
  std::vector<Face> lk_faces;
  for (const Face& b : lk.all_faces()) {
    Face mapped;
    for (int v : b) mapped.push_back(*k.vertex_index(lk.label(v)));
    std::sort(mapped.begin(), mapped.end());
    lk_faces.push_back(std::move(mapped));
  }
  const std::uint64_t proper = (std::uint64_t{1} << f.size()) - 1;
  for (std::uint64_t mask = 0; mask < proper; ++mask) {
    Face a;
    for (std::size_t i = 0; i < f.size(); ++i)
      if ((mask >> i) & 1U) a.push_back(f[i]);
    for (const Face& b : lk_faces) {
      Face g;
      std::merge(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(g));
      g.push_back(apex);
      faces.push_back(std::move(g));
    }
  }
  return SimplicialComplex::from_faces(labels, std::move(faces));
}

bool is_flag(const SimplicialComplex& k) {
  if (k.is_void()) return true;
  const std::size_t n = k.num_vertices();
  std::vector<std::vector<char>> adj(n, std::vector<char>(n, 0));
  for (const Face& e : k.faces_of_size(2)) {
    adj[static_cast<std::size_t>(e[0])][static_cast<std::size_t>(e[1])] = 1;
    adj[static_cast<std::size_t>(e[1])][static_cast<std::size_t>(e[0])] = 1;
  }
  // A clique not spanning a face has a minimal such clique; extending faces
  // one vertex at a time finds it.
  for (std::size_t s = 2; s <= k.max_face_size() + 1; ++s) {
    for (const Face& f : k.faces_of_size(s)) {
      for (std::size_t v = static_cast<std::size_t>(f.back()) + 1; v < n; ++v) {
        bool all = true;
        for (int u : f) all = all && adj[static_cast<std::size_t>(u)][v];
        if (!all) continue;
        Face g = f;
        g.push_back(static_cast<int>(v));
        if (!k.contains(g)) return false;
      }
    }
  }
  return true;
}

SimplicialComplex induced_subcomplex(const SimplicialComplex& k, const std::vector<int>& keep) {
  std::vector<char> in(k.num_vertices(), 0);
  for (int v : keep) in[static_cast<std::size_t>(v)] = 1;
  std::vector<Face> faces;
  for (const Face& f : k.all_faces()) {
    bool ok = true;
    for (int v : f) ok = ok && in[static_cast<std::size_t>(v)];
    if (ok) faces.push_back(f);
  }
  return SimplicialComplex::from_faces(k.labels(), std::move(faces));
}

SimplicialComplex simplex_boundary(const std::vector<std::string>& labels) {
  const std::size_t m = labels.size();
  std::vector<Face> faces;
  const std::uint64_t all = (std::uint64_t{1} << m) - 1;
  for (std::uint64_t mask = 0; mask < all; ++mask) {
    Face f;
    for (std::size_t i = 0; i < m; ++i)
      if ((mask >> i) & 1U) f.push_back(static_cast<int>(i));
    faces.push_back(std::move(f));
  }
  return SimplicialComplex::from_faces(labels, std::move(faces));
}

SimplicialComplex full_simplex(const std::vector<std::string>& labels) {
  std::vector<int> all(labels.size());
  std::iota(all.begin(), all.end(), 0);
  return SimplicialComplex::from_facets(labels, {all});
}

SimplicialComplex with_label_prefix(const SimplicialComplex& k, const std::string& prefix) {
  if (k.is_void()) return k;
  std::vector<std::string> labels;
  for (const auto& l : k.labels()) labels.push_back(prefix + l);
  return SimplicialComplex::from_faces(labels, k.all_faces());
}

std::optional<std::vector<int>> is_isomorphic_complexes(const SimplicialComplex& k, const SimplicialComplex& l) {
  if (k.is_void() || l.is_void()) {
    if (k.is_void() && l.is_void()) return std::vector<int>{};
    return std::nullopt;
  }
  if (k.f_vector() != l.f_vector()) return std::nullopt;
  const std::size_t n = k.num_vertices();

  using Sig = std::vector<long>;
  auto adjacency = [](const SimplicialComplex& c) {
    std::vector<std::vector<int>> adj(c.num_vertices());
    for (const Face& e : c.faces_of_size(2)) {
      adj[static_cast<std::size_t>(e[0])].push_back(e[1]);
      adj[static_cast<std::size_t>(e[1])].push_back(e[0]);
    }
    return adj;
  };
  auto base = [](const SimplicialComplex& c) {
    std::vector<Sig> sig(c.num_vertices(), Sig(c.max_face_size() + 1, 0));
    for (std::size_t s = 1; s <= c.max_face_size(); ++s)
      for (const Face& f : c.faces_of_size(s))
        for (int v : f) ++sig[static_cast<std::size_t>(v)][s];
    return sig;
  };
  const auto ak = adjacency(k), al = adjacency(l);
  std::vector<Sig> sk = base(k), sl = base(l);
  std::vector<int> ck(n), cl(n);
  std::size_t classes = 0;
  for (int round = 0; round < 64; ++round) {
    std::map<Sig, int> ids;
    for (auto& s : sk) ids.emplace(s, 0);
    for (auto& s : sl) ids.emplace(s, 0);
    int next = 0;
    for (auto& [key, v] : ids) v = next++;
    for (std::size_t i = 0; i < n; ++i) {
      ck[i] = ids[sk[i]];
      cl[i] = ids[sl[i]];
    }
    if (ids.size() == classes) break;
    classes = ids.size();
    auto refine = [](const std::vector<std::vector<int>>& adj, const std::vector<int>& c, std::vector<Sig>& s) {
      for (std::size_t v = 0; v < adj.size(); ++v) {
        Sig nb;
        for (int u : adj[v]) nb.push_back(c[static_cast<std::size_t>(u)]);
        std::sort(nb.begin(), nb.end());
        Sig next{c[v]};
        next.insert(next.end(), nb.begin(), nb.end());
        s[v] = std::move(next);
      }
    };
    refine(ak, ck, sk);
    refine(al, cl, sl);
  }
  {
    auto a = ck, b = cl;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a != b) return std::nullopt;
  }

  // Visit vertices in BFS order so mapped neighbours constrain each choice.
  std::vector<int> order;
  std::vector<char> seen(n, 0);
  for (std::size_t s = 0; s < n; ++s) {
    if (seen[s]) continue;
    std::vector<int> queue{static_cast<int>(s)};
    seen[s] = 1;
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
      const int v = queue[qi];
      order.push_back(v);
      for (int u : ak[static_cast<std::size_t>(v)])
        if (!seen[static_cast<std::size_t>(u)]) {
          seen[static_cast<std::size_t>(u)] = 1;
          queue.push_back(u);
        }
    }
  }
  std::vector<int> pos(n);
  for (std::size_t i = 0; i < n; ++i) pos[static_cast<std::size_t>(order[i])] = static_cast<int>(i);
  // Faces of size >= 2 whose last vertex (in visiting order) is v.
  std::vector<std::vector<Face>> closing(n);
  for (std::size_t s = 2; s <= k.max_face_size(); ++s) {
    for (const Face& f : k.faces_of_size(s)) {
      int last = f[0];
      for (int v : f)
        if (pos[static_cast<std::size_t>(v)] > pos[static_cast<std::size_t>(last)]) last = v;
      closing[static_cast<std::size_t>(last)].push_back(f);
    }
  }
  std::vector<std::vector<char>> adj_l(n, std::vector<char>(n, 0));
  for (const Face& e : l.faces_of_size(2)) {
    adj_l[static_cast<std::size_t>(e[0])][static_cast<std::size_t>(e[1])] = 1;
    adj_l[static_cast<std::size_t>(e[1])][static_cast<std::size_t>(e[0])] = 1;
  }
  std::vector<std::vector<char>> adj_k(n, std::vector<char>(n, 0));
  for (const Face& e : k.faces_of_size(2)) {
    adj_k[static_cast<std::size_t>(e[0])][static_cast<std::size_t>(e[1])] = 1;
    adj_k[static_cast<std::size_t>(e[1])][static_cast<std::size_t>(e[0])] = 1;
  }

  std::vector<int> map(n, -1);
  std::vector<char> used(n, 0);
  std::function<bool(std::size_t)> place = [&](std::size_t depth) -> bool {
    if (depth == n) return true;
    const int v = order[depth];
    for (std::size_t w = 0; w < n; ++w) {
      if (used[w] || cl[w] != ck[static_cast<std::size_t>(v)]) continue;
      bool ok = true;
      for (std::size_t i = 0; i < depth && ok; ++i) {
        const int u = order[i];
        ok = adj_k[static_cast<std::size_t>(v)][static_cast<std::size_t>(u)] ==
             adj_l[w][static_cast<std::size_t>(map[static_cast<std::size_t>(u)])];
      }
      if (!ok) continue;
      map[static_cast<std::size_t>(v)] = static_cast<int>(w);
      for (const Face& f : closing[static_cast<std::size_t>(v)]) {
        Face img;
        for (int x : f) img.push_back(map[static_cast<std::size_t>(x)]);
        std::sort(img.begin(), img.end());
        if (!l.contains(img)) {
          ok = false;
          break;
        }
      }
      if (ok) {
        used[w] = 1;
        if (place(depth + 1)) return true;
        used[w] = 0;
      }
      map[static_cast<std::size_t>(v)] = -1;
    }
    return false;
  };
  if (!place(0)) return std::nullopt;
  return map;
}

}  // namespace dowling
