#include "dowling/trees.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <map>
#include <unordered_map>

#include "dowling/errors.hpp"
#include "dowling/nested.hpp"

namespace dowling {

namespace {

constexpr int kMaxLeaves = 64;

LeafSet bit(int b) { return LeafSet{1} << b; }

LeafSet all_leaves(int n, int k) { return n * k == 64 ? ~LeafSet{0} : bit(n * k) - 1; }

// perm[g][b]: the leaf bit of g · (i, h) where b encodes (i, h).
std::vector<std::vector<int>> leaf_permutations(int n, const GroupTable& g) {
  const int k = g.order();
  std::vector<std::vector<int>> perm(static_cast<std::size_t>(k), std::vector<int>(static_cast<std::size_t>(n * k)));
  for (GElem x = 0; x < k; ++x)
    for (int i = 1; i <= n; ++i)
      for (GElem h = 0; h < k; ++h) perm[x][(i - 1) * k + h] = (i - 1) * k + g.mul(x, h);
  return perm;
}

LeafSet act(const std::vector<int>& perm, LeafSet s) {
  LeafSet out = 0;
  while (s) {
    const int b = std::countr_zero(s);
    out |= bit(perm[static_cast<std::size_t>(b)]);
    s &= s - 1;
  }
  return out;
}

// Index set of a leaf set, with multiplicities detected.
std::vector<int> indices_of(LeafSet s, int k, bool* repeated = nullptr) {
  std::vector<int> idx;
  if (repeated) *repeated = false;
  while (s) {
    const int i = std::countr_zero(s) / k + 1;
    if (!idx.empty() && idx.back() == i) {
      if (repeated) *repeated = true;
    } else {
      idx.push_back(i);
    }
    s &= s - 1;
  }
  return idx;
}

LeafSet index_closure(const std::vector<int>& idx, int k) {
  LeafSet s = 0;
  for (int i : idx)
    for (int h = 0; h < k; ++h) s |= bit((i - 1) * k + h);
  return s;
}

bool is_simple(LeafSet s, int k) {
  bool rep = false;
  indices_of(s, k, &rep);
  return !rep;
}

bool is_invariant(LeafSet s, const std::vector<std::vector<int>>& perm) {
  for (const auto& p : perm)
    if (act(p, s) != s) return false;
  return true;
}

void check_size(int n, int k) {
  if (n < 0) throw DomainError("n must be nonnegative");
  if (n * k > kMaxLeaves) throw DomainError("trees support at most 64 leaves");
}

// A simple clade S or an invariant zero clade as an element of Q_n(G).
DowlingElement element_from_clade(int n, const GroupTable& g, LeafSet s, bool zero) {
  const int k = g.order();
  std::vector<std::vector<BasePoint>> blocks;
  blocks.push_back({{0, 0}});
  LeafSet covered = 0;
  if (zero) {
    for (int i : indices_of(s, k))
      for (GElem h = 0; h < k; ++h) blocks[0].push_back({i, h});
    covered = index_closure(indices_of(s, k), k);
  } else {
    for (GElem x = 0; x < k; ++x) {
      std::vector<BasePoint> blk;
      LeafSet t = s;
      while (t) {
        const int b = std::countr_zero(t);
        blk.push_back({b / k + 1, g.mul(x, b % k)});
        covered |= bit(b / k * k + g.mul(x, b % k));
        t &= t - 1;
      }
      blocks.push_back(std::move(blk));
    }
  }
  for (int b = 0; b < n * k; ++b)
    if (!(covered & bit(b))) blocks.push_back({{b / k + 1, b % k}});
  return normalize(blocks, n, g);
}

// Representative leaf set {(i, label_i)} of the nonsingleton block of an I^G element.
LeafSet clade_of(const DowlingElement& e) {
  const auto blocks = e.nonzero_blocks();
  for (const auto& b : blocks)
    if (b.size() >= 2) {
      LeafSet s = 0;
      for (int i : b) s |= bit((i - 1) * e.k + e.label[static_cast<std::size_t>(i)]);
      return s;
    }
  return 0;
}

bool in_IG(const DowlingElement& e) {
  if (!e.trivial_zero_block()) return false;
  int big = 0;
  for (const auto& b : e.nonzero_blocks())
    if (b.size() >= 2) ++big;
  return big == 1;
}

bool is_type_zero(const DowlingElement& e) {
  if (e.trivial_zero_block()) return false;
  for (const auto& b : e.nonzero_blocks())
    if (b.size() >= 2) return false;
  return true;
}

void check_element(const DowlingElement& e, int n, const GroupTable& g) {
  if (e.n != n || e.k != g.order()) throw IncompatibleError("element " + e.to_string() + " belongs to a different lattice");
}

std::vector<int> depths(const GTree& t) {
  std::vector<int> d(t.size(), -1);
  d[0] = 0;
  for (std::size_t v = 0; v < t.size(); ++v) {
    std::vector<std::size_t> chain;
    std::size_t u = v;
    while (d[u] < 0) {
      chain.push_back(u);
      u = static_cast<std::size_t>(t.parent[u]);
    }
    for (auto it = chain.rbegin(); it != chain.rend(); ++it) d[*it] = d[static_cast<std::size_t>(t.parent[*it])] + 1;
  }
  return d;
}

// Parent structure is a tree rooted at 0.
std::string structure_problem(const GTree& t, int k) {
  if (t.k != k) return "tree group order differs from the group";
  if (t.n < 0 || t.n * k > kMaxLeaves) return "unsupported number of leaves";
  const std::size_t m = t.size();
  if (m == 0) return "tree has no vertices";
  if (t.leaf.size() != m || t.zero.size() != m) return "vertex arrays differ in length";
  if (t.parent[0] != -1) return "vertex 0 is not the root";
  for (std::size_t v = 1; v < m; ++v)
    if (t.parent[v] < 0 || static_cast<std::size_t>(t.parent[v]) >= m) return "vertex " + std::to_string(v) + " has no valid parent";
  for (std::size_t v = 1; v < m; ++v) {
    std::size_t u = v, steps = 0;
    while (u != 0) {
      u = static_cast<std::size_t>(t.parent[u]);
      if (++steps > m) return "parent pointers contain a cycle";
    }
  }
  const auto ch = t.children();
  std::vector<char> seen(static_cast<std::size_t>(t.n * k), 0);
  for (std::size_t v = 0; v < m; ++v) {
    const bool inner = !ch[v].empty();
    if (inner && t.leaf[v] != -1) return "inner vertex " + std::to_string(v) + " carries a leaf label";
    if (!inner && t.n * k > 0 && (v == 0 || t.leaf[v] == -1)) return "vertex " + std::to_string(v) + " is an unlabelled leaf";
    if (t.leaf[v] == -1) continue;
    if (t.leaf[v] < 0 || t.leaf[v] >= t.n * k) return "leaf label out of range";
    if (seen[static_cast<std::size_t>(t.leaf[v])]++) return "leaf label used twice";
  }
  for (char s : seen)
    if (!s) return "some leaf label is missing";
  return {};
}

std::string leaf_name(int b, int k) { return "(" + std::to_string(b / k + 1) + "," + std::to_string(b % k) + ")"; }

}  // namespace

std::vector<std::vector<int>> GTree::children() const {
  std::vector<std::vector<int>> ch(size());
  for (std::size_t v = 1; v < size(); ++v)
    if (parent[v] >= 0 && static_cast<std::size_t>(parent[v]) < size()) ch[static_cast<std::size_t>(parent[v])].push_back(static_cast<int>(v));
  return ch;
}

std::vector<LeafSet> GTree::leaf_sets() const {
  const auto d = depths(*this);
  std::vector<std::size_t> order(size());
  for (std::size_t v = 0; v < size(); ++v) order[v] = v;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return d[a] > d[b]; });
  std::vector<LeafSet> s(size(), 0);
  for (std::size_t v : order) {
    if (leaf[v] >= 0) s[v] |= bit(leaf[v]);
    if (v != 0) s[static_cast<std::size_t>(parent[v])] |= s[v];
  }
  return s;
}

std::vector<int> GTree::inner_vertices() const {
  const auto ch = children();
  std::vector<int> out;
  for (std::size_t v = 1; v < size(); ++v)
    if (!ch[v].empty()) out.push_back(static_cast<int>(v));
  return out;
}

std::string condition_name(TreeCondition c) {
  switch (c) {
    case TreeCondition::Labels: return "labels";
    case TreeCondition::RootZero: return "root-zero";
    case TreeCondition::Degree: return "degree";
    case TreeCondition::Symmetry: return "symmetry";
    case TreeCondition::Separation: return "separation";
    case TreeCondition::ZeroPath: return "zero-path";
    case TreeCondition::ReducedTop: return "reduced-top";
  }
  return "unknown";
}

std::vector<TreeViolation> validate(const GTree& t, const GroupTable& g) {
  const int k = g.order();
  std::vector<TreeViolation> out;
  if (auto p = structure_problem(t, k); !p.empty()) {
    out.push_back({TreeCondition::Labels, p});
    return out;
  }
  const std::size_t m = t.size();
  const auto ch = t.children();
  const auto lam = t.leaf_sets();

  if (!t.zero[0]) out.push_back({TreeCondition::RootZero, "root is not a zero vertex"});

  for (std::size_t v = 1; v < m; ++v)
    if (!ch[v].empty() && ch[v].size() < 2)
      out.push_back({TreeCondition::Degree, "inner vertex " + std::to_string(v) + " has degree 2"});

  // (2): the stored action against the one forced by the leaf labels.
  std::unordered_map<LeafSet, std::size_t> by_set;
  for (std::size_t v = 1; v < m; ++v) by_set.emplace(lam[v], v);
  const auto perm = leaf_permutations(t.n, g);
  bool action_ok = t.action.size() == static_cast<std::size_t>(k);
  for (std::size_t x = 0; action_ok && x < t.action.size(); ++x) {
    if (t.action[x].size() != m) { action_ok = false; break; }
    std::vector<char> hit(m, 0);
    for (int w : t.action[x]) {
      if (w < 0 || static_cast<std::size_t>(w) >= m || hit[static_cast<std::size_t>(w)]++) { action_ok = false; break; }
    }
  }
  if (!action_ok) {
    out.push_back({TreeCondition::Symmetry, "action is not a family of |G| vertex permutations"});
  } else {
    std::string problem;
    for (GElem x = 0; x < k && problem.empty(); ++x) {
      const auto& a = t.action[static_cast<std::size_t>(x)];
      if (a[0] != 0) problem = "action moves the root";
      for (std::size_t v = 1; v < m && problem.empty(); ++v) {
        const LeafSet img = act(perm[static_cast<std::size_t>(x)], lam[v]);
        auto it = by_set.find(img);
        if (it == by_set.end()) {
          problem = "tree is not invariant: no vertex below " + std::to_string(x) + " · " + std::to_string(v);
        } else if (lam[static_cast<std::size_t>(a[v])] != img) {
          problem = "stored action disagrees with the leaf labels at vertex " + std::to_string(v);
        } else if (t.parent[static_cast<std::size_t>(a[v])] != a[static_cast<std::size_t>(t.parent[v])]) {
          problem = "action does not preserve the parent of vertex " + std::to_string(v);
        }
        if (problem.empty() && t.zero[v] && static_cast<std::size_t>(a[v]) != v)
          problem = "zero vertex " + std::to_string(v) + " is moved by the action";
      }
      for (GElem y = 0; y < k && problem.empty(); ++y) {
        const auto& ab = t.action[static_cast<std::size_t>(g.mul(x, y))];
        const auto& b = t.action[static_cast<std::size_t>(y)];
        for (std::size_t v = 0; v < m; ++v)
          if (ab[v] != a[static_cast<std::size_t>(b[v])]) {
            problem = "action is not compatible with the group law";
            break;
          }
      }
    }
    if (problem.empty())
      for (std::size_t v = 0; v < m; ++v)
        if (t.action[0][v] != static_cast<int>(v)) problem = "identity acts nontrivially";
    if (!problem.empty()) out.push_back({TreeCondition::Symmetry, problem});
  }

  // (3)
  std::vector<int> leaf_vertex(static_cast<std::size_t>(t.n * k), -1);
  for (std::size_t v = 0; v < m; ++v)
    if (t.leaf[v] >= 0) leaf_vertex[static_cast<std::size_t>(t.leaf[v])] = static_cast<int>(v);
  const auto d = depths(t);
  bool sep_ok = true;
  for (int i = 1; i <= t.n && sep_ok; ++i)
    for (GElem a = 0; a < k && sep_ok; ++a)
      for (GElem b = a + 1; b < k && sep_ok; ++b) {
        std::size_t u = static_cast<std::size_t>(leaf_vertex[static_cast<std::size_t>((i - 1) * k + a)]);
        std::size_t w = static_cast<std::size_t>(leaf_vertex[static_cast<std::size_t>((i - 1) * k + b)]);
        int zeros = 0;
        while (u != w) {
          if (d[u] >= d[w]) {
            zeros += t.zero[u] ? 1 : 0;
            u = static_cast<std::size_t>(t.parent[u]);
          } else {
            zeros += t.zero[w] ? 1 : 0;
            w = static_cast<std::size_t>(t.parent[w]);
          }
        }
        zeros += t.zero[u] ? 1 : 0;
        if (zeros != 1) {
          out.push_back({TreeCondition::Separation, "path between " + leaf_name((i - 1) * k + a, k) + " and " +
                                                        leaf_name((i - 1) * k + b, k) + " meets " + std::to_string(zeros) +
                                                        " zero vertices"});
          sep_ok = false;
        }
      }

  // (4)
  for (std::size_t v = 0; v < m; ++v) {
    if (v != 0 && t.zero[v] && !t.zero[static_cast<std::size_t>(t.parent[v])]) {
      out.push_back({TreeCondition::ZeroPath, "zero vertex " + std::to_string(v) + " has a nonzero parent"});
      break;
    }
    int zc = 0;
    for (int c : ch[v]) zc += t.zero[static_cast<std::size_t>(c)] ? 1 : 0;
    if (zc > 1) {
      out.push_back({TreeCondition::ZeroPath, "vertex " + std::to_string(v) + " has several zero children"});
      break;
    }
  }

  if (ch[0].size() == 1 && t.zero[static_cast<std::size_t>(ch[0][0])])
    out.push_back({TreeCondition::ReducedTop, "the root has a single zero child"});
  return out;
}

bool is_symmetric_tree(const GTree& t, const GroupTable& g) {
  if (!validate(t, g).empty()) return false;
  for (std::size_t v = 1; v < t.size(); ++v)
    if (t.zero[v]) return false;
  return true;
}

GTree tree_from_clades(int n, const GroupTable& g, const std::set<LeafSet>& clades, const std::set<LeafSet>& zero_clades) {
  const int k = g.order();
  check_size(n, k);
  const LeafSet full = all_leaves(n, k);
  for (LeafSet z : zero_clades)
    if (!clades.count(z)) throw StructureError("zero clade is not a clade");
  std::vector<LeafSet> cl(clades.begin(), clades.end());
  for (LeafSet c : cl) {
    if (c == 0 || (c & ~full)) throw StructureError("clade outside the leaf set");
    if (std::popcount(c) < 2) throw StructureError("clade with fewer than two leaves");
  }
  for (std::size_t a = 0; a < cl.size(); ++a)
    for (std::size_t b = a + 1; b < cl.size(); ++b) {
      const LeafSet x = cl[a] & cl[b];
      if (x && x != cl[a] && x != cl[b]) throw StructureError("clades overlap without nesting");
    }
  // Nodes: clades then single leaves; parent is the smallest clade strictly containing a node.
  struct Node {
    LeafSet set;
    int leaf;
  };
  std::vector<Node> nodes;
  for (LeafSet c : cl) nodes.push_back({c, -1});
  for (int b = 0; b < n * k; ++b) nodes.push_back({bit(b), b});
  std::vector<std::vector<std::size_t>> kids(nodes.size() + 1);  // last slot is the root
  const std::size_t root = nodes.size();
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    std::size_t best = root;
    for (std::size_t j = 0; j < cl.size(); ++j) {
      if (j == i || (nodes[j].set & nodes[i].set) != nodes[i].set || nodes[j].set == nodes[i].set) continue;
      if (best == root || std::popcount(nodes[j].set) < std::popcount(nodes[best].set)) best = j;
    }
    kids[best].push_back(i);
  }
  for (auto& kv : kids)
    std::sort(kv.begin(), kv.end(), [&](std::size_t a, std::size_t b) {
      return std::countr_zero(nodes[a].set) < std::countr_zero(nodes[b].set);
    });

  GTree t;
  t.n = n;
  t.k = k;
  std::vector<std::size_t> number(nodes.size() + 1);
  std::vector<std::pair<std::size_t, int>> stack{{root, -1}};
  while (!stack.empty()) {
    auto [node, par] = stack.back();
    stack.pop_back();
    const int id = static_cast<int>(t.parent.size());
    number[node] = static_cast<std::size_t>(id);
    t.parent.push_back(par);
    t.leaf.push_back(node == root ? -1 : nodes[node].leaf);
    t.zero.push_back(node == root || zero_clades.count(nodes[node].set) ? 1 : 0);
    for (auto it = kids[node].rbegin(); it != kids[node].rend(); ++it) stack.push_back({*it, id});
  }
  const auto lam = t.leaf_sets();
  std::unordered_map<LeafSet, int> by_set;
  for (std::size_t v = 1; v < t.size(); ++v) by_set.emplace(lam[v], static_cast<int>(v));
  const auto perm = leaf_permutations(n, g);
  t.action.assign(static_cast<std::size_t>(k), std::vector<int>(t.size(), 0));
  for (GElem x = 0; x < k; ++x)
    for (std::size_t v = 1; v < t.size(); ++v) {
      auto it = by_set.find(act(perm[static_cast<std::size_t>(x)], lam[v]));
      t.action[static_cast<std::size_t>(x)][v] = it == by_set.end() ? static_cast<int>(v) : it->second;
    }
  return t;
}

std::pair<std::set<LeafSet>, std::set<LeafSet>> tree_clades(const GTree& t) {
  const auto ch = t.children();
  const auto lam = t.leaf_sets();
  std::set<LeafSet> clades, zeros;
  for (std::size_t v = 1; v < t.size(); ++v) {
    if (ch[v].empty()) continue;
    if (!clades.insert(lam[v]).second) throw StructureError("two inner vertices share a leaf set");
    if (t.zero[v]) zeros.insert(lam[v]);
  }
  return {clades, zeros};
}

GTree canonical_tree(const GTree& t, const GroupTable& g) {
  auto [c, z] = tree_clades(t);
  return tree_from_clades(t.n, g, c, z);
}

GTree star_tree(int n, const GroupTable& g) { return tree_from_clades(n, g, {}, {}); }

DowlingElement sigma_of_edge(const GTree& t, const GroupTable& g, int v) {
  const auto ch = t.children();
  if (v <= 0 || static_cast<std::size_t>(v) >= t.size() || ch[static_cast<std::size_t>(v)].empty())
    throw DomainError("vertex " + std::to_string(v) + " does not sit below an inner edge");
  const LeafSet s = t.leaf_sets()[static_cast<std::size_t>(v)];
  const bool zero = t.zero[static_cast<std::size_t>(v)];
  if (!zero && !is_simple(s, t.k)) throw StructureError("leaf set below vertex " + std::to_string(v) + " repeats an index");
  return element_from_clade(t.n, g, s, zero);
}

std::vector<DowlingElement> tree_to_nested(const GTree& t, const GroupTable& g) {
  const auto bad = validate(t, g);
  if (!bad.empty()) throw StructureError("invalid tree (" + condition_name(bad.front().condition) + "): " + bad.front().detail);
  std::set<DowlingElement> out;
  for (int v : t.inner_vertices()) out.insert(sigma_of_edge(t, g, v));
  return {out.begin(), out.end()};
}

bool satisfies_condition_n(const std::vector<DowlingElement>& x, const GroupTable& g) {
  for (const auto& e : x)
    if (!in_IG(e)) throw DomainError(e.to_string() + " is not in I^G");
  auto big = [](const DowlingElement& e) {
    for (const auto& b : e.nonzero_blocks())
      if (b.size() >= 2) return b;
    return std::vector<int>{};
  };
  for (std::size_t a = 0; a < x.size(); ++a)
    for (std::size_t b = a + 1; b < x.size(); ++b) {
      if (leq(x[a], x[b], g) || leq(x[b], x[a], g)) continue;
      const auto ba = big(x[a]), bb = big(x[b]);
      for (int i : ba)
        if (std::find(bb.begin(), bb.end(), i) != bb.end()) return false;
    }
  return true;
}

namespace {

// Inserts a new vertex for leaf set s below the minimal vertex containing it.
void insert_clade(GTree& t, LeafSet s, bool zero_vertex) {
  const auto lam = t.leaf_sets();
  const auto ch = t.children();
  std::size_t v = 0;
  for (bool moved = true; moved;) {
    moved = false;
    for (int c : ch[v])
      if ((lam[static_cast<std::size_t>(c)] & s) == s && !ch[static_cast<std::size_t>(c)].empty()) {
        v = static_cast<std::size_t>(c);
        moved = true;
        break;
      }
  }
  std::vector<int> f;
  for (int c : ch[v]) {
    const LeafSet lc = lam[static_cast<std::size_t>(c)];
    if ((lc & s) == lc) f.push_back(c);
    else if (lc & s) throw StructureError("a child of the extension vertex meets the new block partially");
  }
  if (f.size() < 2 || (f.size() == ch[v].size() && v != 0)) throw StructureError("extension would not create a new inner edge");
  if (zero_vertex && !t.zero[v]) throw StructureError("zero vertex would hang below a nonzero vertex");
  const int w = static_cast<int>(t.size());
  t.parent.push_back(static_cast<int>(v));
  t.leaf.push_back(-1);
  t.zero.push_back(zero_vertex ? 1 : 0);
  for (int c : f) t.parent[static_cast<std::size_t>(c)] = w;
}

GTree finish(GTree t, const GroupTable& g) {
  GTree c = canonical_tree(t, g);
  const auto bad = validate(c, g);
  if (!bad.empty()) throw StructureError("extension violates " + condition_name(bad.front().condition) + ": " + bad.front().detail);
  return c;
}

}  // namespace

GTree extend_orbit(const GTree& t, const GroupTable& g, const DowlingElement& sigma) {
  check_element(sigma, t.n, g);
  if (!in_IG(sigma)) throw DomainError(sigma.to_string() + " is not in I^G");
  const LeafSet s = clade_of(sigma);
  const auto perm = leaf_permutations(t.n, g);
  GTree out = t;
  for (GElem x = 0; x < g.order(); ++x) insert_clade(out, act(perm[static_cast<std::size_t>(x)], s), false);
  return finish(std::move(out), g);
}

GTree extend_zero(const GTree& t, const GroupTable& g, const DowlingElement& omega) {
  check_element(omega, t.n, g);
  if (!is_type_zero(omega)) throw DomainError(omega.to_string() + " is not a type-0 element of J^G");
  GTree out = t;
  insert_clade(out, index_closure(omega.zero_indices(), g.order()), true);
  return finish(std::move(out), g);
}

GTree nested_to_tree(const std::vector<DowlingElement>& x, int n, const GroupTable& g) {
  check_size(n, g.order());
  for (const auto& e : x) check_element(e, n, g);
  if (!satisfies_condition_n(x, g)) throw DomainError("incomparable members have overlapping blocks");
  std::set<DowlingElement> uniq(x.begin(), x.end());
  GTree t = star_tree(n, g);
  for (const auto& e : uniq) t = extend_orbit(t, g, e);
  return t;
}

GTree nested_to_dowling_tree(const std::vector<DowlingElement>& x, int n, const GroupTable& g) {
  check_size(n, g.order());
  if (g.order() < 2) throw DomainError("Dowling trees need a group of order at least 2");
  std::vector<DowlingElement> ones, zeros;
  std::set<DowlingElement> uniq(x.begin(), x.end());
  const DowlingElement top = dowling_top(n, g);
  for (const auto& e : uniq) {
    check_element(e, n, g);
    if (e == top) throw DomainError("the top element cannot label an inner edge");
    if (in_IG(e)) ones.push_back(e);
    else if (is_type_zero(e)) zeros.push_back(e);
    else throw DomainError(e.to_string() + " is not in J^G");
  }
  std::stable_sort(zeros.begin(), zeros.end(),
                   [](const DowlingElement& a, const DowlingElement& b) { return a.zero_indices().size() < b.zero_indices().size(); });
  GTree t = star_tree(n, g);
  try {
    for (const auto& e : ones) t = extend_orbit(t, g, e);
    for (const auto& e : zeros) t = extend_zero(t, g, e);
  } catch (const StructureError& err) {
    throw StructureError(std::string("set is not nested: ") + err.what());
  }
  return t;
}

GTree contract_orbit(const GTree& t, const GroupTable& g, int v) {
  const auto ch = t.children();
  if (v <= 0 || static_cast<std::size_t>(v) >= t.size() || ch[static_cast<std::size_t>(v)].empty())
    throw DomainError("vertex " + std::to_string(v) + " does not sit below an inner edge");
  auto [clades, zeros] = tree_clades(t);
  const LeafSet s = t.leaf_sets()[static_cast<std::size_t>(v)];
  for (const auto& p : leaf_permutations(t.n, g)) {
    const LeafSet img = act(p, s);
    clades.erase(img);
    zeros.erase(img);
  }
  return tree_from_clades(t.n, g, clades, zeros);
}

std::vector<GTree> enumerate_trees(int n, const GroupTable& g, bool dowling) {
  const int k = g.order();
  check_size(n, k);
  if (dowling && k < 2) throw DomainError("Dowling trees need a group of order at least 2");
  const auto perm = leaf_permutations(n, g);
  using Key = std::pair<std::set<LeafSet>, std::set<LeafSet>>;
  std::set<Key> seen;
  std::vector<GTree> out;
  std::deque<Key> queue;
  queue.push_back({});
  seen.insert({});
  auto admit = [&](const Key& key) {
    if (seen.count(key)) return;
    GTree cand;
    try {
      cand = tree_from_clades(n, g, key.first, key.second);
    } catch (const StructureError&) {
      return;
    }
    if (!validate(cand, g).empty()) return;
    seen.insert(key);
    queue.push_back(key);
  };
  while (!queue.empty()) {
    Key key = queue.front();
    queue.pop_front();
    const GTree t = tree_from_clades(n, g, key.first, key.second);
    out.push_back(t);
    const auto ch = t.children();
    const auto lam = t.leaf_sets();
    for (std::size_t v = 0; v < t.size(); ++v) {
      const auto& c = ch[v];
      if (c.size() < 2 || c.size() > 24) continue;
      for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << c.size()); ++mask) {
        if (std::popcount(mask) < 2) continue;
        LeafSet s = 0;
        for (std::size_t j = 0; j < c.size(); ++j)
          if (mask >> j & 1) s |= lam[static_cast<std::size_t>(c[j])];
        if (key.first.count(s)) continue;
        if (is_simple(s, k)) {
          Key next = key;
          for (const auto& p : perm) next.first.insert(act(p, s));
          admit(next);
        }
        if (dowling && t.zero[v] && is_invariant(s, perm)) {
          Key next = key;
          next.first.insert(s);
          next.second.insert(s);
          admit(next);
        }
      }
    }
  }
  return out;
}

SimplicialComplex build_tree_complex(int n, const GroupTable& g, std::size_t cap) {
  const DowlingLattice q0 = build_q0(n, g, cap);
  return nested_complex(q0.poset(), compute_IG(q0), false);
}

SimplicialComplex build_dowling_tree_complex(int n, const GroupTable& g, std::size_t cap) {
  const DowlingLattice q = build_dowling_lattice(n, g, cap);
  return nested_complex(q.poset(), compute_JG(q), true);
}

SimplicialComplex complex_from_trees(const std::vector<GTree>& trees, const GroupTable& g) {
  std::vector<std::vector<std::string>> faces;
  for (const auto& t : trees) {
    std::vector<std::string> f;
    for (const auto& e : tree_to_nested(t, g)) f.push_back(e.to_string());
    if (!f.empty()) faces.push_back(std::move(f));
  }
  if (faces.empty()) return trees.empty() ? SimplicialComplex::void_complex() : SimplicialComplex::empty_complex();
  return SimplicialComplex::from_facets(faces);
}

}  // namespace dowling
