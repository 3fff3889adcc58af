#include <gtest/gtest.h>

#include <algorithm>
#include <functional>
#include <set>

#include "dowling/errors.hpp"
#include "dowling/lattice.hpp"
#include "dowling/nested.hpp"
#include "dowling/trees.hpp"
#include "oracles.hpp"

using dowling::DowlingElement;
using dowling::GroupTable;
using dowling::GTree;
using dowling::LeafSet;
using dowling::TreeCondition;

namespace {

const GroupTable& z2() {
  static const GroupTable g = dowling::cyclic_group(2);
  return g;
}
const GroupTable& z3() {
  static const GroupTable g = dowling::cyclic_group(3);
  return g;
}

DowlingElement el(const std::string& s, int n = 3, const GroupTable& g = z2()) { return dowling::parse_element(s, n, g); }

bool has(const std::vector<dowling::TreeViolation>& v, TreeCondition c) {
  return std::any_of(v.begin(), v.end(), [&](const auto& x) { return x.condition == c; });
}

std::set<DowlingElement> as_set(const std::vector<DowlingElement>& v) { return {v.begin(), v.end()}; }

// Nested sets of a building set as element sets.
std::set<std::set<DowlingElement>> nested_sets(const dowling::DowlingLattice& l, const dowling::BuildingSet& b, bool reduced) {
  std::set<std::set<DowlingElement>> out;
  for (const auto& x : dowling::enumerate_nested_sets(l.poset(), b, reduced).sets) {
    std::set<DowlingElement> s;
    for (std::size_t i : x) s.insert(l.element(i));
    out.insert(s);
  }
  return out;
}

struct Scale {
  int n;
  const GroupTable* g;
};

std::vector<Scale> scales() {
  return {{1, &z2()}, {2, &z2()}, {3, &z2()}, {4, &z2()}, {1, &z3()}, {2, &z3()}, {3, &z3()}};
}

// Two sample trees for n = 3, G = Z_2. Leaf bits: (1,0)=0 (1,1)=1 (2,0)=2 (2,1)=3 (3,0)=4 (3,1)=5.
constexpr LeafSet kOneTwoBar = 0b1001;
constexpr LeafSet kOneBarTwo = 0b0110;
constexpr LeafSet kZeroTwelve = 0b1111;

}  // namespace

TEST(Trees, StarTree) {
  for (const auto& s : scales()) {
    const GTree t = dowling::star_tree(s.n, *s.g);
    EXPECT_TRUE(dowling::validate(t, *s.g).empty());
    EXPECT_TRUE(dowling::is_symmetric_tree(t, *s.g));
    EXPECT_TRUE(dowling::tree_to_nested(t, *s.g).empty());
    EXPECT_EQ(t.size(), static_cast<std::size_t>(1 + s.n * s.g->order()));
    EXPECT_EQ(dowling::nested_to_tree({}, s.n, *s.g), t);
    EXPECT_EQ(dowling::nested_to_dowling_tree({}, s.n, *s.g), t);
  }
}

TEST(Trees, SampleTreeA) {
  const GTree t = dowling::nested_to_tree({el("0|1 2~1|3")}, 3, z2());
  EXPECT_EQ(t, dowling::tree_from_clades(3, z2(), {kOneTwoBar, kOneBarTwo}, {}));
  EXPECT_TRUE(dowling::is_symmetric_tree(t, z2()));
  const auto inner = t.inner_vertices();
  ASSERT_EQ(inner.size(), 2u);
  for (int v : inner) EXPECT_EQ(dowling::sigma_of_edge(t, z2(), v).to_string(), "0|1 2~1|3");
  EXPECT_EQ(dowling::tree_to_nested(t, z2()), std::vector<DowlingElement>{el("0|1 2~1|3")});
  // The two inner vertices form one orbit.
  EXPECT_EQ(t.action[1][static_cast<std::size_t>(inner[0])], inner[1]);
  EXPECT_EQ(dowling::contract_orbit(t, z2(), inner[1]), dowling::star_tree(3, z2()));
}

TEST(Trees, SampleTreeB) {
  const std::vector<DowlingElement> x{el("0|1 2~1|3"), el("0 1 2|3")};
  const GTree t = dowling::nested_to_dowling_tree(x, 3, z2());
  EXPECT_EQ(t, dowling::tree_from_clades(3, z2(), {kOneTwoBar, kOneBarTwo, kZeroTwelve}, {kZeroTwelve}));
  EXPECT_TRUE(dowling::validate(t, z2()).empty());
  EXPECT_FALSE(dowling::is_symmetric_tree(t, z2()));
  EXPECT_EQ(std::count(t.zero.begin(), t.zero.end(), 1), 2);
  EXPECT_EQ(as_set(dowling::tree_to_nested(t, z2())), as_set(x));
  // The zero-path edge is its own orbit.
  for (int v : t.inner_vertices())
    if (t.zero[static_cast<std::size_t>(v)]) {
      for (const auto& a : t.action) EXPECT_EQ(a[static_cast<std::size_t>(v)], v);
      EXPECT_EQ(dowling::tree_to_nested(dowling::contract_orbit(t, z2(), v), z2()), std::vector<DowlingElement>{el("0|1 2~1|3")});
    }
}

TEST(Trees, CaterpillarSigma) {
  const GTree t = dowling::tree_from_clades(2, z2(), {0b0101, 0b1010}, {});
  ASSERT_TRUE(dowling::validate(t, z2()).empty());
  for (int v : t.inner_vertices()) EXPECT_EQ(dowling::sigma_of_edge(t, z2(), v).to_string(), "0|1 2");
  EXPECT_THROW(dowling::sigma_of_edge(t, z2(), 0), dowling::DomainError);
  for (std::size_t v = 0; v < t.size(); ++v)
    if (t.leaf[v] >= 0) EXPECT_THROW(dowling::sigma_of_edge(t, z2(), static_cast<int>(v)), dowling::DomainError);
  EXPECT_THROW(dowling::contract_orbit(t, z2(), 0), dowling::DomainError);
}

TEST(Trees, Violations) {
  // A vertex with a single child.
  GTree deg = dowling::star_tree(2, z2());
  deg.parent.push_back(0);
  deg.leaf.push_back(-1);
  deg.zero.push_back(0);
  deg.parent[1] = 5;
  for (auto& a : deg.action) a.push_back(5);
  EXPECT_TRUE(has(dowling::validate(deg, z2()), TreeCondition::Degree));

  GTree nonzero_root = dowling::star_tree(2, z2());
  nonzero_root.zero[0] = 0;
  EXPECT_TRUE(has(dowling::validate(nonzero_root, z2()), TreeCondition::RootZero));

  // Only one member of an orbit present.
  EXPECT_TRUE(has(dowling::validate(dowling::tree_from_clades(2, z2(), {0b0101}, {}), z2()), TreeCondition::Symmetry));

  GTree bad_action = dowling::tree_from_clades(2, z2(), {0b0101, 0b1010}, {});
  std::swap(bad_action.action[1][1], bad_action.action[1][2]);
  EXPECT_TRUE(has(dowling::validate(bad_action, z2()), TreeCondition::Symmetry));

  // Both copies of index 1 below one nonzero vertex.
  EXPECT_TRUE(has(dowling::validate(dowling::tree_from_clades(2, z2(), {0b0011}, {}), z2()), TreeCondition::Separation));

  EXPECT_TRUE(has(dowling::validate(dowling::tree_from_clades(2, z2(), {0b0011, 0b1100}, {0b0011, 0b1100}), z2()),
                  TreeCondition::ZeroPath));
  EXPECT_TRUE(has(dowling::validate(dowling::tree_from_clades(2, z2(), {0b1111}, {0b1111}), z2()), TreeCondition::ReducedTop));

  GTree dup = dowling::star_tree(2, z2());
  dup.leaf[2] = dup.leaf[1];
  const auto v = dowling::validate(dup, z2());
  EXPECT_TRUE(has(v, TreeCondition::Labels));
  EXPECT_THROW(dowling::tree_to_nested(dup, z2()), dowling::StructureError);

  EXPECT_THROW(dowling::tree_from_clades(2, z2(), {0b0011, 0b0110}, {}), dowling::StructureError);
}

TEST(Trees, NestedToTreeErrors) {
  EXPECT_THROW(dowling::nested_to_tree({el("0|1 2|3"), el("0|1 2~1|3")}, 3, z2()), dowling::DomainError);
  EXPECT_THROW(dowling::nested_to_tree({el("0 1|2|3")}, 3, z2()), dowling::DomainError);
  EXPECT_THROW(dowling::nested_to_dowling_tree({dowling::dowling_top(3, z2())}, 3, z2()), dowling::DomainError);
  EXPECT_THROW(dowling::nested_to_dowling_tree({el("0|1 2|3"), el("0|1 2~1|3")}, 3, z2()), dowling::StructureError);
  EXPECT_THROW(dowling::nested_to_dowling_tree({el("0 1|2|3"), el("0 2|1|3")}, 3, z2()), dowling::StructureError);
  EXPECT_THROW(dowling::nested_to_dowling_tree({el("0|1 2|3"), el("0 1 3|2")}, 3, z2()), dowling::StructureError);
  EXPECT_THROW(dowling::nested_to_dowling_tree({el("0 1 2|3")}, 3, dowling::cyclic_group(1)), dowling::DomainError);
  EXPECT_THROW(dowling::nested_to_dowling_tree({el("0|1 2 3")}, 2, z2()), dowling::IncompatibleError);
}

TEST(Trees, ConditionNMatchesNestedness) {
  for (int n = 2; n <= 4; ++n) {
    const auto q0 = dowling::build_q0(n, z2());
    const auto ig = dowling::compute_IG(q0);
    std::vector<std::size_t> cur;
    std::size_t checked = 0;
    std::function<void(std::size_t)> rec = [&](std::size_t from) {
      if (!cur.empty()) {
        std::vector<DowlingElement> x;
        for (std::size_t i : cur) x.push_back(q0.element(i));
        EXPECT_EQ(dowling::satisfies_condition_n(x, z2()), dowling::is_nested(q0.poset(), ig, cur));
        ++checked;
      }
      if (cur.size() == static_cast<std::size_t>(n)) return;
      for (std::size_t i = from; i < ig.members.size(); ++i) {
        cur.push_back(ig.members[i]);
        rec(i + 1);
        cur.pop_back();
      }
    };
    rec(0);
    EXPECT_GT(checked, 0u);
  }
}

TEST(Trees, SymmetricBijection) {
  for (const auto& s : scales()) {
    const auto q0 = dowling::build_q0(s.n, *s.g);
    auto faces = nested_sets(q0, dowling::compute_IG(q0), false);
    for (const auto& x : faces) {
      const std::vector<DowlingElement> v(x.begin(), x.end());
      const GTree t = dowling::nested_to_tree(v, s.n, *s.g);
      ASSERT_TRUE(dowling::is_symmetric_tree(t, *s.g));
      EXPECT_EQ(as_set(dowling::tree_to_nested(t, *s.g)), x);
    }
    faces.insert(std::set<DowlingElement>{});
    const auto trees = dowling::enumerate_trees(s.n, *s.g, false);
    std::set<std::set<DowlingElement>> from_trees;
    for (const auto& t : trees) {
      ASSERT_TRUE(dowling::is_symmetric_tree(t, *s.g));
      const auto x = dowling::tree_to_nested(t, *s.g);
      EXPECT_TRUE(from_trees.insert(as_set(x)).second) << "two trees share a nested set";
      EXPECT_EQ(dowling::nested_to_tree(x, s.n, *s.g), t);
    }
    EXPECT_EQ(from_trees, faces) << "n=" << s.n << " k=" << s.g->order();
  }
}

TEST(Trees, DowlingBijection) {
  for (const auto& s : scales()) {
    const auto q = dowling::build_dowling_lattice(s.n, *s.g);
    auto faces = nested_sets(q, dowling::compute_JG(q), true);
    for (const auto& x : faces) {
      const std::vector<DowlingElement> v(x.begin(), x.end());
      const GTree t = dowling::nested_to_dowling_tree(v, s.n, *s.g);
      ASSERT_TRUE(dowling::validate(t, *s.g).empty());
      EXPECT_EQ(as_set(dowling::tree_to_nested(t, *s.g)), x);
    }
    faces.insert(std::set<DowlingElement>{});
    const auto trees = dowling::enumerate_trees(s.n, *s.g, true);
    std::set<std::set<DowlingElement>> from_trees;
    for (const auto& t : trees) {
      const auto x = dowling::tree_to_nested(t, *s.g);
      EXPECT_TRUE(from_trees.insert(as_set(x)).second);
      EXPECT_EQ(dowling::nested_to_dowling_tree(x, s.n, *s.g), t);
    }
    EXPECT_EQ(from_trees, faces) << "n=" << s.n << " k=" << s.g->order();
  }
}

TEST(Trees, ContractionDeletesOneElement) {
  for (const auto& s : scales()) {
    if (s.n > 3) continue;
    for (bool dow : {false, true}) {
      for (const auto& t : dowling::enumerate_trees(s.n, *s.g, dow)) {
        const auto x = as_set(dowling::tree_to_nested(t, *s.g));
        for (int v : t.inner_vertices()) {
          const auto sigma = dowling::sigma_of_edge(t, *s.g, v);
          const GTree c = dowling::contract_orbit(t, *s.g, v);
          ASSERT_TRUE(dowling::validate(c, *s.g).empty());
          auto expected = x;
          expected.erase(sigma);
          EXPECT_EQ(as_set(dowling::tree_to_nested(c, *s.g)), expected);
          EXPECT_EQ(t.zero[static_cast<std::size_t>(v)] != 0, !sigma.trivial_zero_block());
        }
      }
    }
  }
}

TEST(Trees, OrbitsOfIncomparableEdgesAreDisjoint) {
  for (const auto& s : scales()) {
    for (const auto& t : dowling::enumerate_trees(s.n, *s.g, false)) {
      const auto lam = t.leaf_sets();
      const auto inner = t.inner_vertices();
      for (int a : inner)
        for (int b : inner) {
          const auto sa = dowling::sigma_of_edge(t, *s.g, a), sb = dowling::sigma_of_edge(t, *s.g, b);
          if (sa == sb || dowling::leq(sa, sb, *s.g) || dowling::leq(sb, sa, *s.g)) continue;
          LeafSet oa = 0, ob = 0;
          for (const auto& act : t.action) {
            oa |= lam[static_cast<std::size_t>(act[static_cast<std::size_t>(a)])];
            ob |= lam[static_cast<std::size_t>(act[static_cast<std::size_t>(b)])];
          }
          EXPECT_EQ(oa & ob, 0u);
        }
    }
  }
}

TEST(Trees, Complexes) {
  const auto t2 = dowling::build_tree_complex(2, z2());
  EXPECT_EQ(t2.f_vector(), std::vector<std::size_t>{2});
  EXPECT_TRUE(dowling::reduced_homology(t2).is_wedge_of_spheres(0, 1));

  const auto t3 = dowling::build_tree_complex(3, z2());
  EXPECT_EQ(t3.f_vector(), (std::vector<std::size_t>{10, 12}));
  EXPECT_TRUE(t3.is_pure());
  EXPECT_TRUE(dowling::reduced_homology(t3).is_wedge_of_spheres(1, 3));

  const auto d3 = dowling::build_dowling_tree_complex(3, z2());
  EXPECT_EQ(d3.f_vector(), (std::vector<std::size_t>{16, 30}));
  EXPECT_TRUE(d3.is_pure());
  EXPECT_TRUE(dowling::reduced_homology(d3).is_wedge_of_spheres(1, 15));

  for (const auto& s : scales()) {
    const auto sym = dowling::build_tree_complex(s.n, *s.g);
    const auto dow = dowling::build_dowling_tree_complex(s.n, *s.g);
    EXPECT_TRUE(dowling::same_complex(sym, dowling::complex_from_trees(dowling::enumerate_trees(s.n, *s.g, false), *s.g)));
    EXPECT_TRUE(dowling::same_complex(dow, dowling::complex_from_trees(dowling::enumerate_trees(s.n, *s.g, true), *s.g)));
    EXPECT_TRUE(dowling::is_subcomplex(sym, dow));
    EXPECT_EQ(sym.dimension(), s.n - 2);
    EXPECT_EQ(dow.dimension(), s.n - 2);
    EXPECT_TRUE(sym.is_pure());
    EXPECT_TRUE(dow.is_pure());
    for (const auto& f : sym.facets()) EXPECT_EQ(f.size(), static_cast<std::size_t>(s.n - 1));
  }
}
