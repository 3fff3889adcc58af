#include <gtest/gtest.h>

#include <random>

#include "dowling/errors.hpp"
#include "dowling/lattice.hpp"
#include "dowling/poset.hpp"
#include "dowling/simplicial.hpp"
#include "oracles.hpp"

using dowling::Poset;

TEST(Posets, FromRelationRejectsNonOrders) {
  EXPECT_THROW(Poset::from_relation({"a", "b"}, [](std::size_t, std::size_t) { return true; }), dowling::DomainError);
  EXPECT_THROW(Poset::from_relation({"a"}, [](std::size_t, std::size_t) { return false; }), dowling::DomainError);
  // a<b, b<c but not a<c.
  EXPECT_THROW(Poset::from_relation({"a", "b", "c"},
                                    [](std::size_t x, std::size_t y) { return x == y || y == x + 1; }),
               dowling::DomainError);
}

TEST(Posets, BooleanLatticeShape) {
  EXPECT_EQ(dowling::boolean_lattice(0).size(), 1u);
  const auto b2 = dowling::boolean_lattice(2);
  EXPECT_EQ(b2.size(), 4u);
  EXPECT_EQ(b2.hasse().size(), 4u);
  EXPECT_TRUE(b2.is_lattice());
  const auto b3 = dowling::boolean_lattice(3);
  EXPECT_EQ(b3.size(), 8u);
  EXPECT_EQ(b3.hasse().size(), 12u);
  EXPECT_EQ(*b3.bottom(), 0u);
  EXPECT_EQ(*b3.top(), 7u);
}

TEST(Posets, ProductOfChainsIsDiamond) {
  const auto d = dowling::product(dowling::chain_poset(2), dowling::chain_poset(2));
  EXPECT_TRUE(dowling::is_isomorphic(d, dowling::boolean_lattice(2)).has_value());
  const auto p = dowling::build_partition_lattice(3).poset;
  EXPECT_TRUE(dowling::is_isomorphic(dowling::product(p, dowling::chain_poset(1)), p).has_value());
  EXPECT_EQ(dowling::product(dowling::build_partition_lattice(2).poset, p).size(), 10u);
}

TEST(Posets, IntervalsAndErrors) {
  const auto b3 = dowling::boolean_lattice(3);
  EXPECT_EQ(dowling::interval(b3, 5, 5).poset.size(), 1u);
  EXPECT_EQ(dowling::interval(b3, 1, 7).poset.size(), 4u);
  EXPECT_THROW(dowling::interval(b3, 1, 2), dowling::DomainError);
}

TEST(Posets, JoinsAndMeetsInPartitionLattice) {
  const auto pl = dowling::build_partition_lattice(3);
  const auto& p = pl.poset;
  const auto a = *pl.index_of(dowling::SetPartition::from_blocks(1, 3, {{1, 2}, {3}}));
  const auto b = *pl.index_of(dowling::SetPartition::from_blocks(1, 3, {{1}, {2, 3}}));
  EXPECT_EQ(*p.join(a, b), *p.top());
  EXPECT_EQ(*p.meet(a, b), *p.bottom());
  EXPECT_TRUE(p.is_lattice());
}

TEST(Posets, IsomorphismSmallCases) {
  const auto c2 = dowling::chain_poset(2);
  const auto w = dowling::is_isomorphic(c2, c2);
  ASSERT_TRUE(w.has_value());
  EXPECT_TRUE(dowling::verify_isomorphism(c2, c2, *w));
  EXPECT_FALSE(dowling::is_isomorphic(c2, dowling::antichain_poset(2)).has_value());
}

// Random posets on at most 8 elements: the pruned search agrees with the
// brute-force bijection search.
TEST(Posets, IsomorphismAgreesWithBruteForce) {
  std::mt19937 rng(20261015);
  auto random_poset = [&](std::size_t n, double density) {
    std::bernoulli_distribution coin(density);
    std::vector<std::vector<char>> rel(n, std::vector<char>(n, 0));
    for (std::size_t i = 0; i < n; ++i) {
      rel[i][i] = 1;
      for (std::size_t j = i + 1; j < n; ++j) rel[i][j] = coin(rng);
    }
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
          if (rel[i][k] && rel[k][j]) rel[i][j] = 1;
    // Random relabelling so the linear extension is hidden.
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<std::string> labels(n, "x");
    return Poset::from_relation(labels, [=](std::size_t a, std::size_t b) { return rel[perm[a]][perm[b]] != 0; });
  };
  int positives = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 1 + trial % 8;
    const double density = 0.2 + 0.1 * (trial % 5);
    const Poset p = random_poset(n, density);
    const Poset q = trial % 3 == 0 ? p : random_poset(n, density);
    const bool expected = oracle::brute_force_isomorphic(p, q);
    const auto w = dowling::is_isomorphic(p, q);
    ASSERT_EQ(w.has_value(), expected) << "trial " << trial;
    if (w) {
      EXPECT_TRUE(dowling::verify_isomorphism(p, q, *w));
      ++positives;
    }
  }
  EXPECT_GT(positives, 100);
}

TEST(Posets, OrderComplexExamples) {
  // Three elements 0̂ < x < 1̂.
  const auto chain3 = dowling::order_complex(dowling::chain_poset(3), true);
  EXPECT_EQ(chain3.f_vector(), (std::vector<std::size_t>{1}));

  const auto hex = dowling::order_complex(dowling::boolean_lattice(3), true);
  EXPECT_EQ(hex.f_vector(), (std::vector<std::size_t>{6, 6}));
  const auto h = dowling::reduced_homology(hex);
  EXPECT_TRUE(h.is_wedge_of_spheres(1, 1));
  EXPECT_TRUE(dowling::is_flag(hex));

  const auto g = dowling::cyclic_group(2);
  const auto q2 = dowling::build_dowling_lattice(2, g);
  const auto k = dowling::order_complex(q2.poset(), true);
  EXPECT_EQ(k.f_vector(), (std::vector<std::size_t>{4}));
  EXPECT_EQ(dowling::reduced_homology(k).betti(0), 3u);
}

TEST(Posets, OrderComplexWithBottomIsACone) {
  const auto g = dowling::cyclic_group(2);
  for (const Poset& p : {dowling::boolean_lattice(3), dowling::build_partition_lattice(4).poset,
                         dowling::build_q0(3, g).poset()}) {
    const auto k = dowling::order_complex(p, false);
    const auto f = k.f_vector();
    long euler = 0;
    for (std::size_t i = 0; i < f.size(); ++i) euler += (i % 2 == 0 ? 1 : -1) * static_cast<long>(f[i]);
    EXPECT_EQ(euler, 1);
    EXPECT_TRUE(dowling::is_flag(k));
    // Facets are maximal chains: each facet is a chain that cannot be refined.
    for (const auto& facet : k.facets()) {
      std::vector<std::size_t> elems;
      for (const auto& l : k.face_labels(facet))
        elems.push_back(static_cast<std::size_t>(std::find(p.labels().begin(), p.labels().end(), l) - p.labels().begin()));
      std::sort(elems.begin(), elems.end(), [&](std::size_t a, std::size_t b) { return p.less(a, b); });
      for (std::size_t i = 0; i + 1 < elems.size(); ++i) {
        const auto& covers = p.upper_covers(elems[i]);
        EXPECT_NE(std::find(covers.begin(), covers.end(), elems[i + 1]), covers.end());
      }
      EXPECT_TRUE(p.lower_covers(elems.front()).empty());
      EXPECT_TRUE(p.upper_covers(elems.back()).empty());
    }
  }
}
