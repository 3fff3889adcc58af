#include <gtest/gtest.h>

#include <bit>
#include <functional>
#include <map>
#include <numeric>

#include "dowling/errors.hpp"
#include "dowling/filtration.hpp"
#include "dowling/set_partition.hpp"
#include "dowling/trees.hpp"
#include "oracles.hpp"

using dowling::BigInt;
using dowling::DowlingElement;
using dowling::FiltrationContext;
using dowling::GroupTable;

namespace {

const GroupTable& z2() {
  static const GroupTable g = dowling::cyclic_group(2);
  return g;
}

const FiltrationContext& ctx(int n, int k) {
  static std::map<std::pair<int, int>, FiltrationContext> cache;
  auto it = cache.find({n, k});
  if (it == cache.end()) it = cache.emplace(std::pair{n, k}, dowling::make_filtration_context(n, dowling::cyclic_group(k))).first;
  return it->second;
}

std::vector<DowlingElement> elements(const FiltrationContext& c, const dowling::Face& f) {
  std::vector<DowlingElement> out;
  for (int v : f) out.push_back(c.element_of(v));
  return out;
}

}  // namespace

TEST(Filtration, QValues) {
  const auto a = dowling::make_chain(3, 2, {{0, 1}});
  EXPECT_EQ(a.gaps(), (std::vector<int>{1, 2}));
  EXPECT_EQ(a.factors(), (std::vector<BigInt>{1, 1}));
  EXPECT_EQ(a.product(), 1);

  const auto b = dowling::make_chain(4, 2, {{0, 1}});
  EXPECT_EQ(b.gaps(), (std::vector<int>{1, 3}));
  EXPECT_EQ(b.factors(), (std::vector<BigInt>{1, 3}));
  EXPECT_EQ(b.product(), 3);

  const auto c = dowling::make_chain(3, 2, {{0, 1}, {0, 1, 2}});
  EXPECT_EQ(c.gaps(), (std::vector<int>{1, 1, 1}));
  EXPECT_EQ(c.product(), 1);

  EXPECT_THROW(dowling::make_chain(3, 2, {{0, 1}, {0, 2}}), dowling::DomainError);
  EXPECT_THROW(dowling::make_chain(3, 2, {{0, 1, 2, 3}}), dowling::DomainError);
  EXPECT_THROW(dowling::make_chain(3, 2, {{1, 2}}), dowling::DomainError);
  EXPECT_THROW(dowling::make_chain(3, 2, {{0}}), dowling::DomainError);
}

TEST(Filtration, Classify) {
  const auto& c = ctx(3, 2);
  const auto& q = c.lattice;
  EXPECT_EQ(dowling::classify(c, {q.parse("0|1 2|3")}).type, dowling::SimplexType::Type1);
  const auto t0 = dowling::classify(c, {q.parse("0 1 2|3")});
  EXPECT_EQ(t0.type, dowling::SimplexType::Type0);
  EXPECT_EQ(t0.chain.length(), 1);
  const auto mixed = dowling::classify(c, {q.parse("0|1 2~1|3"), q.parse("0 1 2|3")});
  EXPECT_EQ(mixed.type, dowling::SimplexType::Mixed);
  EXPECT_EQ(mixed.type0_part, std::vector<DowlingElement>{q.parse("0 1 2|3")});
  EXPECT_THROW(dowling::classify(c, {q.parse("0|1 2|3"), q.parse("0|1 2~1|3")}), dowling::DomainError);
  EXPECT_THROW(dowling::classify(c, {dowling::dowling_top(3, z2())}), dowling::DomainError);
  EXPECT_THROW(dowling::classify(c, {}), dowling::DomainError);
}

TEST(Filtration, KmEndpoints) {
  for (auto [n, k] : {std::pair{3, 2}, {4, 2}, {3, 3}}) {
    const auto& c = ctx(n, k);
    const auto g = dowling::cyclic_group(k);
    EXPECT_TRUE(dowling::same_complex(dowling::build_Km(c, 0), dowling::build_tree_complex(n, g)));
    EXPECT_TRUE(dowling::same_complex(dowling::build_Km(c, n - 1), c.complex));
    for (int m = 0; m + 1 <= n - 1; ++m) EXPECT_TRUE(dowling::is_subcomplex(dowling::build_Km(c, m), dowling::build_Km(c, m + 1)));
    EXPECT_THROW(dowling::build_Km(c, n), dowling::DomainError);
    EXPECT_THROW(dowling::build_Km(c, -1), dowling::DomainError);
  }
  EXPECT_EQ(dowling::build_Km(3, z2(), 0).f_vector(), (std::vector<std::size_t>{10, 12}));
  EXPECT_EQ(dowling::build_Km(3, z2(), 2).f_vector(), (std::vector<std::size_t>{16, 30}));
}

TEST(Filtration, LinkExamples) {
  const auto& c = ctx(3, 2);
  const auto& q = c.lattice;
  const auto one = dowling::link_in_Km(c, {q.parse("0 1|2|3")});
  EXPECT_TRUE(dowling::reduced_homology(one).is_wedge_of_spheres(0, 1));
  const auto two = dowling::link_in_Km(c, {q.parse("0 1|2|3"), q.parse("0 1 2|3")});
  EXPECT_TRUE(dowling::reduced_homology(two).is_wedge_of_spheres(0, 1));
  EXPECT_THROW(dowling::link_in_Km(c, {q.parse("0|1 2|3")}), dowling::DomainError);
  EXPECT_THROW(dowling::link_in_Km(c, {q.parse("0|1 2|3"), q.parse("0 1 2|3")}), dowling::DomainError);

  const auto d = dowling::join_decomposition(c, {q.parse("0 1|2|3")});
  EXPECT_TRUE(d.isomorphic);
  EXPECT_EQ(d.model.f_vector(), std::vector<std::size_t>{2});

  const auto& c4 = ctx(4, 2);
  const auto d4 = dowling::join_decomposition(c4, {c4.lattice.parse("0 1 2|3|4")});
  EXPECT_TRUE(d4.isomorphic);
  EXPECT_EQ(d4.link.f_vector(), (std::vector<std::size_t>{4, 4}));
  EXPECT_TRUE(dowling::reduced_homology(d4.link).is_wedge_of_spheres(1, 1));
}

TEST(Filtration, TypeZeroLinks) {
  for (auto [n, k] : {std::pair{3, 2}, {4, 2}, {3, 3}}) {
    const auto& c = ctx(n, k);
    std::size_t seen = 0;
    for (const auto& f : dowling::type0_simplices(c)) {
      const auto x = elements(c, f);
      const auto d = dowling::join_decomposition(c, x);
      const int m = d.chain.length();
      const auto gaps = d.chain.gaps();
      EXPECT_EQ(std::accumulate(gaps.begin(), gaps.end(), 0), n);
      EXPECT_EQ(static_cast<int>(gaps.size()), m + 1);
      const auto h = dowling::reduced_homology(d.link);
      const auto expected = static_cast<std::uint64_t>(d.chain.product());
      EXPECT_TRUE(h.is_wedge_of_spheres(n - 3, expected)) << d.chain.to_string();
      EXPECT_TRUE(d.isomorphic) << d.chain.to_string();
      EXPECT_TRUE(d.boolean_factor_homology) << d.chain.to_string();
      if (m >= 1) EXPECT_TRUE(dowling::is_subcomplex(d.link, dowling::build_Km(c, m - 1))) << d.chain.to_string();
      ++seen;
    }
    // Chains of proper nonempty subsets of [n].
    EXPECT_EQ(seen, n == 3 ? 12u : 74u);
  }
}

TEST(Filtration, ChainSum) {
  EXPECT_EQ(dowling::chain_sum(3, 2).lhs, 12);
  EXPECT_EQ(dowling::chain_sum(3, 2).rhs, 12);
  EXPECT_EQ(dowling::chain_sum(2, 2).lhs, 2);
  EXPECT_EQ(dowling::chain_sum(2, 2).rhs, 2);
  EXPECT_EQ(dowling::chain_sum(4, 2).lhs, 90);
  EXPECT_EQ(dowling::chain_sum(4, 2).rhs, 90);
  for (int n = 2; n <= 7; ++n)
    for (int k = 1; k <= 5; ++k) {
      const auto s = dowling::chain_sum(n, k);
      EXPECT_EQ(s.lhs, s.rhs) << n << " " << k;
      if (n <= 6) EXPECT_EQ(s.rhs, oracle::chain_sum(n, k)) << n << " " << k;
    }
  EXPECT_THROW(dowling::chain_sum(1, 2), dowling::DomainError);
}

TEST(Filtration, Numerology) {
  const auto r22 = dowling::numerology_report(2, 2);
  EXPECT_EQ(r22.lhs, 12);
  EXPECT_EQ(r22.rhs_literal, 4);
  EXPECT_FALSE(r22.equal);
  const auto r21 = dowling::numerology_report(2, 1);
  EXPECT_EQ(r21.lhs, 6);
  EXPECT_EQ(r21.rhs_literal, 0);

  const auto r32 = dowling::numerology_report(3, 2);
  std::map<std::vector<int>, BigInt> terms;
  for (const auto& t : r32.per_partition_terms) terms[t.shape] = t.term;
  EXPECT_EQ(terms.at({3}), 15);
  EXPECT_EQ(terms.at({2, 1}), 3);
  EXPECT_EQ(terms.at({1, 1, 1}), 1);

  // Against a sum over set partitions.
  for (int n = 2; n <= 6; ++n)
    for (int k = 1; k <= 4; ++k) {
      BigInt rhs = 0;
      for (const auto& p : dowling::all_set_partitions(1, n)) {
        const auto sizes = p.block_sizes();
        BigInt term = 1;
        for (int j = 1; j <= n; ++j)
          for (int s : sizes)
            if (s >= j) term *= BigInt(j * k - 1);
        rhs += term;
      }
      const auto r = dowling::numerology_report(n, k);
      EXPECT_EQ(r.rhs_literal, rhs) << n << " " << k;
      BigInt count = 0;
      for (const auto& t : r.per_partition_terms) count += t.multiplicity;
      EXPECT_EQ(count, dowling::bell_number(n)) << n;
      EXPECT_EQ(r.equal, r.lhs == r.rhs_literal);
    }
}

TEST(Filtration, CohenMacaulayLinks) {
  EXPECT_TRUE(dowling::cm_link_check(dowling::simplex_boundary({"a", "b", "c", "d"})));
  const auto bad = dowling::SimplicialComplex::from_facets({{"a", "b"}, {"c", "d"}, {"d", "e"}, {"c", "e"}});
  EXPECT_FALSE(dowling::cm_link_check(bad));
  const auto impure = dowling::SimplicialComplex::from_facets({{"a", "b", "c"}, {"c", "d"}});
  EXPECT_THROW(dowling::cm_link_check(impure), dowling::DomainError);

  EXPECT_TRUE(dowling::cm_link_check(ctx(3, 2).complex));
  for (int n : {3, 4}) {
    const auto& c = ctx(n, 2);
    for (int m = 0; m <= n - 1; ++m) EXPECT_TRUE(dowling::cm_link_check(dowling::build_Km(c, m))) << n << " " << m;
  }
}
