#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>

#include "dowling/errors.hpp"
#include "dowling/io.hpp"
#include "dowling/lattice.hpp"
#include "dowling/nested.hpp"
#include "dowling/poset.hpp"
#include "dowling/trees.hpp"
#include "oracles.hpp"

using dowling::Json;

TEST(Io, PosetJson) {
  const auto p = dowling::boolean_lattice(2);
  const auto j = dowling::poset_to_json(p);
  EXPECT_EQ(j["elements"].size(), 4u);
  EXPECT_EQ(j["hasse"].size(), 4u);
  EXPECT_EQ(j["leq_pairs"].size(), 9u);
  EXPECT_EQ(j["bottom"], 0);
  EXPECT_EQ(j["top"], 3);

  const auto q = dowling::build_dowling_lattice(3, dowling::cyclic_group(2));
  const auto jq = dowling::poset_to_json(q.poset());
  EXPECT_EQ(jq["elements"].size(), 24u);
  EXPECT_EQ(jq["elements"][0], "0|1|2|3");
}

TEST(Io, BuildingSetJson) {
  const auto q = dowling::build_dowling_lattice(2, dowling::cyclic_group(2));
  const auto b = dowling::compute_JG(q);
  const auto j = dowling::building_set_to_json(q.poset(), b);
  ASSERT_EQ(j["members"].size(), b.members.size());
  ASSERT_EQ(j["type"].size(), b.members.size());
}

TEST(Io, HomologyJson) {
  const auto k = dowling::simplex_boundary({"a", "b", "c"});
  const auto j = dowling::homology_to_json(k, dowling::reduced_homology(k));
  EXPECT_EQ(j["f_vector"], Json::parse("[3,3]"));
  EXPECT_EQ(j["reduced_betti"], Json::parse("[0,1]"));
  EXPECT_FALSE(j.contains("reduced_betti_minus_one"));

  const auto e = dowling::SimplicialComplex::empty_complex();
  EXPECT_EQ(dowling::homology_to_json(e, dowling::reduced_homology(e))["reduced_betti_minus_one"], 1);
}

TEST(Io, TreeJsonRoundTrip) {
  const auto g = dowling::cyclic_group(2);
  for (int n = 1; n <= 3; ++n)
    for (bool d : {false, true})
      for (const auto& t : dowling::enumerate_trees(n, g, d)) {
        const auto back = dowling::tree_from_json(Json::parse(dowling::tree_to_json(t).dump()));
        EXPECT_EQ(back, t);
      }
  EXPECT_THROW(dowling::tree_from_json(Json::parse("{\"n\": 2}")), dowling::ParseError);
  EXPECT_THROW(dowling::tree_from_json(Json::parse("[1,2]")), dowling::ParseError);
}

TEST(Io, Dot) {
  const auto g = dowling::cyclic_group(2);
  const auto t = dowling::star_tree(2, g);
  const auto dot = dowling::tree_to_dot(t);
  EXPECT_NE(dot.find("digraph"), std::string::npos);
  EXPECT_NE(dot.find("fillcolor=black"), std::string::npos);
  EXPECT_NE(dot.find("\"2~1\""), std::string::npos);
  const auto k = dowling::simplex_boundary({"a", "b", "c"});
  EXPECT_NE(dowling::complex_to_dot(k).find("--"), std::string::npos);
  EXPECT_NE(dowling::poset_to_dot(dowling::boolean_lattice(2)).find("->"), std::string::npos);
}

TEST(Io, GroupSpecs) {
  EXPECT_EQ(dowling::parse_group_spec("cyclic:3").order(), 3);
  EXPECT_THROW(dowling::parse_group_spec("cyclic:x"), dowling::ParseError);
  EXPECT_THROW(dowling::parse_group_spec("dihedral:3"), dowling::ParseError);
  EXPECT_THROW(dowling::parse_group_spec("table:/nonexistent/file.json"), dowling::ParseError);

  const std::string path = ::testing::TempDir() + "klein.json";
  {
    std::ofstream f(path);
    f << Json(oracle::klein_table()).dump();
  }
  EXPECT_EQ(dowling::parse_group_spec("table:" + path).order(), 4);
  {
    std::ofstream f(path);
    f << "{\"mul\": [[0,1],[1,1]]}";
  }
  EXPECT_ANY_THROW(dowling::parse_group_spec("table:" + path));
  std::remove(path.c_str());

  EXPECT_EQ(dowling::group_from_json(Json::parse("{\"kind\":\"cyclic\",\"m\":5}")).order(), 5);
  EXPECT_EQ(dowling::group_from_json(Json{{"kind", "table"}, {"mul", oracle::s3_table()}}).order(), 6);
  EXPECT_THROW(dowling::group_from_json(Json::parse("{\"kind\":\"free\"}")), dowling::ParseError);
}
