// Copyright 2026 The antimatch Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include <algorithm>
#include <random>
#include <set>

#include <gtest/gtest.h>

#include "fixtures.hpp"

namespace antimatch {
namespace {

using testing::example1_graph;
using testing::example2_graph;
using testing::ids;

// Edge subsets whose endpoints are all distinct, by brute force over 2^|E|.
std::size_t count_matchings_brute(const BipartiteGraph& g) {
  const std::size_t m = g.edge_count();
  std::size_t count = 0;
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << m); ++s) {
    std::set<std::size_t> left, right;
    bool ok = true;
    for (std::size_t k = 0; k < m && ok; ++k) {
      if (!((s >> k) & 1U)) continue;
      ok = left.insert(g.edges()[k].left).second && right.insert(g.edges()[k].right).second;
    }
    count += ok ? 1 : 0;
  }
  return count;
}

TEST(Neighbors, FollowEdgeOrder) {
  EXPECT_EQ(neighbors(example1_graph(), "v1"), ids({"u1", "u2", "u3"}));
  EXPECT_EQ(neighbors(example2_graph(), "u1"), ids({"v1", "v2"}));
  BipartiteGraph empty({"a"}, {"b"}, {});
  EXPECT_TRUE(neighbors(empty, "a").empty());
  EXPECT_TRUE(neighbors(empty, "b").empty());
}

TEST(Neighbors, UnknownVertex) {
  EXPECT_THROW(neighbors(example1_graph(), "w9"), InputError);
  try {
    neighbors(example1_graph(), "w9");
  } catch (const InputError& e) {
    EXPECT_NE(std::string(e.what()).find("unknown vertex"), std::string::npos);
  }
}

TEST(IncidentEdges, Basic) {
  const auto g1 = example1_graph();
  EXPECT_EQ(incident_edges(g1, "v3"), std::vector<EdgeId>{g1.edge_between("u2", "v3")});
  const auto g2 = example2_graph();
  EXPECT_EQ(incident_edges(g2, "v1"), (std::vector<EdgeId>{0, 2, 3}));
  BipartiteGraph isolated({"a", "b"}, {"c"}, {{"a", "c"}});
  EXPECT_TRUE(incident_edges(isolated, "b").empty());
  EXPECT_THROW(incident_edges(g1, "nope"), InputError);
}

TEST(Restrict, KeepsEdgeIds) {
  const auto g = example1_graph();
  const auto sub = restrict(g, {"u1", "u2", "v1", "v2", "v3"});
  ASSERT_EQ(sub.edge_count(), 4u);
  std::vector<std::pair<std::string, std::string>> pairs;
  for (const Edge& e : sub.edges()) pairs.emplace_back(sub.left_id(e.left), sub.right_id(e.right));
  EXPECT_EQ(pairs, (std::vector<std::pair<std::string, std::string>>{
                       {"u1", "v1"}, {"u1", "v2"}, {"u2", "v1"}, {"u2", "v3"}}));
  EXPECT_EQ(sub.edge_between("u2", "v3"), g.edge_between("u2", "v3"));
  EXPECT_FALSE(sub.has_edge(g.edge_between("u3", "v1")));
}

TEST(Restrict, IdentityAndEmpty) {
  const auto g = example1_graph();
  EXPECT_EQ(restrict(g, {"u1", "u2", "u3", "v1", "v2", "v3"}), g);
  const auto none = restrict(g, std::span<const std::string>{});
  EXPECT_EQ(none.left_count(), 0u);
  EXPECT_EQ(none.right_count(), 0u);
  EXPECT_EQ(none.edge_count(), 0u);
  EXPECT_THROW(restrict(g, {"u1", "x"}), InputError);
}

TEST(IsMatching, Examples) {
  const auto g = example1_graph();
  EXPECT_TRUE(is_matching(g, matching_from_pairs(g, {{"u1", "v2"}, {"u2", "v3"}, {"u3", "v1"}})));
  EXPECT_TRUE(is_matching(g, Matching{}));
  EXPECT_FALSE(is_matching(g, matching_from_pairs(g, {{"u1", "v1"}, {"u2", "v1"}})));
  EXPECT_THROW(is_matching(g, Matching({42})), InputError);
}

TEST(Components, EqualMatchingsGiveNothing) {
  const auto g = example2_graph();
  const auto m = matching_from_pairs(g, {{"u1", "v2"}, {"u3", "v1"}});
  EXPECT_TRUE(symmetric_difference_components(g, m, m).empty());
}

TEST(Components, ThreeEdgePath) {
  const auto g = example2_graph();
  const auto m1 = matching_from_pairs(g, {{"u1", "v1"}});
  const auto m2 = matching_from_pairs(g, {{"u1", "v2"}, {"u3", "v1"}});
  const auto parts = symmetric_difference_components(g, m1, m2);
  ASSERT_EQ(parts.size(), 1u);
  EXPECT_EQ(parts[0].shape, ComponentShape::path);
  EXPECT_EQ(parts[0].edges.size(), 3u);
  auto ends = parts[0].endpoints;
  std::sort(ends.begin(), ends.end());
  EXPECT_EQ(ends, ids({"u3", "v2"}));
}

TEST(Components, SingleEdge) {
  const auto g = example2_graph();
  const auto parts = symmetric_difference_components(g, matching_from_pairs(g, {{"u1", "v1"}}), {});
  ASSERT_EQ(parts.size(), 1u);
  EXPECT_EQ(parts[0].shape, ComponentShape::path);
  EXPECT_EQ(parts[0].edges.size(), 1u);
}

TEST(Components, EvenCycle) {
  BipartiteGraph g({"a", "b"}, {"x", "y"}, {{"a", "x"}, {"a", "y"}, {"b", "x"}, {"b", "y"}});
  const auto parts = symmetric_difference_components(g, matching_from_pairs(g, {{"a", "x"}, {"b", "y"}}),
                                                     matching_from_pairs(g, {{"a", "y"}, {"b", "x"}}));
  ASSERT_EQ(parts.size(), 1u);
  EXPECT_EQ(parts[0].shape, ComponentShape::cycle);
  EXPECT_TRUE(parts[0].endpoints.empty());
}

TEST(Components, RejectsNonMatching) {
  const auto g = example2_graph();
  const auto bad = matching_from_pairs(g, {{"u1", "v1"}, {"u2", "v1"}});
  EXPECT_THROW(symmetric_difference_components(g, bad, {}), InputError);
}

TEST(EnumerateMatchings, SmallGraphs) {
  EXPECT_EQ(enumerate_matchings(BipartiteGraph({}, {}, {})), std::vector<Matching>{Matching{}});
  BipartiteGraph one({"u"}, {"v"}, {{"u", "v"}});
  EXPECT_EQ(enumerate_matchings(one), (std::vector<Matching>{Matching{}, Matching({0})}));
}

TEST(EnumerateMatchings, Example2) {
  // Empty, the four single edges, {(u1,v2),(u2,v1)} and {(u1,v2),(u3,v1)}.
  const auto g = example2_graph();
  const auto all = enumerate_matchings(g);
  EXPECT_EQ(all.size(), count_matchings_brute(g));
  EXPECT_EQ(all.size(), 7u);
  std::set<std::vector<EdgeId>> distinct;
  for (const auto& m : all) distinct.insert(m.edges);
  EXPECT_EQ(distinct.size(), all.size());
}

TEST(EnumerateMatchings, NoDuplicatesAndAllValid) {
  std::mt19937_64 rng(7);
  for (int round = 0; round < 30; ++round) {
    std::vector<std::pair<std::string, std::string>> edges;
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j)
        if (rng() % 2) edges.emplace_back("u" + std::to_string(i), "v" + std::to_string(j));
    BipartiteGraph g({"u0", "u1", "u2", "u3"}, {"v0", "v1", "v2", "v3"}, edges);
    const auto all = enumerate_matchings(g);
    std::set<std::vector<EdgeId>> seen;
    for (const auto& m : all) {
      EXPECT_TRUE(is_matching(g, m));
      EXPECT_TRUE(seen.insert(m.edges).second);
    }
    EXPECT_EQ(all.size(), count_matchings_brute(g));

    std::shuffle(edges.begin(), edges.end(), rng);
    const BipartiteGraph shuffled(g.left_ids(), g.right_ids(), edges);
    EXPECT_EQ(enumerate_matchings(shuffled).size(), all.size());
  }
}

TEST(EnumerateMatchings, OracleLimit) {
  std::vector<std::pair<std::string, std::string>> edges;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) edges.emplace_back("u" + std::to_string(i), "v" + std::to_string(j));
  BipartiteGraph g({"u0", "u1", "u2"}, {"v0", "v1", "v2"}, edges);
  try {
    enumerate_matchings(g, 8);
    FAIL() << "expected a limit error";
  } catch (const LimitError& e) {
    EXPECT_NE(std::string(e.what()).find("oracle limit"), std::string::npos);
  }
  EXPECT_EQ(enumerate_matchings(g, 9).size(), 34u);  // 1 + 9 + 18 + 6
}

TEST(Graph, RejectsBadInput) {
  EXPECT_THROW(BipartiteGraph({"a", "a"}, {"b"}, {}), InputError);
  EXPECT_THROW(BipartiteGraph({"a"}, {"a"}, {}), InputError);
  EXPECT_THROW(BipartiteGraph({"a"}, {"b"}, {{"a", "b"}, {"a", "b"}}), InputError);
  EXPECT_THROW(BipartiteGraph({"a"}, {"b"}, {{"b", "a"}}), InputError);
}

}  // namespace
}  // namespace antimatch
