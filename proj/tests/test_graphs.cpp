// Copyright 2026 The EQGC Authors
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

#include <gtest/gtest.h>

#include <algorithm>
#include <sstream>

#include "eqgc/errors.hpp"
#include "eqgc/graphs.hpp"

using namespace eqgc;

TEST(Graphs, EdgesAreNormalizedAndDeduplicated) {
  const Graph g(3, {{2, 0}, {0, 2}, {1, 0}});
  const std::vector<Edge> want{{0, 1}, {0, 2}};
  EXPECT_EQ(g.edges(), want);
  EXPECT_EQ(g.degrees(), (std::vector<int>{2, 1, 1}));
}

TEST(Graphs, RejectsSelfLoopsAndBadEndpoints) {
  EXPECT_THROW(Graph(2, {{1, 1}}), ValidationError);
  EXPECT_THROW(Graph(2, {{0, 2}}), ValidationError);
  EXPECT_THROW(Graph(2, {{-1, 0}}), ValidationError);
}

TEST(Graphs, CycleShapes) {
  EXPECT_THROW(cycle_graph(2), ValidationError);
  const Graph c5 = cycle_graph(5);
  EXPECT_EQ(c5.edges().size(), 5u);
  for (int d : c5.degrees()) EXPECT_EQ(d, 2);
  EXPECT_EQ(complete_graph(4).edges().size(), 6u);
  EXPECT_EQ(path_graph(4).edges().size(), 3u);
}

TEST(Graphs, PermutationValidation) {
  EXPECT_THROW(Permutation({0, 0}), ValidationError);
  EXPECT_THROW(Permutation({0, 2}), ValidationError);
  const Permutation p({2, 0, 1});
  const Permutation q = p.inverse();
  for (int i = 0; i < 3; ++i) EXPECT_EQ(q(p(i)), i);
}

TEST(Graphs, PermuteGraphIsLiteral) {
  const Graph g = path_graph(3);  // 0-1-2
  const Graph pg = permute_graph(g, Permutation({1, 2, 0}));
  const std::vector<Edge> want{{0, 2}, {1, 2}};
  EXPECT_EQ(pg.edges(), want);
  EXPECT_TRUE(are_isomorphic(g, pg));
}

TEST(Graphs, IsomorphismSeparatesTwoTrianglesFromHexagon) {
  const Graph g1 = disjoint_union(cycle_graph(3), cycle_graph(3));
  const Graph g2 = cycle_graph(6);
  // Same degree sequence, so no cheap invariant separates them.
  EXPECT_EQ(g1.degrees(), g2.degrees());
  EXPECT_FALSE(are_isomorphic(g1, g2));
  EXPECT_THROW(are_isomorphic(cycle_graph(9), cycle_graph(9)), SizeLimitError);
}

TEST(Graphs, CyclesDatasetSplitsAndWeights) {
  const CyclesDataset ds = cycles_dataset();
  ASSERT_EQ(ds.train.size(), 11u);
  ASSERT_EQ(ds.eval.size(), 3u);
  double w[2] = {0, 0};
  int count[2] = {0, 0};
  for (const auto& ex : ds.train) {
    w[ex.label] += ex.weight;
    ++count[ex.label];
    const int n = ex.graph.n();
    EXPECT_TRUE(n != 8);
    EXPECT_EQ(ex.graph.edges().size(), static_cast<std::size_t>(n));
  }
  EXPECT_EQ(count[1], 4);
  EXPECT_EQ(count[0], 7);
  EXPECT_DOUBLE_EQ(w[0], w[1]);
  for (const auto& ex : ds.eval) {
    EXPECT_EQ(ex.graph.n(), 8);
    EXPECT_DOUBLE_EQ(ex.weight, ex.label == 1 ? 2.0 : 1.0);
  }
}

TEST(Graphs, TextRoundTrip) {
  const Graph g = disjoint_union(cycle_graph(3), path_graph(2));
  std::stringstream ss;
  write_graph(ss, g);
  EXPECT_EQ(read_graph(ss), g);
  std::istringstream bad("3\n0 1\n");
  EXPECT_THROW(read_graph(bad), ValidationError);
}

TEST(Graphs, AllPermutationsCount) {
  EXPECT_EQ(all_permutations(4).size(), 24u);
  EXPECT_EQ(all_permutations(1).size(), 1u);
}
