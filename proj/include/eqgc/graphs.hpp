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

#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace eqgc {

using Edge = std::pair<int, int>;

/// Undirected simple graph on nodes 0..n-1. Edges are stored normalized
/// (first < second), sorted, and deduplicated, so equal edge sets compare
/// equal. `directed_edges` is only used by the directed commutativity checks.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n, const std::vector<Edge>& edges = {},
                 std::optional<std::vector<Edge>> directed_edges = std::nullopt);

  int n() const { return n_; }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::optional<std::vector<Edge>>& directed_edges() const { return directed_; }
  std::vector<int> degrees() const;
  std::vector<std::vector<int>> neighbors() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::optional<std::vector<Edge>> directed_;
};

/// A bijection on {0..n-1}; image()[i] is p(i).
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<int> image);
  static Permutation identity(int n);

  int size() const { return static_cast<int>(image_.size()); }
  int operator()(int i) const { return image_[i]; }
  const std::vector<int>& image() const { return image_; }
  Permutation inverse() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> image_;
};

struct LabeledGraph {
  Graph graph;
  int label = 0;        // 1 = single cycle, 0 = two cycles
  double weight = 1.0;  // oversampling weight, > 0
  std::string name;
};

struct CyclesDataset {
  std::vector<LabeledGraph> train;
  std::vector<LabeledGraph> eval;
};

Graph cycle_graph(int n);
Graph path_graph(int n);
Graph complete_graph(int n);
Graph disjoint_union(const Graph& a, const Graph& b);

/// Edge {u, v} becomes {p(u), p(v)}.
Graph permute_graph(const Graph& g, const Permutation& p);

/// Brute-force search over all n! relabelings; n <= 8.
bool are_isomorphic(const Graph& a, const Graph& b);

/// All one- and two-cycle graphs on 6..10 nodes; total size 8 is held out.
CyclesDataset cycles_dataset();

/// Text format: "n=<count>" then one "u v" line per edge. Blank lines and
/// lines starting with '#' are ignored.
Graph read_graph(std::istream& in);
void write_graph(std::ostream& out, const Graph& g);

std::vector<Permutation> all_permutations(int n);

}  // namespace eqgc
