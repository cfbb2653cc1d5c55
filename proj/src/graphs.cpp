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

#include "eqgc/graphs.hpp"

#include <algorithm>
#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>

#include "eqgc/errors.hpp"

namespace eqgc {

namespace {

void check_endpoint(int n, int u) {
  if (u < 0 || u >= n) {
    throw ValidationError("graph: endpoint " + std::to_string(u) + " out of range for n=" +
                          std::to_string(n));
  }
}

}  // namespace

Graph::Graph(int n, const std::vector<Edge>& edges,
             std::optional<std::vector<Edge>> directed_edges)
    : n_(n) {
  if (n < 0) throw ValidationError("graph: negative node count");
  edges_.reserve(edges.size());
  for (auto [u, v] : edges) {
    check_endpoint(n, u);
    check_endpoint(n, v);
    if (u == v) throw ValidationError("graph: self-loop at node " + std::to_string(u));
    edges_.emplace_back(std::min(u, v), std::max(u, v));
  }
  std::sort(edges_.begin(), edges_.end());
  edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
  if (directed_edges) {
    for (auto [u, v] : *directed_edges) {
      check_endpoint(n, u);
      check_endpoint(n, v);
      if (u == v) throw ValidationError("graph: directed self-loop");
    }
    std::sort(directed_edges->begin(), directed_edges->end());
    directed_edges->erase(std::unique(directed_edges->begin(), directed_edges->end()),
                          directed_edges->end());
    directed_ = std::move(directed_edges);
  }
}

std::vector<int> Graph::degrees() const {
  std::vector<int> deg(n_, 0);
  for (auto [u, v] : edges_) {
    ++deg[u];
    ++deg[v];
  }
  return deg;
}

std::vector<std::vector<int>> Graph::neighbors() const {
  std::vector<std::vector<int>> nb(n_);
  for (auto [u, v] : edges_) {
    nb[u].push_back(v);
    nb[v].push_back(u);
  }
  return nb;
}

Permutation::Permutation(std::vector<int> image) : image_(std::move(image)) {
  std::vector<bool> seen(image_.size(), false);
  for (int x : image_) {
    if (x < 0 || x >= static_cast<int>(image_.size()) || seen[x]) {
      throw ValidationError("permutation: image is not a bijection");
    }
    seen[x] = true;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> id(n);
  std::iota(id.begin(), id.end(), 0);
  return Permutation(std::move(id));
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(image_.size());
  for (int i = 0; i < size(); ++i) inv[image_[i]] = i;
  return Permutation(std::move(inv));
}

Graph cycle_graph(int n) {
  if (n < 3) throw ValidationError("cycle_graph: need n >= 3");
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  return Graph(n, edges);
}

Graph path_graph(int n) {
  if (n < 1) throw ValidationError("path_graph: need n >= 1");
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return Graph(n, edges);
}

Graph complete_graph(int n) {
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
  }
  return Graph(n, edges);
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  std::vector<Edge> edges = a.edges();
  for (auto [u, v] : b.edges()) edges.emplace_back(u + a.n(), v + a.n());
  return Graph(a.n() + b.n(), edges);
}

Graph permute_graph(const Graph& g, const Permutation& p) {
  if (p.size() != g.n()) throw ValidationError("permute_graph: permutation size mismatch");
  std::vector<Edge> edges;
  edges.reserve(g.edges().size());
  for (auto [u, v] : g.edges()) edges.emplace_back(p(u), p(v));
  std::optional<std::vector<Edge>> directed;
  if (g.directed_edges()) {
    directed.emplace();
    for (auto [u, v] : *g.directed_edges()) directed->emplace_back(p(u), p(v));
  }
  return Graph(g.n(), edges, std::move(directed));
}

bool are_isomorphic(const Graph& a, const Graph& b) {
  if (a.n() > 8 || b.n() > 8) throw SizeLimitError("are_isomorphic: n > 8");
  if (a.n() != b.n() || a.edges().size() != b.edges().size()) return false;
  auto da = a.degrees();
  auto db = b.degrees();
  std::sort(da.begin(), da.end());
  std::sort(db.begin(), db.end());
  if (da != db) return false;
  std::vector<int> image(a.n());
  std::iota(image.begin(), image.end(), 0);
  do {
    if (permute_graph(a, Permutation(image)).edges() == b.edges()) return true;
  } while (std::next_permutation(image.begin(), image.end()));
  return false;
}

CyclesDataset cycles_dataset() {
  CyclesDataset ds;
  for (int total = 6; total <= 10; ++total) {
    auto& split = total == 8 ? ds.eval : ds.train;
    split.push_back({cycle_graph(total), 1, 1.0, "C" + std::to_string(total)});
    for (int a = 3; a <= total - a; ++a) {
      const int b = total - a;
      split.push_back({disjoint_union(cycle_graph(a), cycle_graph(b)), 0, 1.0,
                       "C" + std::to_string(a) + "+C" + std::to_string(b)});
    }
  }
  // Oversample the smaller class through weights so both classes carry the
  // same total weight in each split.
  for (auto* split : {&ds.train, &ds.eval}) {
    double count[2] = {0.0, 0.0};
    for (const auto& ex : *split) count[ex.label] += 1.0;
    const double target = std::max(count[0], count[1]);
    for (auto& ex : *split) ex.weight = target / count[ex.label];
  }
  return ds;
}

Graph read_graph(std::istream& in) {
  std::string line;
  int n = -1;
  std::vector<Edge> edges;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    if (n < 0) {
      if (line.compare(first, 2, "n=") != 0) {
        throw ValidationError("read_graph: expected 'n=<count>' on line " + std::to_string(lineno));
      }
      std::istringstream ss(line.substr(first + 2));
      if (!(ss >> n) || n < 0) throw ValidationError("read_graph: bad node count");
      continue;
    }
    std::istringstream ss(line);
    int u = 0, v = 0;
    if (!(ss >> u >> v)) {
      throw ValidationError("read_graph: bad edge on line " + std::to_string(lineno));
    }
    edges.emplace_back(u, v);
  }
  if (n < 0) throw ValidationError("read_graph: missing 'n=<count>' header");
  return Graph(n, edges);
}

void write_graph(std::ostream& out, const Graph& g) {
  out << "n=" << g.n() << '\n';
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

std::vector<Permutation> all_permutations(int n) {
  std::vector<int> image(n);
  std::iota(image.begin(), image.end(), 0);
  std::vector<Permutation> out;
  do {
    out.emplace_back(image);
  } while (std::next_permutation(image.begin(), image.end()));
  return out;
}

}  // namespace eqgc
