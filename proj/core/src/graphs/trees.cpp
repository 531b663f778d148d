// Copyright 2026 The psgraph Authors
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

#include "psgraph/graphs/trees.hpp"

#include <algorithm>
#include <bit>
#include <set>

#include "psgraph/errors.hpp"
#include "psgraph/graphs/canonical.hpp"

namespace psgraph {

Graph prufer_decode(const std::vector<VertexId>& sequence, std::size_t n) {
  if (n < 2) throw InvalidArgument("a labelled tree needs at least 2 vertices");
  if (sequence.size() != n - 2) throw InvalidArgument("Pruefer sequence must have length n-2");
  std::vector<std::size_t> degree(n, 1);
  for (VertexId v : sequence) {
    if (v >= n) throw InvalidArgument("Pruefer entry out of range");
    ++degree[v];
  }
  Graph tree(n);
  for (VertexId v : sequence) {
    VertexId leaf = 0;
    while (degree[leaf] != 1) ++leaf;
    tree.set_edge(leaf, v, true);
    --degree[leaf];
    --degree[v];
  }
  VertexId u = n, w = n;
  for (VertexId v = 0; v < n; ++v) {
    if (degree[v] == 1) (u == n ? u : w) = v;
  }
  tree.set_edge(u, w, true);
  return tree;
}

std::vector<VertexId> prufer_encode(const Graph& tree) {
  if (!tree.is_tree() || tree.order() < 2) throw InvalidArgument("prufer_encode needs a tree");
  Graph g = tree;
  std::vector<VertexId> out;
  for (std::size_t step = 0; step + 2 < tree.order(); ++step) {
    VertexId leaf = 0;
    while (g.degree(leaf) != 1) ++leaf;
    VertexId parent = std::countr_zero(g.neighbours(leaf));
    out.push_back(parent);
    g.set_edge(leaf, parent, false);
  }
  return out;
}

Graph random_labelled_tree(std::size_t n, std::mt19937_64& rng) {
  if (n < 2) throw InvalidArgument("a labelled tree needs at least 2 vertices");
  std::uniform_int_distribution<VertexId> pick(0, n - 1);
  std::vector<VertexId> sequence(n - 2);
  for (auto& v : sequence) v = pick(rng);
  return prufer_decode(sequence, n);
}

std::vector<Graph> all_labelled_trees(std::size_t n) {
  if (n < 2) throw InvalidArgument("a labelled tree needs at least 2 vertices");
  if (n > 10) throw GuardExceeded("labelled tree enumeration supports n <= 10");
  std::vector<Graph> out;
  std::vector<VertexId> sequence(n - 2, 0);
  while (true) {
    out.push_back(prufer_decode(sequence, n));
    std::size_t k = sequence.size();
    while (k > 0 && sequence[k - 1] == n - 1) sequence[--k] = 0;
    if (k == 0) break;
    ++sequence[k - 1];
  }
  return out;
}

std::vector<Graph> unlabelled_trees(std::size_t n) {
  if (n < 1) throw InvalidArgument("trees need at least one vertex");
  std::set<std::uint64_t> level = {0};
  for (std::size_t order = 2; order <= n; ++order) {
    std::set<std::uint64_t> next;
    for (std::uint64_t code : level) {
      Graph smaller = Graph::decode(order - 1, code);
      for (VertexId v = 0; v + 1 < order; ++v) {
        Graph grown = smaller.disjoint_union(Graph(1));
        grown.set_edge(v, order - 1, true);
        next.insert(canonical_code(grown));
      }
    }
    level = std::move(next);
  }
  std::vector<Graph> out;
  for (std::uint64_t code : level) out.push_back(Graph::decode(n, code));
  return out;
}

}  // namespace psgraph
