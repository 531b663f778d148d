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

#include <bit>

#include "psgraph/errors.hpp"
#include "psgraph/explorer/explorer.hpp"

namespace psgraph {

Resource tree_resource(std::size_t n) {
  Resource r;
  r.nondegenerate = (n + 1) / 2;
  return r;
}

namespace {

enum class Feature { kPendantPath, kSiblingLeaves };

// Two vertices peeled off the tree, to be restored by one gate with a pair.
struct Peel {
  Feature feature;
  VertexId first;   // pendant path: the degree-2 vertex; siblings: a leaf
  VertexId second;  // pendant path: the end leaf; siblings: the other leaf
  VertexId anchor;  // vertex the pair attaches to
};

std::uint32_t active_neighbours(const Graph& g, VertexId v, std::uint32_t active) {
  return g.neighbours(v) & active;
}

Peel find_feature(const Graph& g, std::uint32_t active) {
  // Sibling leaves first: fusion succeeds with probability 1/2 against 1/9.
  for (VertexId w = 0; w < g.order(); ++w) {
    if (!(active >> w & 1u)) continue;
    std::vector<VertexId> leaves;
    for (std::uint32_t m = active_neighbours(g, w, active); m; m &= m - 1) {
      const auto v = static_cast<VertexId>(std::countr_zero(m));
      if (std::popcount(active_neighbours(g, v, active)) == 1) leaves.push_back(v);
    }
    if (leaves.size() >= 2) return {Feature::kSiblingLeaves, leaves[0], leaves[1], w};
  }
  for (VertexId v = 0; v < g.order(); ++v) {
    if (!(active >> v & 1u) || std::popcount(active_neighbours(g, v, active)) != 1) continue;
    const auto u = static_cast<VertexId>(std::countr_zero(active_neighbours(g, v, active)));
    const std::uint32_t rest = active_neighbours(g, u, active) & ~(1u << v);
    if (std::popcount(rest) == 1) {
      return {Feature::kPendantPath, u, v, static_cast<VertexId>(std::countr_zero(rest))};
    }
  }
  throw std::logic_error("tree with neither a pendant path nor sibling leaves");
}

}  // namespace

Recipe tree_recipe(const Graph& target) {
  if (!target.is_tree()) throw InvalidArgument("tree_recipe needs a tree, got " + target.to_string());
  const std::size_t n = target.order();
  if (n < 2) throw InvalidArgument("tree_recipe needs at least two vertices");

  Graph t = target;
  if (n % 2 == 1) {
    // Grow a spare leaf so every vertex is fed by a pair; it is measured out.
    Graph grown(n + 1);
    for (const auto& [u, v] : target.edges()) grown.set_edge(u, v, true);
    grown.set_edge(0, n, true);
    t = grown;
  }
  const std::size_t order = t.order();

  std::uint32_t active = order == 32 ? ~0u : (1u << order) - 1;
  std::vector<Peel> peels;
  while (std::popcount(active) > 2) {
    const Peel p = find_feature(t, active);
    peels.push_back(p);
    active &= ~((1u << p.first) | (1u << p.second));
  }

  std::vector<VertexId> qubit(order, 0);
  const auto a = static_cast<VertexId>(std::countr_zero(active));
  const auto b = static_cast<VertexId>(std::countr_zero(active & (active - 1)));
  qubit[a] = 0;
  qubit[b] = 1;

  Recipe recipe;
  VertexId next = 2;
  for (auto it = peels.rbegin(); it != peels.rend(); ++it, next += 2) {
    qubit[it->first] = next;
    qubit[it->second] = next + 1;
    if (it->feature == Feature::kPendantPath) {
      recipe.ops.push_back(Operation::cz(qubit[it->anchor], next));
    } else {
      recipe.ops.push_back(Operation::fusion(next, qubit[it->anchor]));
    }
  }
  recipe.qubit_map.assign(qubit.begin(), qubit.begin() + static_cast<std::ptrdiff_t>(n));
  return recipe;
}

}  // namespace psgraph
