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

#include "psgraph/graphs/enumerate.hpp"

#include <algorithm>
#include <unordered_set>

#include "psgraph/errors.hpp"
#include "psgraph/graphs/canonical.hpp"

namespace psgraph {

std::vector<std::uint64_t> connected_graph_codes(std::size_t n) {
  if (n < 1 || n > kMaxCanonicalOrder) {
    throw GuardExceeded("connected graph enumeration supports 1 <= n <= " +
                        std::to_string(kMaxCanonicalOrder));
  }
  // Every connected graph has a non-cut vertex, so deleting it leaves a
  // connected graph of order n-1; growing all of those covers order n.
  std::vector<std::uint64_t> level = {0};
  for (std::size_t order = 2; order <= n; ++order) {
    std::unordered_set<std::uint64_t> next;
    const std::uint32_t subsets = 1u << (order - 1);
    for (std::uint64_t code : level) {
      const Graph base = Graph::decode(order - 1, code).disjoint_union(Graph(1));
      for (std::uint32_t mask = 1; mask < subsets; ++mask) {
        Graph grown = base;
        for (VertexId v = 0; v + 1 < order; ++v) {
          if ((mask >> v) & 1u) grown.set_edge(v, order - 1, true);
        }
        next.insert(canonical_code(grown));
      }
    }
    level.assign(next.begin(), next.end());
    std::sort(level.begin(), level.end());
  }
  return level;
}

}  // namespace psgraph
