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

#include "psgraph/graphs/cycles.hpp"

#include <algorithm>

#include "psgraph/errors.hpp"

namespace psgraph {
namespace {

struct CycleWalker {
  const Multigraph& g;
  std::vector<std::vector<std::pair<VertexId, std::size_t>>> incident;
  std::vector<bool> on_path;
  std::vector<std::size_t> path_edges;
  std::vector<std::vector<std::size_t>> found;
  VertexId start = 0;

  explicit CycleWalker(const Multigraph& graph)
      : g(graph), incident(graph.order), on_path(graph.order, false) {
    for (std::size_t e = 0; e < g.edges.size(); ++e) {
      auto [u, v] = g.edges[e];
      if (u >= g.order || v >= g.order) {
        throw InvalidArgument("multigraph edge endpoint out of range");
      }
      if (u == v) continue;
      incident[u].emplace_back(v, e);
      incident[v].emplace_back(u, e);
    }
  }

  void extend(VertexId at) {
    for (auto [next, e] : incident[at]) {
      if (next < start) continue;
      if (next == start) {
        // Closing edge must differ from the opening one and orient the cycle.
        if (!path_edges.empty() && e != path_edges.front() && path_edges.front() < e) {
          std::vector<std::size_t> cycle = path_edges;
          cycle.push_back(e);
          std::sort(cycle.begin(), cycle.end());
          found.push_back(std::move(cycle));
        }
        continue;
      }
      if (on_path[next]) continue;
      on_path[next] = true;
      path_edges.push_back(e);
      extend(next);
      path_edges.pop_back();
      on_path[next] = false;
    }
  }

  void run() {
    for (start = 0; start < g.order; ++start) {
      on_path[start] = true;
      extend(start);
      on_path[start] = false;
    }
  }
};

}  // namespace

std::vector<std::vector<std::size_t>> enumerate_simple_cycles(const Multigraph& g) {
  if (g.order > kMaxCycleOrder) {
    throw GuardExceeded("cycle enumeration supports order <= " +
                        std::to_string(kMaxCycleOrder));
  }
  CycleWalker walker(g);
  walker.run();
  return std::move(walker.found);
}

std::vector<std::vector<std::size_t>> enumerate_simple_cycles(const Graph& g) {
  return enumerate_simple_cycles(Multigraph{g.order(), g.edges()});
}

}  // namespace psgraph
