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

#include "schemes.hpp"

#include <functional>

namespace psgraph::oracle {

void for_each_scheme(const SchemeSpace& space, const std::function<void(const Scheme&)>& visit) {
  for (std::size_t n = 2; n <= space.max_qubits; ++n) {
    std::vector<std::pair<VertexId, VertexId>> pairs;
    for (VertexId i = 0; i < n; ++i) {
      for (VertexId j = i + 1; j < n; ++j) pairs.push_back({i, j});
    }
    const std::size_t choices = pairs.size() * space.kinds.size();
    for (std::size_t p = 0; 2 * p <= n; ++p) {
      std::size_t flavour_combos = 1;
      for (std::size_t k = 0; k < p; ++k) flavour_combos *= space.flavours.size();
      for (std::size_t f = 0; f < flavour_combos; ++f) {
        Scheme base;
        base.qubits = n;
        for (std::size_t k = 0, rest = f; k < p; ++k, rest /= space.flavours.size()) {
          base.sources.push_back({2 * k, 2 * k + 1, space.flavours[rest % space.flavours.size()]});
        }
        for (VertexId q = 2 * p; q < n; ++q) base.singles.push_back(q);
        for (std::size_t length = 0; length <= space.max_gates; ++length) {
          std::vector<std::size_t> pick(length, 0);
          while (true) {
            Scheme s = base;
            for (std::size_t t = 0; t < length; ++t) {
              const auto [i, j] = pairs[pick[t] / space.kinds.size()];
              s.gates.push_back({i, j, space.kinds[pick[t] % space.kinds.size()], t});
            }
            visit(s);
            std::size_t t = length;
            while (t > 0 && ++pick[t - 1] == choices) pick[--t] = 0;
            if (t == 0) break;
          }
        }
      }
    }
  }
}

namespace {

struct Edge {
  VertexId u;
  VertexId v;
  bool source;
};

std::vector<Edge> gate_and_source_edges(const Scheme& s, bool with_sources) {
  std::vector<Edge> edges;
  for (const Gate& g : s.gates) edges.push_back({g.i, g.j, false});
  if (with_sources) {
    for (const Source& src : s.sources) {
      if (src.is_epp()) edges.push_back({src.a, src.b, true});
    }
  }
  return edges;
}

}  // namespace

bool brute_force_even_trail(const Scheme& s) {
  const std::vector<Edge> edges = gate_and_source_edges(s, true);
  std::vector<bool> used(edges.size(), false);
  std::function<bool(VertexId, VertexId, int, int)> walk = [&](VertexId start, VertexId at,
                                                               int length, int sources) {
    if (length > 0 && at == start && sources % 2 == 0) return true;
    for (std::size_t e = 0; e < edges.size(); ++e) {
      if (used[e] || (edges[e].u != at && edges[e].v != at)) continue;
      used[e] = true;
      VertexId next = edges[e].u == at ? edges[e].v : edges[e].u;
      bool found = walk(start, next, length + 1, sources + (edges[e].source ? 1 : 0));
      used[e] = false;
      if (found) return true;
    }
    return false;
  };
  for (VertexId v = 0; v < s.qubits; ++v) {
    if (walk(v, v, 0, 0)) return true;
  }
  return false;
}

bool brute_force_disjoint_paths(const Scheme& s) {
  const std::vector<Edge> edges = gate_and_source_edges(s, false);
  std::vector<Source> pairs;
  for (const Source& src : s.sources) {
    if (src.is_epp()) pairs.push_back(src);
  }
  std::vector<bool> used(edges.size(), false);
  // Simple path from `at` to `goal` over unused edges; on success calls `then`.
  std::function<bool(VertexId, VertexId, std::vector<bool>&, const std::function<bool()>&)> path =
      [&](VertexId at, VertexId goal, std::vector<bool>& visited,
          const std::function<bool()>& then) {
        if (at == goal) return then();
        for (std::size_t e = 0; e < edges.size(); ++e) {
          if (used[e] || (edges[e].u != at && edges[e].v != at)) continue;
          VertexId next = edges[e].u == at ? edges[e].v : edges[e].u;
          if (visited[next]) continue;
          used[e] = true;
          visited[next] = true;
          bool found = path(next, goal, visited, then);
          visited[next] = false;
          used[e] = false;
          if (found) return true;
        }
        return false;
      };
  for (std::size_t x = 0; x < pairs.size(); ++x) {
    for (std::size_t y = 0; y < pairs.size(); ++y) {
      if (x == y) continue;
      for (int swap = 0; swap < 2; ++swap) {
        const VertexId c = swap ? pairs[y].b : pairs[y].a;
        const VertexId d = swap ? pairs[y].a : pairs[y].b;
        std::vector<bool> first(s.qubits, false);
        first[pairs[x].a] = true;
        bool found = path(pairs[x].a, c, first, [&] {
          std::vector<bool> second(s.qubits, false);
          second[pairs[x].b] = true;
          return path(pairs[x].b, d, second, [] { return true; });
        });
        if (found) return true;
      }
    }
  }
  return false;
}

}  // namespace psgraph::oracle
