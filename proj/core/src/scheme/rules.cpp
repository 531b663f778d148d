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

#include "psgraph/scheme/rules.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <queue>
#include <sstream>

#include "psgraph/errors.hpp"

namespace psgraph {

std::string to_string(Postselectable p) {
  switch (p) {
    case Postselectable::kFails:
      return "fails";
    case Postselectable::kPassesNecessary:
      return "passes-necessary";
    case Postselectable::kPassesSufficient:
      return "passes-sufficient";
  }
  return "?";
}

std::string render(const Verdict& v) {
  std::string out = to_string(v.result) + '\n';
  for (const Witness& w : v.witnesses) out += "  " + w.rule + ": " + w.detail + '\n';
  return out;
}

namespace {

struct Link {
  VertexId u = 0;
  VertexId v = 0;
  bool source = false;
};

std::string describe(const std::vector<VertexId>& walk) {
  std::string s;
  for (std::size_t k = 0; k < walk.size(); ++k) {
    if (k > 0) s += '-';
    s += std::to_string(walk[k]);
  }
  return s;
}

Verdict failing(const std::string& rule, const std::string& detail) {
  Verdict v;
  v.result = Postselectable::kFails;
  v.witnesses.push_back({rule, detail});
  return v;
}

Verdict passing(bool sufficient) {
  Verdict v;
  v.result = sufficient ? Postselectable::kPassesSufficient : Postselectable::kPassesNecessary;
  return v;
}

struct UnionFind {
  std::vector<std::size_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[a] = b;
    return true;
  }
};

// Vertex path between u and v through the given forest links, or empty.
std::vector<VertexId> forest_path(std::size_t n, const std::vector<Link>& forest, VertexId u,
                                  VertexId v) {
  std::vector<std::vector<VertexId>> adj(n);
  for (const Link& l : forest) {
    adj[l.u].push_back(l.v);
    adj[l.v].push_back(l.u);
  }
  std::vector<VertexId> prev(n, n);
  std::queue<VertexId> q;
  prev[u] = u;
  q.push(u);
  while (!q.empty()) {
    VertexId x = q.front();
    q.pop();
    for (VertexId y : adj[x]) {
      if (prev[y] == n) {
        prev[y] = x;
        q.push(y);
      }
    }
  }
  if (prev[v] == n) return {};
  std::vector<VertexId> path{v};
  while (path.back() != u) path.push_back(prev[path.back()]);
  std::reverse(path.begin(), path.end());
  return path;
}

// First link that closes a cycle, reported as a closed vertex walk.
std::vector<VertexId> find_cycle(std::size_t n, const std::vector<Link>& links) {
  UnionFind uf(n);
  std::vector<Link> forest;
  for (const Link& l : links) {
    if (!uf.unite(l.u, l.v)) {
      std::vector<VertexId> walk = forest_path(n, forest, l.v, l.u);
      walk.push_back(l.v);
      return walk;
    }
    forest.push_back(l);
  }
  return {};
}

std::vector<Link> gate_links(const Scheme& s) {
  std::vector<Link> links;
  for (const Gate& g : s.gates_in_time_order()) links.push_back({g.i, g.j, false});
  return links;
}

std::vector<Link> pair_source_links(const Scheme& s) {
  std::vector<Link> links;
  for (const Source& src : s.sources) {
    if (src.is_epp()) links.push_back({src.a, src.b, true});
  }
  return links;
}

// Unit-capacity flow on an undirected multigraph. Each edge is one arc pair
// whose residual capacities are (1 - f, 1 + f) for net flow f.
class UnitFlow {
 public:
  explicit UnitFlow(std::size_t vertices) : adj_(vertices) {}

  void add_edge(std::size_t u, std::size_t v, int forward, int backward) {
    adj_[u].push_back(head_.size());
    head_.push_back(v);
    cap_.push_back(forward);
    adj_[v].push_back(head_.size());
    head_.push_back(u);
    cap_.push_back(backward);
  }

  bool augment(std::size_t s, std::size_t t) {
    std::vector<std::size_t> via(adj_.size(), kNone);
    std::vector<bool> seen(adj_.size(), false);
    std::queue<std::size_t> q;
    seen[s] = true;
    q.push(s);
    while (!q.empty() && !seen[t]) {
      std::size_t x = q.front();
      q.pop();
      for (std::size_t arc : adj_[x]) {
        std::size_t y = head_[arc];
        if (cap_[arc] > 0 && !seen[y]) {
          seen[y] = true;
          via[y] = arc;
          q.push(y);
        }
      }
    }
    if (!seen[t]) return false;
    for (std::size_t y = t; y != s;) {
      std::size_t arc = via[y];
      --cap_[arc];
      ++cap_[arc ^ 1];
      y = head_[arc ^ 1];
    }
    return true;
  }

  // Net flow through arc pair `pair` in its forward direction.
  int net(std::size_t pair, int forward_capacity) const { return forward_capacity - cap_[2 * pair]; }

 private:
  static constexpr std::size_t kNone = static_cast<std::size_t>(-1);
  std::vector<std::vector<std::size_t>> adj_;
  std::vector<std::size_t> head_;
  std::vector<int> cap_;
};

}  // namespace

Verdict check_gate_cycles(const Scheme& s) {
  std::vector<VertexId> cycle = find_cycle(s.qubits, gate_links(s));
  if (!cycle.empty()) return failing("gate cycle", describe(cycle));
  return passing(s.epp_count() == 0);
}

Verdict check_paths_rule(const Scheme& s) {
  const std::size_t n = s.qubits;
  const std::vector<Link> gates = gate_links(s);
  std::vector<Source> pairs;
  for (const Source& src : s.sources) {
    if (src.is_epp()) pairs.push_back(src);
  }
  for (std::size_t x = 0; x < pairs.size(); ++x) {
    for (std::size_t y = x + 1; y < pairs.size(); ++y) {
      const std::size_t S = n;
      const std::size_t T = n + 1;
      UnitFlow flow(n + 2);
      for (const Link& g : gates) flow.add_edge(g.u, g.v, 1, 1);
      flow.add_edge(S, pairs[x].a, 1, 0);
      flow.add_edge(S, pairs[x].b, 1, 0);
      flow.add_edge(pairs[y].a, T, 1, 0);
      flow.add_edge(pairs[y].b, T, 1, 0);
      int value = 0;
      while (value < 2 && flow.augment(S, T)) ++value;
      if (value < 2) continue;

      // Decompose the flow into the two gate paths.
      std::vector<std::vector<std::pair<VertexId, std::size_t>>> out(n);
      for (std::size_t e = 0; e < gates.size(); ++e) {
        int f = flow.net(e, 1);
        if (f > 0) out[gates[e].u].push_back({gates[e].v, e});
        if (f < 0) out[gates[e].v].push_back({gates[e].u, e});
      }
      std::string detail;
      for (VertexId start : {pairs[x].a, pairs[x].b}) {
        std::vector<VertexId> path{start};
        while (path.back() != pairs[y].a && path.back() != pairs[y].b) {
          auto& next = out[path.back()];
          VertexId to = next.back().first;
          next.pop_back();
          path.push_back(to);
        }
        if (!detail.empty()) detail += " and ";
        detail += describe(path);
      }
      return failing("paths", detail);
    }
  }
  return passing(false);
}

namespace {

// Closed vertex walk covering every edge of a connected even subgraph.
std::vector<VertexId> euler_circuit(std::size_t n, const std::vector<Link>& edges,
                                    const std::vector<std::size_t>& chosen) {
  std::vector<std::vector<std::pair<VertexId, std::size_t>>> adj(n);
  for (std::size_t e : chosen) {
    adj[edges[e].u].push_back({edges[e].v, e});
    adj[edges[e].v].push_back({edges[e].u, e});
  }
  std::vector<bool> used(edges.size(), false);
  std::vector<VertexId> stack{edges[chosen.front()].u};
  std::vector<VertexId> circuit;
  while (!stack.empty()) {
    VertexId x = stack.back();
    auto& nbrs = adj[x];
    while (!nbrs.empty() && used[nbrs.back().second]) nbrs.pop_back();
    if (nbrs.empty()) {
      circuit.push_back(x);
      stack.pop_back();
    } else {
      used[nbrs.back().second] = true;
      stack.push_back(nbrs.back().first);
    }
  }
  std::reverse(circuit.begin(), circuit.end());
  return circuit;
}

bool edges_connected(std::size_t n, const std::vector<Link>& edges,
                     const std::vector<std::size_t>& chosen) {
  UnionFind uf(n);
  for (std::size_t e : chosen) uf.unite(edges[e].u, edges[e].v);
  std::size_t root = uf.find(edges[chosen.front()].u);
  return std::all_of(chosen.begin(), chosen.end(),
                     [&](std::size_t e) { return uf.find(edges[e].u) == root; });
}

}  // namespace

Verdict check_source_cycle_parity(const Scheme& s) {
  const std::size_t n = s.qubits;
  std::vector<Link> edges = gate_links(s);
  for (const Link& l : pair_source_links(s)) edges.push_back(l);
  if (n > kMaxParityVertices || edges.size() > kMaxParityEdges) {
    throw GuardExceeded("source cycle parity supports at most " +
                        std::to_string(kMaxParityVertices) + " qubits and " +
                        std::to_string(kMaxParityEdges) + " edges");
  }

  // Even-degree edge sets are the cycle space; walk it through the
  // fundamental cycles of a spanning forest in Gray-code order. A connected
  // member is a closed trail.
  UnionFind uf(n);
  std::vector<Link> forest;
  std::vector<std::size_t> forest_index;
  std::vector<std::uint32_t> basis;
  for (std::size_t e = 0; e < edges.size(); ++e) {
    if (uf.unite(edges[e].u, edges[e].v)) {
      forest.push_back(edges[e]);
      forest_index.push_back(e);
      continue;
    }
    std::uint32_t mask = 1u << e;
    std::vector<VertexId> path = forest_path(n, forest, edges[e].u, edges[e].v);
    for (std::size_t k = 0; k + 1 < path.size(); ++k) {
      for (std::size_t f = 0; f < forest.size(); ++f) {
        const Link& l = forest[f];
        if ((l.u == path[k] && l.v == path[k + 1]) || (l.v == path[k] && l.u == path[k + 1])) {
          mask ^= 1u << forest_index[f];
          break;
        }
      }
    }
    basis.push_back(mask);
  }

  std::uint32_t source_mask = 0;
  for (std::size_t e = 0; e < edges.size(); ++e) {
    if (edges[e].source) source_mask |= 1u << e;
  }
  std::uint32_t current = 0;
  const std::uint64_t total = std::uint64_t{1} << basis.size();
  for (std::uint64_t k = 1; k < total; ++k) {
    current ^= basis[static_cast<std::size_t>(__builtin_ctzll(k))];
    if (std::popcount(current & source_mask) % 2 != 0) continue;
    std::vector<std::size_t> chosen;
    for (std::size_t e = 0; e < edges.size(); ++e) {
      if (current >> e & 1u) chosen.push_back(e);
    }
    if (!edges_connected(n, edges, chosen)) continue;
    std::ostringstream detail;
    detail << describe(euler_circuit(n, edges, chosen)) << " with "
           << std::popcount(current & source_mask) << " source edge(s)";
    return failing("source cycle parity", detail.str());
  }
  return passing(false);
}

namespace {

// Colour 0/1 per qubit; sources flip, gates keep. Uncoloured qubits get -1.
std::vector<int> source_colours(const Scheme& s) {
  const std::size_t n = s.qubits;
  std::vector<std::vector<std::pair<VertexId, int>>> adj(n);
  for (const Gate& g : s.gates) {
    adj[g.i].push_back({g.j, 0});
    adj[g.j].push_back({g.i, 0});
  }
  for (const Source& src : s.sources) {
    if (src.flavour != SourceFlavour::kNonDegenerate) continue;
    adj[src.a].push_back({src.b, 1});
    adj[src.b].push_back({src.a, 1});
  }
  std::vector<int> colour(n, -1);
  for (const Source& seed : s.sources) {
    if (seed.flavour != SourceFlavour::kNonDegenerate || colour[seed.a] != -1) continue;
    colour[seed.a] = 0;
    std::queue<VertexId> q;
    q.push(seed.a);
    while (!q.empty()) {
      VertexId x = q.front();
      q.pop();
      for (auto [y, flip] : adj[x]) {
        int want = colour[x] ^ flip;
        if (colour[y] == -1) {
          colour[y] = want;
          q.push(y);
        } else if (colour[y] != want) {
          throw ModellingError("qubits " + std::to_string(x) + " and " + std::to_string(y) +
                               " carry photons of different colours but are joined by a gate");
        }
      }
    }
  }
  return colour;
}

}  // namespace

Verdict check_nondegenerate(const Scheme& s) {
  for (const Source& src : s.sources) {
    if (src.flavour == SourceFlavour::kDegenerate) {
      throw InvalidArgument("check_nondegenerate needs non-degenerate pair sources only");
    }
  }
  source_colours(s);
  std::vector<Link> links = gate_links(s);
  for (const Link& l : pair_source_links(s)) links.push_back(l);
  std::vector<VertexId> cycle = find_cycle(s.qubits, links);
  if (!cycle.empty()) return failing("non-degenerate cycle", describe(cycle));
  return passing(true);
}

Verdict full_verdict(const Scheme& s) {
  s.validate();
  if (s.epp_count() == 0) return check_gate_cycles(s);
  if (!s.has_degenerate()) return check_nondegenerate(s);
  source_colours(s);
  Verdict parity = check_source_cycle_parity(s);
  if (parity.fails()) return parity;
  return degenerate_oracle(s);
}

}  // namespace psgraph
