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

#include <algorithm>

#include "psgraph/errors.hpp"
#include "psgraph/explorer/explorer.hpp"
#include "psgraph/graphs/trees.hpp"
#include "psgraph/scheme/rules.hpp"

namespace psgraph {

namespace {

GateKind random_kind(std::mt19937_64& rng) {
  return std::bernoulli_distribution(0.5)(rng) ? GateKind::kFusion : GateKind::kCz;
}

bool connects(const Graph& base, const std::vector<Edge>& extra) {
  Graph g = base;
  for (const auto& [u, v] : extra) g.set_edge(u, v, true);
  return g.is_connected();
}

// Gates on a random subset of a random labelled tree that, together with the
// resource edges, spans the qubits. Between n-1-|E(R)| and n-1 gates.
Scheme heralded_candidate(const Resource& r, std::mt19937_64& rng) {
  const std::size_t n = r.order();
  const Graph base = r.initial_graph();
  Scheme s = r.bare_scheme();
  const std::size_t lowest = n - 1 - base.edge_count();
  std::uniform_int_distribution<std::size_t> count(lowest, n - 1);
  for (std::size_t attempt = 0; attempt < kMaxTopologyAttempts; ++attempt) {
    std::vector<Edge> edges = random_labelled_tree(n, rng).edges();
    std::shuffle(edges.begin(), edges.end(), rng);
    edges.resize(count(rng));
    if (!connects(base, edges)) continue;
    for (const auto& [u, v] : edges) {
      const bool flip = std::bernoulli_distribution(0.5)(rng);
      s.gates.push_back({flip ? v : u, flip ? u : v, random_kind(rng), s.gates.size()});
    }
    return s;
  }
  throw GuardExceeded("no connecting gate subset after " + std::to_string(kMaxTopologyAttempts) +
                      " attempts for " + r.to_string());
}

// Random tree over sources and singles; each tree edge becomes one gate on a
// random qubit of either end. Trees never close a colour cycle.
Scheme unit_tree_candidate(const Resource& r, std::mt19937_64& rng) {
  Scheme s = r.bare_scheme();
  const std::size_t units = r.pairs() + r.singles;
  if (units < 2) return s;
  auto qubit_of = [&](VertexId unit) -> VertexId {
    if (unit < r.pairs()) return 2 * unit + (std::bernoulli_distribution(0.5)(rng) ? 1 : 0);
    return 2 * r.pairs() + (unit - r.pairs());
  };
  std::vector<Edge> edges = random_labelled_tree(units, rng).edges();
  std::shuffle(edges.begin(), edges.end(), rng);
  for (const auto& [u, v] : edges) {
    s.gates.push_back({qubit_of(u), qubit_of(v), random_kind(rng), s.gates.size()});
  }
  return s;
}

}  // namespace

Scheme sample_topology(const Resource& r, std::mt19937_64& rng) {
  r.validate();
  if (r.epp_count() == 0) return heralded_candidate(r, rng);
  if (r.degenerate == 0 && r.bell == 0) return unit_tree_candidate(r, rng);
  for (std::size_t attempt = 0; attempt < kMaxTopologyAttempts; ++attempt) {
    Scheme s = heralded_candidate(r, rng);
    try {
      if (!full_verdict(s).fails()) return s;
    } catch (const ModellingError&) {
      // colour-inconsistent arrangement; draw again
    }
  }
  throw GuardExceeded("no postselectable topology after " +
                      std::to_string(kMaxTopologyAttempts) + " attempts for " + r.to_string());
}

Experiment run_experiment_on_graph(const Scheme& topology, std::size_t fusion_lc_budget,
                                   std::mt19937_64& rng) {
  Experiment e;
  e.graph = Graph(topology.qubits);
  for (const Source& src : topology.sources) e.graph.set_edge(src.a, src.b, true);
  std::uniform_int_distribution<std::size_t> cz_lcs(0, kMaxCzLcs);
  std::uniform_int_distribution<std::size_t> fusion_lcs(0, fusion_lc_budget);
  auto lc = [&](VertexId a) {
    e.graph = local_complement(e.graph, a);
    e.recipe.ops.push_back(Operation::lc(a));
  };
  for (const Gate& g : topology.gates_in_time_order()) {
    if (g.kind == GateKind::kCz) {
      e.graph = cz_toggle(e.graph, g.i, g.j);
      e.recipe.ops.push_back(Operation::cz(g.i, g.j));
      const std::size_t m = cz_lcs(rng);
      for (std::size_t k = 1; k <= m; ++k) lc(k % 2 == 1 ? g.j : g.i);
    } else {
      std::uint32_t support = e.graph.neighbours(g.i) | e.graph.neighbours(g.j);
      support |= (1u << g.i) | (1u << g.j);
      std::vector<VertexId> candidates;
      for (VertexId v = 0; v < topology.qubits; ++v) {
        if (support >> v & 1u) candidates.push_back(v);
      }
      e.graph = fuse(e.graph, g.i, g.j);
      e.recipe.ops.push_back(Operation::fusion(g.i, g.j));
      std::uniform_int_distribution<std::size_t> pick(0, candidates.size() - 1);
      const std::size_t m = fusion_lcs(rng);
      for (std::size_t k = 0; k < m; ++k) lc(candidates[pick(rng)]);
    }
  }
  return e;
}

}  // namespace psgraph
