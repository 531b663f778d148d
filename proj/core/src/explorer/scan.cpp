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
#include <numeric>

#include "psgraph/errors.hpp"
#include "psgraph/explorer/explorer.hpp"
#include "psgraph/scheme/rules.hpp"

namespace psgraph {

namespace {

Graph gates_without_lcs(const Scheme& s) {
  Graph g(s.qubits);
  for (const Source& src : s.sources) g.set_edge(src.a, src.b, true);
  for (const Gate& gate : s.gates_in_time_order()) {
    g = gate.kind == GateKind::kCz ? cz_toggle(g, gate.i, gate.j) : fuse(g, gate.i, gate.j);
  }
  return g;
}

}  // namespace

std::set<std::size_t> fixed_interferometer_scan(const Scheme& topology, const Catalogue& cat,
                                                std::mt19937_64& rng, const ScanOptions& options) {
  if (full_verdict(topology).fails()) {
    throw InvalidArgument("topology is not postselectable:\n" + render(full_verdict(topology)));
  }
  if (cat.order() != topology.qubits) {
    throw InvalidArgument("catalogue order does not match the topology");
  }
  const std::size_t gates = topology.gates.size();
  if (gates > 16) throw GuardExceeded("scan supports at most 16 gates");

  std::vector<std::vector<std::size_t>> orders;
  std::vector<std::size_t> perm(gates);
  std::iota(perm.begin(), perm.end(), 0);
  if (gates <= options.max_exhaustive_gates) {
    do {
      orders.push_back(perm);
    } while (std::next_permutation(perm.begin(), perm.end()));
  } else {
    std::set<std::vector<std::size_t>> seen;
    for (std::size_t k = 0; k < options.sampled_orders; ++k) {
      std::shuffle(perm.begin(), perm.end(), rng);
      if (seen.insert(perm).second) orders.push_back(perm);
    }
  }

  const std::size_t fusion_budget = max_orbit_diameter(cat);
  std::set<std::size_t> reached;
  auto record = [&](const Graph& g) {
    if (g.is_connected()) reached.insert(classify(cat, g));
  };
  for (const auto& order : orders) {
    Scheme s = topology;
    for (std::size_t t = 0; t < gates; ++t) s.gates[order[t]].time = t;
    // Gate kinds do not enter the postselection rules.
    try {
      if (full_verdict(s).fails()) continue;
    } catch (const ModellingError&) {
      continue;
    }
    for (std::uint32_t kinds = 0; kinds < (1u << gates); ++kinds) {
      for (std::size_t t = 0; t < gates; ++t) {
        s.gates[t].kind = (kinds >> t & 1u) ? GateKind::kFusion : GateKind::kCz;
      }
      record(gates_without_lcs(s));
      for (std::size_t k = 0; k < options.lc_samples; ++k) {
        record(run_experiment_on_graph(s, fusion_budget, rng).graph);
      }
    }
  }
  return reached;
}

}  // namespace psgraph
