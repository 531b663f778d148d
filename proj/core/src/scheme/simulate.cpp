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

#include "psgraph/scheme/simulate.hpp"

#include <algorithm>
#include <bit>
#include <cmath>

#include "psgraph/errors.hpp"
#include "psgraph/graphs/statevector.hpp"

namespace psgraph {

namespace {

// Renames the modes of v: local mode k goes to global mode map[k].
FockVector relocate(const FockVector& v, const std::vector<std::size_t>& map, std::size_t modes) {
  FockVector out(modes);
  for (const auto& [occ, amp] : v.terms()) {
    Occupation o(modes, 0);
    for (std::size_t k = 0; k < occ.size(); ++k) o[map[k]] = occ[k];
    out.add(o, amp);
  }
  return out;
}

// Product of two vectors that live on disjoint global modes of one register.
FockVector merge(const FockVector& a, const FockVector& b) {
  FockVector out(a.modes());
  for (const auto& [x, ax] : a.terms()) {
    for (const auto& [y, by] : b.terms()) {
      Occupation o(a.modes());
      for (std::size_t k = 0; k < o.size(); ++k) o[k] = static_cast<std::uint8_t>(x[k] + y[k]);
      out.add(o, ax * by);
    }
  }
  return out;
}

std::vector<std::size_t> rails_of(const QubitLayout& l, VertexId a, VertexId b) {
  return {l.qubits[a].one, l.qubits[a].zero, l.qubits[b].one, l.qubits[b].zero};
}

}  // namespace

Graph intended_graph(const Scheme& s) {
  Graph g(s.qubits);
  for (const Source& src : s.sources) g.set_edge(src.a, src.b, true);
  for (const Gate& gate : s.gates_in_time_order()) {
    g = gate.kind == GateKind::kCz ? cz_toggle(g, gate.i, gate.j) : fuse(g, gate.i, gate.j);
  }
  return g;
}

double nominal_probability(const Scheme& s) {
  double p = 1.0;
  for (const Gate& g : s.gates) p *= g.kind == GateKind::kCz ? 1.0 / 9.0 : 0.5;
  return p;
}

SchemeSimulation simulate_scheme(const Scheme& s) {
  s.validate();
  std::size_t cz_count = 0;
  for (const Gate& g : s.gates) cz_count += g.kind == GateKind::kCz ? 1 : 0;
  const std::size_t modes = 2 * s.qubits + 2 * cz_count;
  if (modes > kMaxModes) {
    throw GuardExceeded("scheme simulation needs " + std::to_string(modes) + " modes, limit " +
                        std::to_string(kMaxModes));
  }
  QubitLayout layout = QubitLayout::standard(s.qubits);
  for (std::size_t m = 2 * s.qubits; m < modes; ++m) layout.auxiliary.push_back(m);

  FockVector state = FockVector::vacuum(modes);
  std::vector<Source> pairs;
  for (const Source& src : s.sources) {
    if (src.is_epp()) {
      pairs.push_back(src);
      continue;
    }
    Graph edge(2);
    edge.set_edge(0, 1, true);
    FockVector bell = from_qubit_state(statevector(edge), QubitLayout::standard(2), 4);
    state = merge(state, relocate(bell, rails_of(layout, src.a, src.b), modes));
  }
  for (VertexId q : s.singles) {
    FockVector plus = from_qubit_state(plus_state(1), QubitLayout::standard(1), 2);
    state = merge(state, relocate(plus, {layout.qubits[q].one, layout.qubits[q].zero}, modes));
  }
  if (!pairs.empty()) {
    std::vector<std::size_t> map;
    for (const Source& src : pairs) {
      for (std::size_t m : rails_of(layout, src.a, src.b)) map.push_back(m);
    }
    FockVector emitted = epp_source_state(pairs.size(), pairs.size(), false);
    emitted = relocate(emitted, map, modes);
    for (const Source& src : pairs) {
      emitted = apply_transfer(
          emitted, hadamard_transfer().placed({layout.qubits[src.b].one, layout.qubits[src.b].zero}));
    }
    const double unit = std::pow(2.0, -0.5 * static_cast<double>(pairs.size()));
    state = merge(state, emitted.scaled(unit));
  }

  std::vector<ModeTransfer> gates;
  std::size_t aux = 2 * s.qubits;
  for (const Gate& g : s.gates_in_time_order()) {
    std::vector<std::size_t> local = rails_of(layout, g.i, g.j);
    if (g.kind == GateKind::kCz) {
      local.push_back(aux++);
      local.push_back(aux++);
      gates.push_back(cz_lo_transfer().placed(local));
    } else {
      gates.push_back(fusion_transfer().placed(local));
    }
  }

  const ExperimentResult run = run_experiment(state, gates, layout);
  SchemeSimulation out;
  out.output = to_qubit_state(run.postselected, layout);
  out.probability = run.probability;
  out.nominal_probability = nominal_probability(s);

  const StateVector target = statevector(intended_graph(s));
  const std::size_t n = s.qubits;
  for (std::size_t frame = 0; frame < (std::size_t{1} << n); ++frame) {
    StateVector z = target;
    for (std::size_t x = 0; x < z.amplitudes.size(); ++x) {
      if (std::popcount(x & frame) % 2 != 0) z.amplitudes[x] = -z.amplitudes[x];
    }
    if (out.probability > 0.0) out.fidelity = std::max(out.fidelity, fidelity(z, out.output));
  }
  return out;
}

}  // namespace psgraph
