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

#pragma once

#include <cstddef>

#include "psgraph/fock/fock.hpp"
#include "psgraph/graphs/graph.hpp"
#include "psgraph/scheme/scheme.hpp"

namespace psgraph {

// Graph the scheme is meant to build: one edge per pair source, then each gate
// applied in time order (CZ toggles the edge, F fuses).
Graph intended_graph(const Scheme& s);

// (1/9)^#CZ (1/2)^#F
double nominal_probability(const Scheme& s);

struct SchemeSimulation {
  StateVector output;
  double probability = 0.0;
  double nominal_probability = 0.0;
  // Best fidelity with the intended graph state over all Z byproduct frames.
  double fidelity = 0.0;
};

// Photon-level run of the scheme. Pair sources emit the m-pair term of the
// joint source state (coincidence fixes the photon number), rotated so that
// the single-pair term is a graph-state edge and normalised so that term has
// unit norm. Singles start in |+>, heralded Bell pairs as a graph-state edge.
// Each CZ uses two fresh vacuum modes. Needs 2n + 2#CZ <= 16 modes.
SchemeSimulation simulate_scheme(const Scheme& s);

}  // namespace psgraph
