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

// Exhaustive scheme generators and brute-force rule references for tests.

#include <cstddef>
#include <functional>
#include <vector>

#include "psgraph/scheme/scheme.hpp"

namespace psgraph::oracle {

struct SchemeSpace {
  std::size_t max_qubits = 4;
  std::size_t max_gates = 3;
  std::vector<SourceFlavour> flavours{SourceFlavour::kDegenerate};
  std::vector<GateKind> kinds{GateKind::kCz};
};

// Every scheme in the space up to relabelling of the resource layout: pair
// sources sit on (0,1), (2,3), ... and singles fill the remaining qubits.
// Gates range over every ordered sequence of qubit pairs and kinds.
void for_each_scheme(const SchemeSpace& space, const std::function<void(const Scheme&)>& visit);

// Depth-first search for a closed walk without repeated edges that uses an
// even number of pair-source edges.
bool brute_force_even_trail(const Scheme& s);

// Depth-first search for two edge-disjoint gate paths a..{c,d}, b..{c,d}
// ending at different qubits, for some pair of pair sources.
bool brute_force_disjoint_paths(const Scheme& s);

}  // namespace psgraph::oracle
