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
#include <string>
#include <vector>

#include "psgraph/scheme/scheme.hpp"

namespace psgraph {

enum class Postselectable { kFails, kPassesNecessary, kPassesSufficient };

struct Witness {
  std::string rule;
  std::string detail;
};

struct Verdict {
  Postselectable result = Postselectable::kPassesSufficient;
  std::vector<Witness> witnesses;

  bool fails() const { return result == Postselectable::kFails; }
};

std::string to_string(Postselectable p);
std::string render(const Verdict& v);

// Any cycle of gates, parallel gates included.
Verdict check_gate_cycles(const Scheme& s);

// Two edge-disjoint gate paths joining the qubits of one pair source to those
// of another (unit-capacity max flow >= 2).
Verdict check_paths_rule(const Scheme& s);

inline constexpr std::size_t kMaxParityVertices = 16;
inline constexpr std::size_t kMaxParityEdges = 24;

// A closed trail in the gate + pair-source multigraph using an even number of
// source edges. Heralded Bell pairs are not source edges.
Verdict check_source_cycle_parity(const Scheme& s);

// For schemes whose pair sources are all non-degenerate. Throws ModellingError
// when a gate joins qubits of opposite colour.
Verdict check_nondegenerate(const Scheme& s);

inline constexpr std::size_t kMaxOracleSources = 5;
inline constexpr std::size_t kMaxOracleGates = 12;
inline constexpr std::size_t kFallbackSamples = 20000;

// Photon-redistribution search over every firing pattern and every way each
// gate can redistribute photons between its qubits. Exhaustive within the
// guards; above them a seeded random sample is used. A pass is always
// reported as necessary.
Verdict degenerate_oracle(const Scheme& s);

Verdict full_verdict(const Scheme& s);

}  // namespace psgraph
