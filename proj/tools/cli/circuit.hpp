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
#include <optional>
#include <string>
#include <vector>

#include "psgraph/fock/fock.hpp"

namespace psgraph::cli {

// Line-oriented optical circuit:
//   modes M
//   state 1010:1,0101:-0.5+0.5i   or   plus 0 1
//   gate cz i j | gate fusion i j | lc a [neighbours...]
//   project [qubits...]
// Qubit q sits on modes 2q (|1> rail) and 2q+1 (|0> rail).
struct Circuit {
  FockVector initial;
  std::vector<ModeTransfer> transfers;
  // Qubits kept by the final projection; unset means no projection.
  std::optional<std::vector<std::size_t>> projected;

  static Circuit parse(const std::string& text);
};

struct CircuitRun {
  FockVector output;
  double squared_norm = 0.0;
};

CircuitRun run_circuit(const Circuit& c);

}  // namespace psgraph::cli
