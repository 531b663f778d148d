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
#include <string_view>
#include <vector>

#include "psgraph/graphs/graph.hpp"

namespace psgraph {

enum class GateKind { kCz, kFusion };
enum class SourceFlavour { kDegenerate, kNonDegenerate, kHeraldedBell };

struct Gate {
  VertexId i = 0;
  VertexId j = 0;
  GateKind kind = GateKind::kCz;
  std::size_t time = 0;

  friend bool operator==(const Gate&, const Gate&) = default;
};

struct Source {
  VertexId a = 0;
  VertexId b = 0;
  SourceFlavour flavour = SourceFlavour::kDegenerate;

  bool is_epp() const { return flavour != SourceFlavour::kHeraldedBell; }
  friend bool operator==(const Source&, const Source&) = default;
};

// Experiment drawn as a multigraph: qubits, typed sources and time-ordered gates.
struct Scheme {
  std::size_t qubits = 0;
  std::vector<Source> sources;
  std::vector<VertexId> singles;
  std::vector<Gate> gates;

  // Throws ModellingError when coverage or time indices are inconsistent.
  void validate() const;

  std::vector<Gate> gates_in_time_order() const;
  std::size_t epp_count() const;
  bool has_degenerate() const;

  // `qubits n`, `source a b degenerate|nondegenerate|bell`, `single q`,
  // `gate t cz|fusion i j`. Blank lines and `#` comments are ignored.
  std::string to_string() const;
  static Scheme parse(std::string_view text);

  friend bool operator==(const Scheme&, const Scheme&) = default;
};

std::string to_string(GateKind kind);
std::string to_string(SourceFlavour flavour);

}  // namespace psgraph
