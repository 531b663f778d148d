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

#include "psgraph/explorer/resource.hpp"
#include "psgraph/graphs/graph.hpp"
#include "psgraph/scheme/scheme.hpp"

namespace psgraph {

enum class OpKind { kCz, kFusion, kLc };

struct Operation {
  OpKind kind = OpKind::kCz;
  VertexId i = 0;
  VertexId j = 0;  // unused for LC

  static Operation cz(VertexId i, VertexId j) { return {OpKind::kCz, i, j}; }
  static Operation fusion(VertexId i, VertexId j) { return {OpKind::kFusion, i, j}; }
  static Operation lc(VertexId a) { return {OpKind::kLc, a, 0}; }
  friend bool operator==(const Operation&, const Operation&) = default;
};

// Gates and local complementations applied to a resource, in order.
// qubit_map[v] is the resource qubit holding vertex v of the produced graph;
// empty means every qubit in order. Unmapped qubits are measured in Z, which
// deletes them from the graph up to Pauli corrections on their neighbours.
struct Recipe {
  std::vector<Operation> ops;
  std::vector<VertexId> qubit_map;

  std::size_t gate_count() const;
  // (1/9)^#CZ (1/2)^#F
  double probability() const;

  // "CZ(0,1) LC(1) F(2,3)", "-" when empty, then " @ 3,0,1" for a qubit map.
  std::string to_string() const;
  static Recipe parse(std::string_view text);

  friend bool operator==(const Recipe&, const Recipe&) = default;
};

// Resource graph after every operation. Throws InvalidArgument on a bad index.
Graph replay(const Recipe& recipe, const Resource& r);
// replay restricted to and relabelled by the qubit map.
Graph realised_graph(const Recipe& recipe, const Resource& r);
// Experiment the recipe describes: the resource with one gate per CZ/F op.
Scheme recipe_scheme(const Recipe& recipe, const Resource& r);

// Higher probability, then fewer operations, then smaller text.
bool better_recipe(const Recipe& a, const Recipe& b);

}  // namespace psgraph
