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
#include <vector>

#include "psgraph/graphs/graph.hpp"

namespace psgraph {

// Undirected multigraph given as an edge list; parallel edges are distinct.
struct Multigraph {
  std::size_t order = 0;
  std::vector<Edge> edges;
};

inline constexpr std::size_t kMaxCycleOrder = 16;

// Every simple cycle exactly once, as a sorted list of edge indices.
// A pair of parallel edges is a cycle of length 2; self-loops are ignored.
std::vector<std::vector<std::size_t>> enumerate_simple_cycles(const Multigraph& g);

// Same, with edge indices referring to g.edges().
std::vector<std::vector<std::size_t>> enumerate_simple_cycles(const Graph& g);

}  // namespace psgraph
