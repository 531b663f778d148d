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

#include <cstdint>
#include <vector>

#include "psgraph/graphs/graph.hpp"

namespace psgraph {

struct CanonicalForm {
  Graph graph;                    // canonical representative
  std::vector<VertexId> relabel;  // graph == input.relabelled(relabel)
  std::uint64_t code = 0;         // graph.encode()
};

inline constexpr std::size_t kMaxCanonicalOrder = 10;

// Minimum encoding over the leaves of an equitable-refinement search tree.
// Isomorphic inputs give identical results. Throws GuardExceeded above n = 10.
CanonicalForm canonical_form(const Graph& g);
std::uint64_t canonical_code(const Graph& g);

}  // namespace psgraph
