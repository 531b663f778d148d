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
#include "psgraph/scheme/scheme.hpp"

namespace psgraph {

// Photon sources feeding an experiment. Pairs occupy qubits (0,1), (2,3), ...
// in the order non-degenerate, degenerate, Bell; singles take the rest.
struct Resource {
  std::size_t nondegenerate = 0;
  std::size_t degenerate = 0;
  std::size_t bell = 0;
  std::size_t singles = 0;

  std::size_t pairs() const { return nondegenerate + degenerate + bell; }
  std::size_t epp_count() const { return nondegenerate + degenerate; }
  std::size_t order() const { return 2 * pairs() + singles; }

  // Throws InvalidArgument unless 2 <= order <= Graph::kMaxOrder.
  void validate() const;

  std::vector<Source> sources() const;
  std::vector<VertexId> single_qubits() const;
  // One edge per pair, singles isolated.
  Graph initial_graph() const;
  // Sources and singles with no gates.
  Scheme bare_scheme() const;

  // "2xND-EPP,1xDEG-EPP,3xBELL,1xSINGLE"; zero counts are omitted.
  std::string to_string() const;
  static Resource parse(std::string_view text);

  friend bool operator==(const Resource&, const Resource&) = default;
};

}  // namespace psgraph
