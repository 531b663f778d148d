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
#include <random>
#include <vector>

#include "psgraph/graphs/graph.hpp"

namespace psgraph {

Graph prufer_decode(const std::vector<VertexId>& sequence, std::size_t n);
std::vector<VertexId> prufer_encode(const Graph& tree);

// Uniform over the n^(n-2) labelled trees.
Graph random_labelled_tree(std::size_t n, std::mt19937_64& rng);

// All n^(n-2) labelled trees in Pruefer-sequence order.
std::vector<Graph> all_labelled_trees(std::size_t n);

// One canonical representative per unlabelled tree, sorted by canonical code.
std::vector<Graph> unlabelled_trees(std::size_t n);

}  // namespace psgraph
