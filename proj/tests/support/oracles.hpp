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

// Independent reference implementations used only by tests.

#include <cstdint>
#include <vector>

#include "psgraph/graphs/graph.hpp"
#include "psgraph/fock/fock.hpp"

namespace psgraph::oracle {

// Minimum encoding over every vertex permutation.
std::uint64_t brute_force_canonical_code(const Graph& g);

// Number of simple cycles by checking every vertex subset for Hamiltonian
// cycles of the induced simple graph.
std::size_t brute_force_cycle_count(const Graph& g);

// All graphs on n labelled vertices.
std::vector<Graph> all_graphs(std::size_t n);

}  // namespace psgraph::oracle

namespace psgraph::oracle {

// Permanent as a sum over all permutations.
Complex permanent_by_permutations(const Eigen::MatrixXcd& m);

// Linear-optical evolution by expanding the product of creation operators.
FockVector apply_transfer_by_creation_operators(const FockVector& s, const ModeTransfer& t);

// Haar-ish random unitary from the QR decomposition of a complex Gaussian matrix.
Eigen::MatrixXcd random_unitary(std::size_t n, std::uint64_t seed);

}  // namespace psgraph::oracle
