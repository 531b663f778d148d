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

#include <complex>
#include <cstddef>
#include <vector>

#include <Eigen/Core>

#include "psgraph/graphs/graph.hpp"

namespace psgraph {

using Complex = std::complex<double>;

// Dense n-qubit state. Basis index bit (n-1-q) holds qubit q, so basis strings
// read qubit 0 first.
struct StateVector {
  std::size_t qubits = 0;
  std::vector<Complex> amplitudes;

  double squared_norm() const;
  Complex amplitude_of(const std::vector<int>& bits) const;
};

inline constexpr std::size_t kMaxStateQubits = 14;

StateVector statevector(const Graph& g);
StateVector plus_state(std::size_t n);

// op acts on |b_i b_j> with b_i the high bit. No renormalisation.
StateVector apply_qubit_operator(const StateVector& s, const Eigen::Matrix4cd& op,
                                 VertexId i, VertexId j);
StateVector apply_single_qubit(const StateVector& s, const Eigen::Matrix2cd& op, VertexId q);

// <a|b>
Complex inner_product(const StateVector& a, const StateVector& b);
// |<a|b>|^2 / (<a|a><b|b>)
double fidelity(const StateVector& a, const StateVector& b);

Eigen::Matrix4cd cz_matrix();
// |+0><00| + |-1><11|
Eigen::Matrix4cd fusion_qubit_matrix();

}  // namespace psgraph
