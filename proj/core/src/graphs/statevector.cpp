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

#include "psgraph/graphs/statevector.hpp"

#include <bit>
#include <cmath>

#include "psgraph/errors.hpp"

namespace psgraph {
namespace {

void check_qubit(const StateVector& s, VertexId q) {
  if (q >= s.qubits) {
    throw InvalidArgument("qubit " + std::to_string(q) + " out of range for " +
                          std::to_string(s.qubits) + " qubits");
  }
}

void check_shape(const StateVector& s) {
  if (s.amplitudes.size() != (std::size_t{1} << s.qubits)) {
    throw InvalidArgument("state vector length does not match qubit count");
  }
}

}  // namespace

double StateVector::squared_norm() const {
  double total = 0.0;
  for (const Complex& a : amplitudes) total += std::norm(a);
  return total;
}

Complex StateVector::amplitude_of(const std::vector<int>& bits) const {
  if (bits.size() != qubits) throw InvalidArgument("basis string has wrong length");
  std::size_t index = 0;
  for (int b : bits) index = (index << 1) | (b ? 1u : 0u);
  return amplitudes[index];
}

StateVector statevector(const Graph& g) {
  const std::size_t n = g.order();
  if (n > kMaxStateQubits) {
    throw GuardExceeded("statevector supports at most " + std::to_string(kMaxStateQubits) +
                        " qubits");
  }
  StateVector s{n, std::vector<Complex>(std::size_t{1} << n)};
  const double weight = std::pow(2.0, -0.5 * static_cast<double>(n));
  const auto edges = g.edges();
  for (std::size_t x = 0; x < s.amplitudes.size(); ++x) {
    int parity = 0;
    for (const auto& [i, j] : edges) {
      parity ^= static_cast<int>((x >> (n - 1 - i)) & (x >> (n - 1 - j)) & 1u);
    }
    s.amplitudes[x] = parity ? -weight : weight;
  }
  return s;
}

StateVector plus_state(std::size_t n) { return statevector(Graph(n)); }

StateVector apply_qubit_operator(const StateVector& s, const Eigen::Matrix4cd& op, VertexId i,
                                 VertexId j) {
  check_shape(s);
  check_qubit(s, i);
  check_qubit(s, j);
  if (i == j) throw InvalidArgument("two-qubit operator needs distinct qubits");
  const std::size_t bi = std::size_t{1} << (s.qubits - 1 - i);
  const std::size_t bj = std::size_t{1} << (s.qubits - 1 - j);
  StateVector out{s.qubits, std::vector<Complex>(s.amplitudes.size())};
  for (std::size_t x = 0; x < s.amplitudes.size(); ++x) {
    if (x & (bi | bj)) continue;
    const std::size_t idx[4] = {x, x | bj, x | bi, x | bi | bj};
    for (int r = 0; r < 4; ++r) {
      Complex acc = 0.0;
      for (int c = 0; c < 4; ++c) acc += op(r, c) * s.amplitudes[idx[c]];
      out.amplitudes[idx[r]] = acc;
    }
  }
  return out;
}

StateVector apply_single_qubit(const StateVector& s, const Eigen::Matrix2cd& op, VertexId q) {
  check_shape(s);
  check_qubit(s, q);
  const std::size_t bq = std::size_t{1} << (s.qubits - 1 - q);
  StateVector out{s.qubits, std::vector<Complex>(s.amplitudes.size())};
  for (std::size_t x = 0; x < s.amplitudes.size(); ++x) {
    if (x & bq) continue;
    const Complex a0 = s.amplitudes[x];
    const Complex a1 = s.amplitudes[x | bq];
    out.amplitudes[x] = op(0, 0) * a0 + op(0, 1) * a1;
    out.amplitudes[x | bq] = op(1, 0) * a0 + op(1, 1) * a1;
  }
  return out;
}

Complex inner_product(const StateVector& a, const StateVector& b) {
  if (a.qubits != b.qubits) throw InvalidArgument("inner product of mismatched states");
  Complex acc = 0.0;
  for (std::size_t x = 0; x < a.amplitudes.size(); ++x) {
    acc += std::conj(a.amplitudes[x]) * b.amplitudes[x];
  }
  return acc;
}

double fidelity(const StateVector& a, const StateVector& b) {
  const double na = a.squared_norm();
  const double nb = b.squared_norm();
  if (na == 0.0 || nb == 0.0) return 0.0;
  return std::norm(inner_product(a, b)) / (na * nb);
}

Eigen::Matrix4cd cz_matrix() {
  Eigen::Matrix4cd m = Eigen::Matrix4cd::Identity();
  m(3, 3) = -1.0;
  return m;
}

Eigen::Matrix4cd fusion_qubit_matrix() {
  const double h = 1.0 / std::sqrt(2.0);
  Eigen::Matrix4cd m = Eigen::Matrix4cd::Zero();
  // |00> -> |+0> = h(|00> + |10>); |11> -> |-1> = h(|01> - |11>)
  m(0, 0) = h;
  m(2, 0) = h;
  m(1, 3) = h;
  m(3, 3) = -h;
  return m;
}

}  // namespace psgraph
