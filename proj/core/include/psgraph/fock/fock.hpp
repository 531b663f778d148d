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
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "psgraph/graphs/statevector.hpp"

namespace psgraph {

using Occupation = std::vector<std::uint8_t>;

inline constexpr double kPruneThreshold = 1e-12;
inline constexpr std::size_t kMaxPermanentSize = 12;
inline constexpr std::size_t kMaxPhotonsPerTerm = 8;
inline constexpr std::size_t kMaxModes = 16;

// Permanent by Ryser's formula with Gray-code updates. Size <= 12.
Complex permanent(const Eigen::MatrixXcd& m);

// Sparse superposition of occupation lists over a fixed number of modes.
class FockVector {
 public:
  FockVector() = default;
  explicit FockVector(std::size_t modes);

  static FockVector vacuum(std::size_t modes);
  static FockVector basis(const Occupation& occupation, Complex amplitude = 1.0);

  std::size_t modes() const { return modes_; }
  const std::map<Occupation, Complex>& terms() const { return terms_; }

  // Adds to an existing amplitude; drops the term when it falls below the threshold.
  void add(const Occupation& occupation, Complex amplitude);
  Complex amplitude(const Occupation& occupation) const;

  double squared_norm() const;
  FockVector scaled(Complex factor) const;

  // Terms sorted by occupation, amplitudes printed with 12 significant digits.
  std::string to_string() const;

 private:
  std::size_t modes_ = 0;
  std::map<Occupation, Complex> terms_;
};

// Product state of two vectors on disjoint mode sets (b's modes follow a's).
FockVector tensor(const FockVector& a, const FockVector& b);

// Square matrix acting on the listed global modes; U(out, in) is the amplitude
// for a photon entering mode `in` to leave in mode `out`. May be subunitary.
struct ModeTransfer {
  Eigen::MatrixXcd matrix;
  std::vector<std::size_t> modes;

  // Same matrix with its local modes renamed to the given global ones.
  ModeTransfer placed(const std::vector<std::size_t>& global_modes) const;
  double largest_singular_value() const;
};

FockVector apply_transfer(const FockVector& s, const ModeTransfer& t);

// Logical |1> is a photon in `one`, logical |0> a photon in `zero`.
struct Rails {
  std::size_t one = 0;
  std::size_t zero = 0;
};

struct QubitLayout {
  std::vector<Rails> qubits;
  std::vector<std::size_t> auxiliary;

  // Qubit q on modes (2q, 2q+1) = (|1> rail, |0> rail).
  static QubitLayout standard(std::size_t qubits);
  void validate(std::size_t modes) const;
};

// Keeps terms with one photon per qubit and no photons anywhere else.
FockVector project_qubit_subspace(const FockVector& s, const QubitLayout& layout);

// Qubit amplitudes of a vector inside the qubit subspace (other terms ignored).
StateVector to_qubit_state(const FockVector& s, const QubitLayout& layout);
FockVector from_qubit_state(const StateVector& s, const QubitLayout& layout, std::size_t modes);

// Modes in order: a.one, a.zero, b.one, b.zero, aux_a, aux_b. Projected onto
// the qubit subspace it equals CZ/3.
ModeTransfer cz_lo_transfer();
// The same gate without auxiliary modes: a 4x4 subunitary on a.one, a.zero, b.one, b.zero.
ModeTransfer cz_lo_subunitary();
// Modes a.one, a.zero, b.one, b.zero. Projected: |+0><00| + |-1><11|.
ModeTransfer fusion_transfer();
// Hadamard on one qubit's rails (modes one, zero).
ModeTransfer hadamard_transfer();
// sqrt(-iX) on a, diag(1, -i) on each neighbour; implements local complementation at a.
std::vector<ModeTransfer> lc_transfer(const Rails& a, const std::vector<Rails>& neighbours);

inline constexpr std::size_t kMaxSourcePairs = 4;

// Photon-number-truncated output of m pair sources sharing `total_pairs` pairs.
// Source s drives qubits 2s and 2s+1 on modes 4s..4s+3 (standard layout).
// Each firing pattern with k_s pairs on source s contributes the product of
// sum_j |j, k_s-j, j, k_s-j>, unnormalised.
FockVector epp_source_state(std::size_t sources, std::size_t total_pairs, bool degenerate);

// Firing patterns (k_1..k_m) with sum = total, in lexicographic order.
std::vector<std::vector<std::size_t>> firing_patterns(std::size_t sources, std::size_t total);

struct ExperimentResult {
  FockVector postselected;
  double probability = 0.0;
};

ExperimentResult run_experiment(const FockVector& initial, const std::vector<ModeTransfer>& gates,
                                const QubitLayout& layout);

}  // namespace psgraph
