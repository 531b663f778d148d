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

#include <Eigen/SVD>
#include <algorithm>
#include <cmath>
#include <set>

#include "psgraph/errors.hpp"
#include "psgraph/fock/fock.hpp"

namespace psgraph {
namespace {

double factorial(int k) {
  double f = 1.0;
  for (int i = 2; i <= k; ++i) f *= i;
  return f;
}

void compositions(std::size_t total, std::size_t parts, Occupation& current, std::size_t index,
                  std::vector<Occupation>& out) {
  if (index + 1 == parts) {
    current[index] = static_cast<std::uint8_t>(total);
    out.push_back(current);
    return;
  }
  for (std::size_t k = 0; k <= total; ++k) {
    current[index] = static_cast<std::uint8_t>(k);
    compositions(total - k, parts, current, index + 1, out);
  }
}

std::vector<std::size_t> expand(const Occupation& occ) {
  std::vector<std::size_t> photons;
  for (std::size_t m = 0; m < occ.size(); ++m) photons.insert(photons.end(), occ[m], m);
  return photons;
}

// Output amplitudes of the local occupation `in` under the local matrix u.
std::vector<std::pair<Occupation, Complex>> local_outputs(const Eigen::MatrixXcd& u,
                                                          const Occupation& in) {
  const std::size_t k = in.size();
  std::size_t photons = 0;
  for (auto c : in) photons += c;
  std::vector<Occupation> outs;
  Occupation scratch(k, 0);
  compositions(photons, k, scratch, 0, outs);
  const auto cols = expand(in);
  double in_norm = 1.0;
  for (auto c : in) in_norm *= factorial(c);
  std::vector<std::pair<Occupation, Complex>> result;
  for (const Occupation& out : outs) {
    const auto rows = expand(out);
    Eigen::MatrixXcd sub(static_cast<Eigen::Index>(photons), static_cast<Eigen::Index>(photons));
    for (std::size_t r = 0; r < photons; ++r) {
      for (std::size_t c = 0; c < photons; ++c) {
        sub(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) =
            u(static_cast<Eigen::Index>(rows[r]), static_cast<Eigen::Index>(cols[c]));
      }
    }
    double out_norm = 1.0;
    for (auto c : out) out_norm *= factorial(c);
    Complex amp = permanent(sub) / std::sqrt(in_norm * out_norm);
    if (std::abs(amp) >= kPruneThreshold) result.emplace_back(out, amp);
  }
  return result;
}

Eigen::MatrixXcd splitter(double t, double r) {
  Eigen::MatrixXcd b(2, 2);
  b << t, r, -r, t;
  return b;
}

// Embed a 2x2 block acting on local modes (p, q) of a size-n identity.
void embed(Eigen::MatrixXcd& u, const Eigen::MatrixXcd& block, int p, int q) {
  Eigen::MatrixXcd step = Eigen::MatrixXcd::Identity(u.rows(), u.cols());
  step(p, p) = block(0, 0);
  step(p, q) = block(0, 1);
  step(q, p) = block(1, 0);
  step(q, q) = block(1, 1);
  u = step * u;
}

ModeTransfer local(Eigen::MatrixXcd u) {
  ModeTransfer t;
  t.modes.resize(static_cast<std::size_t>(u.rows()));
  for (std::size_t m = 0; m < t.modes.size(); ++m) t.modes[m] = m;
  t.matrix = std::move(u);
  return t;
}

}  // namespace

ModeTransfer ModeTransfer::placed(const std::vector<std::size_t>& global_modes) const {
  if (global_modes.size() != modes.size()) {
    throw InvalidArgument("placement needs one global mode per transfer mode");
  }
  ModeTransfer out;
  out.matrix = matrix;
  out.modes.resize(modes.size());
  for (std::size_t k = 0; k < modes.size(); ++k) out.modes[k] = global_modes[k];
  return out;
}

double ModeTransfer::largest_singular_value() const {
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(matrix);
  return svd.singularValues()(0);
}

FockVector apply_transfer(const FockVector& s, const ModeTransfer& t) {
  const std::size_t k = t.modes.size();
  if (static_cast<std::size_t>(t.matrix.rows()) != k ||
      static_cast<std::size_t>(t.matrix.cols()) != k) {
    throw InvalidArgument("transfer matrix must be square with one row per acted mode");
  }
  std::set<std::size_t> distinct(t.modes.begin(), t.modes.end());
  if (distinct.size() != k) throw InvalidArgument("transfer acts on a repeated mode");
  for (std::size_t m : t.modes) {
    if (m >= s.modes()) {
      throw InvalidArgument("transfer mode " + std::to_string(m) + " out of range for " +
                            std::to_string(s.modes()) + " modes");
    }
  }
  std::map<Occupation, std::vector<std::pair<Occupation, Complex>>> cache;
  FockVector out(s.modes());
  for (const auto& [occ, amp] : s.terms()) {
    std::size_t photons = 0;
    for (auto c : occ) photons += c;
    if (photons > kMaxPhotonsPerTerm) {
      throw GuardExceeded("term with " + std::to_string(photons) + " photons exceeds " +
                          std::to_string(kMaxPhotonsPerTerm));
    }
    Occupation in(k);
    for (std::size_t j = 0; j < k; ++j) in[j] = occ[t.modes[j]];
    auto it = cache.find(in);
    if (it == cache.end()) it = cache.emplace(in, local_outputs(t.matrix, in)).first;
    for (const auto& [local_out, local_amp] : it->second) {
      Occupation o = occ;
      for (std::size_t j = 0; j < k; ++j) o[t.modes[j]] = local_out[j];
      out.add(o, amp * local_amp);
    }
  }
  return out;
}

QubitLayout QubitLayout::standard(std::size_t qubits) {
  QubitLayout layout;
  for (std::size_t q = 0; q < qubits; ++q) layout.qubits.push_back({2 * q, 2 * q + 1});
  return layout;
}

void QubitLayout::validate(std::size_t modes) const {
  std::set<std::size_t> used;
  auto claim = [&](std::size_t m) {
    if (m >= modes) throw InvalidArgument("layout mode " + std::to_string(m) + " out of range");
    if (!used.insert(m).second) throw InvalidArgument("layout reuses mode " + std::to_string(m));
  };
  for (const Rails& r : qubits) {
    claim(r.one);
    claim(r.zero);
  }
  for (std::size_t m : auxiliary) claim(m);
}

FockVector project_qubit_subspace(const FockVector& s, const QubitLayout& layout) {
  layout.validate(s.modes());
  std::vector<bool> rail(s.modes(), false);
  for (const Rails& r : layout.qubits) rail[r.one] = rail[r.zero] = true;
  FockVector out(s.modes());
  for (const auto& [occ, amp] : s.terms()) {
    bool keep = true;
    for (const Rails& r : layout.qubits) keep = keep && occ[r.one] + occ[r.zero] == 1;
    for (std::size_t m = 0; m < occ.size() && keep; ++m) keep = rail[m] || occ[m] == 0;
    if (keep) out.add(occ, amp);
  }
  return out;
}

StateVector to_qubit_state(const FockVector& s, const QubitLayout& layout) {
  const FockVector q = project_qubit_subspace(s, layout);
  const std::size_t n = layout.qubits.size();
  StateVector out{n, std::vector<Complex>(std::size_t{1} << n)};
  for (const auto& [occ, amp] : q.terms()) {
    std::size_t index = 0;
    for (const Rails& r : layout.qubits) index = (index << 1) | occ[r.one];
    out.amplitudes[index] = amp;
  }
  return out;
}

FockVector from_qubit_state(const StateVector& s, const QubitLayout& layout, std::size_t modes) {
  layout.validate(modes);
  if (s.qubits != layout.qubits.size()) throw InvalidArgument("layout and state disagree");
  FockVector out(modes);
  for (std::size_t x = 0; x < s.amplitudes.size(); ++x) {
    Occupation occ(modes, 0);
    for (std::size_t q = 0; q < s.qubits; ++q) {
      const bool one = (x >> (s.qubits - 1 - q)) & 1u;
      occ[one ? layout.qubits[q].one : layout.qubits[q].zero] = 1;
    }
    out.add(occ, s.amplitudes[x]);
  }
  return out;
}

ModeTransfer cz_lo_transfer() {
  enum { kAOne, kAZero, kBOne, kBZero, kAuxA, kAuxB };
  const double t = 1.0 / std::sqrt(3.0);
  const double r = std::sqrt(2.0 / 3.0);
  Eigen::MatrixXcd u = Eigen::MatrixXcd::Identity(6, 6);
  // The interfering 1/3 splitter meets a's |0> rail with b's |1> rail; the
  // other two rails are attenuated to 1/3 by dumping into vacuum modes.
  embed(u, splitter(t, r), kAZero, kBOne);
  embed(u, splitter(t, r), kAOne, kAuxA);
  embed(u, splitter(t, r), kBZero, kAuxB);
  Eigen::MatrixXcd phase = Eigen::MatrixXcd::Identity(6, 6);
  phase(kBOne, kBOne) = -1.0;
  return local(phase * u);
}

ModeTransfer cz_lo_subunitary() {
  ModeTransfer full = cz_lo_transfer();
  return local(full.matrix.topLeftCorner(4, 4));
}

ModeTransfer fusion_transfer() {
  enum { kAOne, kAZero, kBOne, kBZero };
  Eigen::MatrixXcd swap = Eigen::MatrixXcd::Identity(4, 4);
  swap(kAOne, kAOne) = swap(kBOne, kBOne) = 0.0;
  swap(kAOne, kBOne) = swap(kBOne, kAOne) = 1.0;
  const double h = 1.0 / std::sqrt(2.0);
  Eigen::MatrixXcd hadamard = Eigen::MatrixXcd::Identity(4, 4);
  hadamard(kAZero, kAZero) = h;
  hadamard(kAZero, kAOne) = h;
  hadamard(kAOne, kAZero) = h;
  hadamard(kAOne, kAOne) = -h;
  return local(hadamard * swap);
}

ModeTransfer hadamard_transfer() {
  const double h = 1.0 / std::sqrt(2.0);
  Eigen::MatrixXcd u(2, 2);
  u << -h, h, h, h;  // local modes (one, zero): |0> -> |+>, |1> -> |->
  return local(u);
}

std::vector<ModeTransfer> lc_transfer(const Rails& a, const std::vector<Rails>& neighbours) {
  const Complex i(0.0, 1.0);
  const double h = 1.0 / std::sqrt(2.0);
  std::vector<ModeTransfer> out;
  // Local modes (one, zero). sqrt(-iX) = h [[1, -i], [-i, 1]] in the (|0>, |1>) basis.
  Eigen::MatrixXcd root_x(2, 2);
  root_x << h, -i * h, -i * h, h;
  out.push_back(local(root_x).placed({a.one, a.zero}));
  Eigen::MatrixXcd root_z(2, 2);
  root_z << -i, 0.0, 0.0, 1.0;
  for (const Rails& nb : neighbours) out.push_back(local(root_z).placed({nb.one, nb.zero}));
  return out;
}

}  // namespace psgraph
