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

#include "oracles.hpp"

#include <Eigen/QR>
#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <random>
#include <set>

namespace psgraph::oracle {

std::uint64_t brute_force_canonical_code(const Graph& g) {
  std::vector<VertexId> perm(g.order());
  std::iota(perm.begin(), perm.end(), 0);
  std::uint64_t best = ~std::uint64_t{0};
  do {
    best = std::min(best, g.relabelled(perm).encode());
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

std::size_t brute_force_cycle_count(const Graph& g) {
  // Count each cycle as a cyclic vertex sequence starting at its minimum,
  // divided by the two orientations.
  const std::size_t n = g.order();
  std::size_t twice = 0;
  for (std::uint32_t subset = 1; subset < (1u << n); ++subset) {
    std::vector<VertexId> vs;
    for (VertexId v = 0; v < n; ++v) {
      if ((subset >> v) & 1u) vs.push_back(v);
    }
    if (vs.size() < 3) continue;
    std::vector<VertexId> rest(vs.begin() + 1, vs.end());
    do {
      bool ok = g.has_edge(vs[0], rest.front()) && g.has_edge(rest.back(), vs[0]);
      for (std::size_t k = 0; ok && k + 1 < rest.size(); ++k) ok = g.has_edge(rest[k], rest[k + 1]);
      if (ok) ++twice;
    } while (std::next_permutation(rest.begin(), rest.end()));
  }
  return twice / 2;
}

std::vector<Graph> all_graphs(std::size_t n) {
  std::vector<Graph> out;
  const std::size_t bits = n * (n - 1) / 2;
  for (std::uint64_t code = 0; code < (std::uint64_t{1} << bits); ++code) {
    out.push_back(Graph::decode(n, code));
  }
  return out;
}

}  // namespace psgraph::oracle

namespace psgraph::oracle {

Complex permanent_by_permutations(const Eigen::MatrixXcd& m) {
  std::vector<int> perm(static_cast<std::size_t>(m.rows()));
  std::iota(perm.begin(), perm.end(), 0);
  Complex total = 0.0;
  do {
    Complex prod = 1.0;
    for (std::size_t i = 0; i < perm.size(); ++i) prod *= m(static_cast<Eigen::Index>(i), perm[i]);
    total += prod;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

FockVector apply_transfer_by_creation_operators(const FockVector& s, const ModeTransfer& t) {
  auto factorial = [](int k) {
    double f = 1.0;
    for (int i = 2; i <= k; ++i) f *= i;
    return f;
  };
  FockVector out(s.modes());
  for (const auto& [occ, amp] : s.terms()) {
    // Polynomial in creation operators: monomial exponents -> coefficient.
    std::map<Occupation, Complex> poly = {{Occupation(s.modes(), 0), 1.0}};
    double in_norm = 1.0;
    for (std::size_t mode = 0; mode < occ.size(); ++mode) {
      in_norm *= factorial(occ[mode]);
      auto acted = std::find(t.modes.begin(), t.modes.end(), mode);
      for (int photon = 0; photon < occ[mode]; ++photon) {
        std::map<Occupation, Complex> next;
        for (const auto& [mono, c] : poly) {
          if (acted == t.modes.end()) {
            Occupation m2 = mono;
            ++m2[mode];
            next[m2] += c;
            continue;
          }
          const auto col = acted - t.modes.begin();
          for (std::size_t row = 0; row < t.modes.size(); ++row) {
            Occupation m2 = mono;
            ++m2[t.modes[row]];
            next[m2] += c * t.matrix(static_cast<Eigen::Index>(row), col);
          }
        }
        poly = std::move(next);
      }
    }
    for (const auto& [mono, c] : poly) {
      double out_norm = 1.0;
      for (auto k : mono) out_norm *= factorial(k);
      out.add(mono, amp * c * std::sqrt(out_norm / in_norm));
    }
  }
  return out;
}

Eigen::MatrixXcd random_unitary(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss;
  Eigen::MatrixXcd a(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a(i, j) = Complex(gauss(rng), gauss(rng));
  }
  Eigen::HouseholderQR<Eigen::MatrixXcd> qr(a);
  return qr.householderQ() * Eigen::MatrixXcd::Identity(n, n);
}

}  // namespace psgraph::oracle
