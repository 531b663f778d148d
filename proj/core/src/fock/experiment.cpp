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

#include "psgraph/errors.hpp"
#include "psgraph/fock/fock.hpp"

namespace psgraph {
namespace {

void patterns(std::size_t sources, std::size_t remaining, std::vector<std::size_t>& current,
              std::vector<std::vector<std::size_t>>& out) {
  if (current.size() + 1 == sources) {
    current.push_back(remaining);
    out.push_back(current);
    current.pop_back();
    return;
  }
  for (std::size_t k = remaining + 1; k-- > 0;) {
    current.push_back(k);
    patterns(sources, remaining - k, current, out);
    current.pop_back();
  }
}

// sum_j |j, k-j, j, k-j> on modes (a.one, a.zero, b.one, b.zero).
FockVector pair_term(std::size_t k) {
  FockVector v(4);
  for (std::size_t j = 0; j <= k; ++j) {
    const auto x = static_cast<std::uint8_t>(j);
    const auto y = static_cast<std::uint8_t>(k - j);
    v.add({x, y, x, y}, 1.0);
  }
  return v;
}

}  // namespace

std::vector<std::vector<std::size_t>> firing_patterns(std::size_t sources, std::size_t total) {
  std::vector<std::vector<std::size_t>> out;
  if (sources == 0) return out;
  std::vector<std::size_t> current;
  patterns(sources, total, current, out);
  return out;
}

FockVector epp_source_state(std::size_t sources, std::size_t total_pairs, bool degenerate) {
  // Non-degenerate sources carry a colour per qubit, but colour-consistent
  // gates never mix colours, so both flavours share this mode description.
  (void)degenerate;
  if (sources == 0) throw InvalidArgument("need at least one source");
  if (sources > kMaxSourcePairs || total_pairs > kMaxSourcePairs) {
    throw GuardExceeded("pair sources support at most " + std::to_string(kMaxSourcePairs) +
                        " sources and pairs");
  }
  FockVector out(4 * sources);
  for (const auto& pattern : firing_patterns(sources, total_pairs)) {
    FockVector term = pair_term(pattern[0]);
    for (std::size_t s = 1; s < sources; ++s) term = tensor(term, pair_term(pattern[s]));
    for (const auto& [occ, amp] : term.terms()) out.add(occ, amp);
  }
  return out;
}

ExperimentResult run_experiment(const FockVector& initial, const std::vector<ModeTransfer>& gates,
                                const QubitLayout& layout) {
  layout.validate(initial.modes());
  FockVector state = initial;
  for (const ModeTransfer& g : gates) state = apply_transfer(state, g);
  ExperimentResult result;
  result.postselected = project_qubit_subspace(state, layout);
  result.probability = result.postselected.squared_norm();
  return result;
}

}  // namespace psgraph
