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

#include <map>
#include <random>
#include <sstream>

#include "psgraph/errors.hpp"
#include "psgraph/fock/fock.hpp"
#include "psgraph/scheme/rules.hpp"

namespace psgraph {

namespace {

using Counts = std::vector<std::uint8_t>;

// The all-ones pattern is the wanted term. Its branches only count when they
// leave the one-photon-per-qubit subspace and come back, which is how a gate
// cycle scrambles. Every other pattern fails as soon as it lands there.
struct Node {
  Counts counts;
  bool left = false;
  std::size_t parent = 0;
  std::size_t gate = 0;
};

bool all_ones(const Counts& c) {
  for (std::uint8_t x : c) {
    if (x != 1) return false;
  }
  return true;
}

struct Setup {
  std::vector<Source> pairs;
  std::vector<Gate> gates;
};

Setup prepare(const Scheme& s) {
  Setup setup;
  for (const Source& src : s.sources) {
    if (src.is_epp()) setup.pairs.push_back(src);
  }
  setup.gates = s.gates_in_time_order();
  return setup;
}

Counts initial_counts(const Scheme& s, const Setup& setup, const std::vector<std::size_t>& k) {
  Counts c(s.qubits, 1);
  for (std::size_t p = 0; p < setup.pairs.size(); ++p) {
    c[setup.pairs[p].a] = static_cast<std::uint8_t>(k[p]);
    c[setup.pairs[p].b] = static_cast<std::uint8_t>(k[p]);
  }
  return c;
}

std::string pattern_text(const std::vector<std::size_t>& k) {
  std::string s = "(";
  for (std::size_t p = 0; p < k.size(); ++p) {
    if (p > 0) s += ',';
    s += std::to_string(k[p]);
  }
  return s + ")";
}

std::string trace_text(const std::vector<Node>& nodes, std::size_t leaf, const Setup& setup) {
  std::vector<std::size_t> chain;
  for (std::size_t x = leaf; x != 0; x = nodes[x].parent) chain.push_back(x);
  std::string s;
  for (auto it = chain.rbegin(); it != chain.rend(); ++it) {
    const Node& node = nodes[*it];
    const Gate& g = setup.gates[node.gate];
    const Counts& before = nodes[node.parent].counts;
    if (before[g.i] == node.counts[g.i]) continue;
    std::ostringstream os;
    os << "; gate " << g.time << " moves " << int(before[g.i]) << ',' << int(before[g.j])
       << " -> " << int(node.counts[g.i]) << ',' << int(node.counts[g.j]) << " on " << g.i << '-'
       << g.j;
    s += os.str();
  }
  return s;
}

// Index of a node that ends in a failing state, or 0.
std::size_t search(const Counts& start, bool junk, const Setup& setup, std::vector<Node>& nodes) {
  nodes.clear();
  nodes.push_back({start, junk, 0, 0});
  std::vector<std::size_t> frontier{0};
  for (std::size_t t = 0; t < setup.gates.size(); ++t) {
    const Gate& g = setup.gates[t];
    std::map<std::pair<Counts, bool>, std::size_t> next;
    for (std::size_t idx : frontier) {
      const Counts base = nodes[idx].counts;
      const int total = base[g.i] + base[g.j];
      for (int x = total; x >= 0; --x) {
        Counts c = base;
        c[g.i] = static_cast<std::uint8_t>(x);
        c[g.j] = static_cast<std::uint8_t>(total - x);
        bool left = nodes[idx].left || !all_ones(c);
        auto key = std::make_pair(c, left);
        if (next.count(key) != 0) continue;
        nodes.push_back({std::move(c), left, idx, t});
        next.emplace(std::move(key), nodes.size() - 1);
      }
    }
    frontier.clear();
    for (const auto& [key, idx] : next) frontier.push_back(idx);
  }
  for (std::size_t idx : frontier) {
    if (nodes[idx].left && all_ones(nodes[idx].counts)) return idx;
  }
  return 0;
}

Verdict oracle_failure(const std::vector<std::size_t>& k, const std::string& trace) {
  Verdict v;
  v.result = Postselectable::kFails;
  v.witnesses.push_back({"photon redistribution", "firing pattern " + pattern_text(k) + trace});
  return v;
}

Verdict sampled_oracle(const Scheme& s, const Setup& setup) {
  std::mt19937_64 rng(0x70736772u);
  const std::size_t m = setup.pairs.size();
  std::vector<std::vector<std::size_t>> patterns = firing_patterns(m, m);
  if (m == 0) patterns.emplace_back();
  std::uniform_int_distribution<std::size_t> pick(0, patterns.size() - 1);
  for (std::size_t sample = 0; sample < kFallbackSamples; ++sample) {
    const auto& k = patterns[pick(rng)];
    Counts c = initial_counts(s, setup, k);
    bool left = !all_ones(c);
    std::string trace;
    for (const Gate& g : setup.gates) {
      const int total = c[g.i] + c[g.j];
      std::uniform_int_distribution<int> split(0, total);
      const int x = split(rng);
      if (x != c[g.i]) {
        std::ostringstream os;
        os << "; gate " << g.time << " moves " << int(c[g.i]) << ',' << int(c[g.j]) << " -> " << x
           << ',' << total - x << " on " << g.i << '-' << g.j;
        trace += os.str();
      }
      c[g.i] = static_cast<std::uint8_t>(x);
      c[g.j] = static_cast<std::uint8_t>(total - x);
      left = left || !all_ones(c);
    }
    if (left && all_ones(c)) return oracle_failure(k, trace);
  }
  Verdict v;
  v.result = Postselectable::kPassesNecessary;
  v.witnesses.push_back({"sampling", std::to_string(kFallbackSamples) +
                                         " random runs above the exhaustive guard, none failed"});
  return v;
}

}  // namespace

Verdict degenerate_oracle(const Scheme& s) {
  const Setup setup = prepare(s);
  const std::size_t m = setup.pairs.size();
  if (m > kMaxOracleSources || setup.gates.size() > kMaxOracleGates) return sampled_oracle(s, setup);

  std::vector<std::vector<std::size_t>> patterns = firing_patterns(m, m);
  if (m == 0) patterns.emplace_back();
  std::vector<Node> nodes;
  for (const auto& k : patterns) {
    const Counts start = initial_counts(s, setup, k);
    const std::size_t hit = search(start, !all_ones(start), setup, nodes);
    if (hit != 0) return oracle_failure(k, trace_text(nodes, hit, setup));
  }
  // No analytic sufficiency is known for degenerate sources.
  Verdict v;
  v.result = Postselectable::kPassesNecessary;
  return v;
}

}  // namespace psgraph
