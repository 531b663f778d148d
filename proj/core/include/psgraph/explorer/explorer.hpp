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
#include <cstdint>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "psgraph/classes/catalogue.hpp"
#include "psgraph/explorer/recipe.hpp"
#include "psgraph/explorer/resource.hpp"
#include "psgraph/scheme/scheme.hpp"

namespace psgraph {

inline constexpr std::uint64_t kDefaultSeed = 20180713;
inline constexpr std::size_t kMaxTopologyAttempts = 10000;
inline constexpr std::size_t kMaxCzLcs = 5;

// Random gate arrangement (edges, kinds, time order) allowed for the resource.
// Heralded resources: a subset of a random labelled tree on the qubits that
// connects the resource graph. Non-degenerate pairs and singles only: a
// random tree over the sources and singles, each edge joining a random qubit
// of either end. Anything else: the heralded sampler filtered through
// full_verdict. Throws GuardExceeded after kMaxTopologyAttempts rejections.
Scheme sample_topology(const Resource& r, std::mt19937_64& rng);

struct Experiment {
  Graph graph;
  Recipe recipe;
};

// Applies the scheme's gates to the resource graph in time order. After a CZ
// on (i,j): 0..5 local complementations alternating j, i, j, ... After a
// fusion: 0..fusion_lc_budget local complementations on random members of
// N(i) u N(j) u {i,j}, taken before the fusion.
Experiment run_experiment_on_graph(const Scheme& topology, std::size_t fusion_lc_budget,
                                   std::mt19937_64& rng);

struct ExplorerOptions {
  double d = 5.0 / 6.0;
  std::uint64_t seed = kDefaultSeed;
  // The convergence test is only applied from this many iterations on.
  std::size_t min_iterations = 20000;
  std::size_t max_iterations = 1000000;
  // Experiments drawn per sampled topology for resources with degenerate pairs.
  std::size_t topology_reuse = 50;
  std::size_t jobs = 1;
};

struct ExplorationReport {
  Resource resource;
  std::uint64_t seed = 0;
  double d = 0.0;
  std::size_t iterations = 0;
  std::size_t converged_at = 0;  // iteration of the last new class
  bool converged = false;
  std::map<std::size_t, Recipe> recipes;  // class id -> best recipe

  std::set<std::size_t> accessible() const;
};

// Monte-Carlo search for the classes a resource reaches. Stops once the last
// new class came before (1 - d) of the iterations, or at max_iterations.
// Iteration k draws from its own generator seeded by (seed, k), so the report
// does not depend on `jobs`.
ExplorationReport find_accessible_classes(const Resource& r, const Catalogue& cat,
                                          const ExplorerOptions& options = {});

std::string render_report(const ExplorationReport& report);
ExplorationReport parse_report(const std::string& text);

// Replays every recipe: its scheme must pass full_verdict, its probability
// must match, and its graph must classify to the recorded class. Returns one
// message per problem.
std::vector<std::string> verify_report(const ExplorationReport& report, const Catalogue& cat);

// Recipe for a tree from ceil(n/2) non-degenerate pairs, by repeatedly
// peeling a pendant path (undone by a CZ with a fresh pair) or two sibling
// leaves (undone by fusing a fresh pair). Odd trees are grown by a spare leaf
// that the recipe measures out.
Recipe tree_recipe(const Graph& target);
Resource tree_resource(std::size_t n);

struct ScanOptions {
  std::size_t lc_samples = 50;
  // Time orders are enumerated up to this many gates, sampled above.
  std::size_t max_exhaustive_gates = 6;
  std::size_t sampled_orders = 720;
};

// Classes one fixed gate topology reaches over gate kinds, postselectable
// time orders and local-complementation insertions. Throws InvalidArgument
// when the given scheme fails full_verdict.
std::set<std::size_t> fixed_interferometer_scan(const Scheme& topology, const Catalogue& cat,
                                                std::mt19937_64& rng,
                                                const ScanOptions& options = {});

struct Table1Row {
  std::size_t n = 0;
  std::string resource;   // Resource::to_string form
  std::string described;  // as worded in the published table
  std::size_t accessible = 0;
  std::size_t classes = 0;
  bool acceptance = false;  // part of the reproduction target
};

const std::vector<Table1Row>& table1_rows();

}  // namespace psgraph
