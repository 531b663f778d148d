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

#include "psgraph/explorer/explorer.hpp"

#include <cmath>
#include <cstdio>
#include <exception>
#include <functional>
#include <optional>
#include <sstream>
#include <thread>

#include "psgraph/errors.hpp"
#include "psgraph/scheme/rules.hpp"

namespace psgraph {

namespace {

constexpr std::size_t kBatch = 2048;

std::mt19937_64 derived_rng(std::uint64_t seed, std::uint64_t index, std::uint32_t stream) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32),
                    stream};
  return std::mt19937_64(seq);
}

struct Outcome {
  std::size_t class_id = 0;
  Recipe recipe;
};

class Sampler {
 public:
  Sampler(const Resource& r, const Catalogue& cat, const ExplorerOptions& options)
      : r_(r), cat_(cat), options_(options), fusion_budget_(max_orbit_diameter(cat)) {}

  bool shares_topologies() const { return r_.degenerate > 0; }

  // Topology shared by a block of experiments that redraw gate kinds and
  // local complementations; it passes full_verdict once for all of them.
  Scheme block_topology(std::size_t block) const {
    std::mt19937_64 rng = derived_rng(options_.seed, block, 1);
    return sample_topology(r_, rng);
  }
  std::size_t block_of(std::size_t k) const { return (k - 1) / options_.topology_reuse; }

  // Iteration k, counted from 1. `shared` is block_topology(block_of(k)) for
  // resources that share topologies and ignored otherwise.
  std::optional<Outcome> run(std::size_t k, const Scheme* shared) const {
    std::mt19937_64 rng = derived_rng(options_.seed, k, 0);
    Scheme topology;
    if (shares_topologies()) {
      topology = *shared;
      if ((k - 1) % options_.topology_reuse != 0) {
        for (Gate& g : topology.gates) {
          g.kind = std::bernoulli_distribution(0.5)(rng) ? GateKind::kFusion : GateKind::kCz;
        }
      }
    } else {
      topology = sample_topology(r_, rng);
    }
    Experiment e = run_experiment_on_graph(topology, fusion_budget_, rng);
    if (!e.graph.is_connected()) return std::nullopt;
    return Outcome{classify(cat_, e.graph), std::move(e.recipe)};
  }

 private:
  const Resource& r_;
  const Catalogue& cat_;
  const ExplorerOptions& options_;
  std::size_t fusion_budget_;
};

std::string format_double(double x) {
  char buffer[64];
  std::snprintf(buffer, sizeof buffer, "%.12g", x);
  return buffer;
}

}  // namespace

std::set<std::size_t> ExplorationReport::accessible() const {
  std::set<std::size_t> out;
  for (const auto& [id, recipe] : recipes) out.insert(id);
  return out;
}

ExplorationReport find_accessible_classes(const Resource& r, const Catalogue& cat,
                                          const ExplorerOptions& options) {
  r.validate();
  if (cat.order() != r.order()) {
    throw InvalidArgument("catalogue has order " + std::to_string(cat.order()) + " but " +
                          r.to_string() + " has " + std::to_string(r.order()) + " qubits");
  }
  if (!(options.d > 0.0 && options.d < 1.0)) throw InvalidArgument("d must lie in (0, 1)");
  if (options.topology_reuse == 0) throw InvalidArgument("topology reuse must be positive");

  ExplorationReport report;
  report.resource = r;
  report.seed = options.seed;
  report.d = options.d;
  const Sampler sampler(r, cat, options);
  const std::size_t jobs = std::max<std::size_t>(1, options.jobs);

  std::vector<std::optional<Outcome>> batch;
  while (report.iterations < options.max_iterations && !report.converged) {
    const std::size_t first = report.iterations + 1;
    const std::size_t size = std::min(kBatch, options.max_iterations - report.iterations);
    batch.assign(size, std::nullopt);
    std::vector<Scheme> topologies;
    std::size_t first_block = 0;
    if (sampler.shares_topologies()) {
      first_block = sampler.block_of(first);
      topologies.resize(sampler.block_of(first + size - 1) - first_block + 1);
    }
    auto parallel = [&](std::size_t count, const std::function<void(std::size_t)>& body) {
      std::vector<std::exception_ptr> errors(jobs);
      auto work = [&](std::size_t worker) {
        try {
          for (std::size_t x = worker; x < count; x += jobs) body(x);
        } catch (...) {
          errors[worker] = std::current_exception();
        }
      };
      if (jobs == 1) {
        work(0);
      } else {
        std::vector<std::thread> threads;
        for (std::size_t w = 0; w < jobs; ++w) threads.emplace_back(work, w);
        for (std::thread& t : threads) t.join();
      }
      for (const std::exception_ptr& e : errors) {
        if (e) std::rethrow_exception(e);
      }
    };
    parallel(topologies.size(),
             [&](std::size_t b) { topologies[b] = sampler.block_topology(first_block + b); });
    parallel(size, [&](std::size_t x) {
      const Scheme* shared = nullptr;
      if (!topologies.empty()) shared = &topologies[sampler.block_of(first + x) - first_block];
      batch[x] = sampler.run(first + x, shared);
    });

    for (std::size_t x = 0; x < size; ++x) {
      ++report.iterations;
      if (batch[x]) {
        auto [it, inserted] = report.recipes.emplace(batch[x]->class_id, batch[x]->recipe);
        if (inserted) {
          report.converged_at = report.iterations;
        } else if (better_recipe(batch[x]->recipe, it->second)) {
          it->second = std::move(batch[x]->recipe);
        }
      }
      if (report.iterations >= options.min_iterations &&
          static_cast<double>(report.converged_at) <
              (1.0 - options.d) * static_cast<double>(report.iterations)) {
        report.converged = true;
        break;
      }
    }
  }
  return report;
}

std::string render_report(const ExplorationReport& report) {
  std::ostringstream os;
  os << "PSGRAPH-REPORT v1\n";
  os << "resource " << report.resource.to_string() << '\n';
  os << "seed " << report.seed << '\n';
  os << "d " << format_double(report.d) << '\n';
  os << "iterations " << report.iterations << '\n';
  os << "converged_at " << report.converged_at << '\n';
  os << "converged " << (report.converged ? "yes" : "no") << '\n';
  os << "classes " << report.recipes.size() << '\n';
  os << "class_id;probability;recipe\n";
  for (const auto& [id, recipe] : report.recipes) {
    os << id << ';' << format_double(recipe.probability()) << ';' << recipe.to_string() << '\n';
  }
  return os.str();
}

ExplorationReport parse_report(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  auto next = [&](const std::string& what) {
    if (!std::getline(in, line)) throw FormatError("report ends before " + what);
    return line;
  };
  if (next("header") != "PSGRAPH-REPORT v1") {
    throw FormatError("not a version 1 report: '" + line + "'");
  }
  auto field = [&](const std::string& key) {
    next(key);
    if (line.rfind(key + ' ', 0) != 0) throw FormatError("expected '" + key + "', got '" + line + "'");
    return line.substr(key.size() + 1);
  };
  ExplorationReport r;
  try {
    r.resource = Resource::parse(field("resource"));
    r.seed = std::stoull(field("seed"));
    r.d = std::stod(field("d"));
    r.iterations = std::stoull(field("iterations"));
    r.converged_at = std::stoull(field("converged_at"));
    const std::string converged = field("converged");
    if (converged != "yes" && converged != "no") throw FormatError("converged must be yes or no");
    r.converged = converged == "yes";
    const std::size_t classes = std::stoull(field("classes"));
    if (next("column header") != "class_id;probability;recipe") {
      throw FormatError("missing column header");
    }
    for (std::size_t k = 0; k < classes; ++k) {
      next("class line " + std::to_string(k + 1));
      const std::size_t a = line.find(';');
      const std::size_t b = a == std::string::npos ? a : line.find(';', a + 1);
      if (b == std::string::npos) throw FormatError("class line needs three fields: " + line);
      const std::size_t id = std::stoull(line.substr(0, a));
      const double p = std::stod(line.substr(a + 1, b - a - 1));
      Recipe recipe = Recipe::parse(line.substr(b + 1));
      if (std::abs(p - recipe.probability()) > 1e-9 * recipe.probability()) {
        throw FormatError("class " + std::to_string(id) + " probability does not match its recipe");
      }
      if (!r.recipes.emplace(id, std::move(recipe)).second) {
        throw FormatError("class " + std::to_string(id) + " listed twice");
      }
    }
  } catch (const std::logic_error& e) {
    if (dynamic_cast<const FormatError*>(&e) != nullptr) throw;
    throw FormatError(std::string("malformed report: ") + e.what());
  }
  if (std::getline(in, line) && !line.empty()) throw FormatError("trailing data: " + line);
  return r;
}

std::vector<std::string> verify_report(const ExplorationReport& report, const Catalogue& cat) {
  std::vector<std::string> problems;
  if (cat.order() != report.resource.order()) {
    problems.push_back("catalogue order does not match the resource");
    return problems;
  }
  for (const auto& [id, recipe] : report.recipes) {
    const std::string tag = "class " + std::to_string(id) + ": ";
    try {
      const Scheme s = recipe_scheme(recipe, report.resource);
      if (full_verdict(s).fails()) problems.push_back(tag + "scheme is not postselectable");
      const Graph g = realised_graph(recipe, report.resource);
      if (!g.is_connected()) {
        problems.push_back(tag + "recipe yields a disconnected graph");
      } else if (classify(cat, g) != id) {
        problems.push_back(tag + "recipe yields class " + std::to_string(classify(cat, g)));
      }
    } catch (const std::exception& e) {
      problems.push_back(tag + e.what());
    }
  }
  return problems;
}

const std::vector<Table1Row>& table1_rows() {
  static const std::vector<Table1Row> rows = {
      {4, "2xND-EPP", "2 non-degenerate EPPs", 2, 2, true},
      {5, "2xND-EPP,1xSINGLE", "2 non-degenerate EPPs & 1 single photon", 3, 4, false},
      {5, "5xSINGLE", "5 single photons", 3, 4, true},
      {5, "2xDEG-EPP,1xSINGLE", "2 degenerate EPPs & 1 single photon", 4, 4, false},
      {6, "3xND-EPP", "3 non-degenerate EPPs", 6, 11, true},
      {6, "6xSINGLE", "6 single photons", 8, 11, true},
      {6, "3xDEG-EPP", "3 degenerate EPPs", 10, 11, true},
      {6, "2xBELL,2xSINGLE", "2 pairs & 2 single photons", 11, 11, true},
      {7, "3xND-EPP,1xSINGLE", "3 non-degenerate EPPs & 1 single photon", 15, 26, false},
      {7, "7xSINGLE", "7 single photons", 15, 26, true},
      {7, "1xBELL,5xSINGLE", "1 pair & 5 single photons", 22, 26, false},
      {7, "3xDEG-EPP,1xSINGLE", "3 degenerate EPPs & one single photon", 22, 26, false},
      {7, "2xBELL,3xSINGLE", "2 entangled pairs & 3 single photons", 26, 26, true},
      {8, "4xND-EPP", "4 non-degenerate EPPs", 29, 101, false},
      {8, "8xSINGLE", "8 single photons", 42, 101, false},
      {8, "1xBELL,6xSINGLE", "1 pair & 6 single photons", 73, 101, false},
      {8, "4xDEG-EPP", "4 degenerate EPPs", 72, 101, false},
      {8, "4xBELL", "4 entangled pairs", 99, 101, false},
      {9, "4xND-EPP,1xSINGLE", "4 non-degenerate EPP & one single photon", 85, 440, false},
      {9, "9xSINGLE", "9 single photons", 104, 440, false},
      {9, "4xBELL,1xSINGLE", "4 pairs & one single photon", 431, 440, false},
  };
  return rows;
}

}  // namespace psgraph
