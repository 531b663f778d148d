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

#include <gtest/gtest.h>

#include <cmath>
#include <map>
#include <numeric>
#include <random>
#include <set>

#include "oracles.hpp"
#include "psgraph/errors.hpp"
#include "psgraph/graphs/canonical.hpp"
#include "psgraph/graphs/cycles.hpp"
#include "psgraph/graphs/enumerate.hpp"
#include "psgraph/graphs/graph.hpp"
#include "psgraph/graphs/statevector.hpp"
#include "psgraph/graphs/trees.hpp"

namespace psgraph {
namespace {

Graph random_graph(std::size_t n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  Graph g(n);
  for (VertexId i = 0; i < n; ++i) {
    for (VertexId j = i + 1; j < n; ++j) {
      if (coin(rng)) g.set_edge(i, j, true);
    }
  }
  return g;
}

Graph random_connected_graph(std::size_t n, std::mt19937_64& rng) {
  Graph g = random_labelled_tree(n, rng);
  Graph extra = random_graph(n, 0.3, rng);
  for (const auto& [i, j] : extra.edges()) g.set_edge(i, j, true);
  return g;
}

bool states_equal(const StateVector& a, const StateVector& b, double tol = 1e-12) {
  if (a.qubits != b.qubits) return false;
  for (std::size_t x = 0; x < a.amplitudes.size(); ++x) {
    if (std::abs(a.amplitudes[x] - b.amplitudes[x]) > tol) return false;
  }
  return true;
}

TEST(Graph, TextRoundTrip) {
  Graph g = Graph::parse("5;0-1,1-2,3-4,0-4");
  EXPECT_EQ(g.to_string(), "5;0-1,0-4,1-2,3-4");
  EXPECT_EQ(Graph::parse(g.to_string()), g);
  EXPECT_EQ(Graph::parse("3;").edge_count(), 0u);
  EXPECT_THROW(Graph::parse("3;0-3"), InvalidArgument);
  EXPECT_THROW(Graph::parse("3;1-1"), InvalidArgument);
  EXPECT_THROW(Graph::parse("3 0-1"), InvalidArgument);
  EXPECT_THROW(Graph::parse("x;0-1"), InvalidArgument);
}

TEST(Graph, EncodeDecode) {
  Graph g(4);
  g.set_edge(0, 1, true);
  EXPECT_EQ(g.encode(), 0b100000u);
  g = Graph(4);
  g.set_edge(2, 3, true);
  EXPECT_EQ(g.encode(), 0b000001u);
  for (std::uint64_t code = 0; code < 64; ++code) {
    EXPECT_EQ(Graph::decode(4, code).encode(), code);
  }
  EXPECT_THROW(Graph::decode(3, 8), InvalidArgument);
}

TEST(LocalComplement, PathBecomesTriangle) {
  Graph p3 = path_graph(3);
  EXPECT_EQ(local_complement(p3, 1), complete_graph(3));
  EXPECT_EQ(local_complement(p3, 0), p3);
}

TEST(LocalComplement, TogglesOnlyNeighbourhoodEdges) {
  // Six-vertex graph with a degree-3 vertex 0 whose neighbours {1,2,3} share one edge.
  Graph g = Graph::parse("6;0-1,0-2,0-3,1-2,3-4,4-5,2-5");
  Graph h = local_complement(g, 0);
  for (VertexId i = 0; i < 6; ++i) {
    for (VertexId j = i + 1; j < 6; ++j) {
      bool among = i >= 1 && i <= 3 && j >= 1 && j <= 3;
      EXPECT_EQ(h.has_edge(i, j), among ? !g.has_edge(i, j) : g.has_edge(i, j)) << i << "-" << j;
    }
  }
}

TEST(LocalComplement, IsInvolutionOnAllSmallGraphs) {
  for (std::size_t n = 1; n <= 5; ++n) {
    for (const Graph& g : oracle::all_graphs(n)) {
      for (VertexId a = 0; a < n; ++a) EXPECT_EQ(local_complement(local_complement(g, a), a), g);
    }
  }
  EXPECT_THROW(local_complement(Graph(3), 3), InvalidArgument);
}

TEST(CzToggle, Examples) {
  Graph g = cz_toggle(Graph(2), 0, 1);
  EXPECT_EQ(g, complete_graph(2));
  EXPECT_EQ(cz_toggle(g, 1, 0), Graph(2));
  EXPECT_THROW(cz_toggle(g, 1, 1), InvalidArgument);
}

TEST(CzToggle, MatchesStateLevelOperator) {
  for (std::size_t n = 2; n <= 5; ++n) {
    for (const Graph& g : oracle::all_graphs(n)) {
      StateVector s = statevector(g);
      for (VertexId i = 0; i < n; ++i) {
        for (VertexId j = 0; j < n; ++j) {
          if (i == j) continue;
          EXPECT_TRUE(states_equal(statevector(cz_toggle(g, i, j)),
                                   apply_qubit_operator(s, cz_matrix(), i, j)));
        }
      }
    }
  }
}

TEST(Fuse, TwoPairsMakeStar) {
  Graph pairs = Graph::parse("4;0-1,2-3");
  Graph h = fuse(pairs, 1, 2);
  EXPECT_EQ(h, Graph::parse("4;0-2,1-2,2-3"));
}

TEST(Fuse, IsolatedVerticesBecomeEdge) {
  EXPECT_EQ(fuse(Graph(2), 0, 1), complete_graph(2));
  StateVector out = apply_qubit_operator(plus_state(2), fusion_qubit_matrix(), 0, 1);
  StateVector expected = statevector(complete_graph(2));
  for (auto& a : expected.amplitudes) a /= std::sqrt(2.0);
  EXPECT_TRUE(states_equal(out, expected));
  EXPECT_NEAR(out.squared_norm(), 0.5, 1e-15);
  EXPECT_THROW(fuse(Graph(2), 0, 0), InvalidArgument);
}

TEST(Fuse, MatchesStateLevelOperatorUpToPauliZ) {
  Eigen::Matrix2cd z = Eigen::Matrix2cd::Identity();
  z(1, 1) = -1.0;
  for (std::size_t n = 2; n <= 5; ++n) {
    for (const Graph& g : oracle::all_graphs(n)) {
      StateVector s = statevector(g);
      for (VertexId i = 0; i < n; ++i) {
        for (VertexId j = 0; j < n; ++j) {
          if (i == j) continue;
          StateVector out = apply_qubit_operator(s, fusion_qubit_matrix(), i, j);
          ASSERT_NEAR(out.squared_norm(), 0.5, 1e-12);
          StateVector predicted = statevector(fuse(g, i, j));
          // The residual byproduct of fusing adjacent qubits is Z on the second qubit.
          if (g.has_edge(i, j)) predicted = apply_single_qubit(predicted, z, j);
          for (auto& a : predicted.amplitudes) a /= std::sqrt(2.0);
          ASSERT_TRUE(states_equal(out, predicted)) << g.to_string() << " fuse " << i << "," << j;
        }
      }
    }
  }
}

TEST(StateVector, Examples) {
  StateVector pair = statevector(complete_graph(2));
  ASSERT_EQ(pair.amplitudes.size(), 4u);
  EXPECT_EQ(pair.amplitudes[0], Complex(0.5));
  EXPECT_EQ(pair.amplitudes[1], Complex(0.5));
  EXPECT_EQ(pair.amplitudes[2], Complex(0.5));
  EXPECT_EQ(pair.amplitudes[3], Complex(-0.5));

  for (const Complex& a : statevector(Graph(4)).amplitudes) EXPECT_DOUBLE_EQ(a.real(), 0.25);

  // Triangle: a basis string is negative iff it selects an odd number of edges.
  StateVector tri = statevector(complete_graph(3));
  const std::set<std::size_t> negative = {0b011, 0b101, 0b110, 0b111};
  for (std::size_t x = 0; x < 8; ++x) {
    int ones = __builtin_popcount(static_cast<unsigned>(x));
    int selected_edges = ones * (ones - 1) / 2;
    EXPECT_EQ(tri.amplitudes[x].real() < 0, selected_edges % 2 == 1);
    EXPECT_EQ(tri.amplitudes[x].real() < 0, negative.count(x) == 1) << x;
  }
  EXPECT_THROW(statevector(Graph(15)), GuardExceeded);
}

TEST(StateVector, EqualWeight) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    StateVector s = statevector(random_graph(6, 0.5, rng));
    for (const Complex& a : s.amplitudes) EXPECT_NEAR(std::abs(a), 0.125, 1e-15);
    EXPECT_NEAR(s.squared_norm(), 1.0, 1e-12);
  }
}

TEST(ApplyQubitOperator, Examples) {
  StateVector s = statevector(path_graph(3));
  EXPECT_TRUE(states_equal(apply_qubit_operator(s, Eigen::Matrix4cd::Identity(), 0, 2), s));
  EXPECT_TRUE(states_equal(apply_qubit_operator(plus_state(2), cz_matrix(), 0, 1),
                           statevector(complete_graph(2))));
  EXPECT_NEAR(apply_qubit_operator(plus_state(2), fusion_qubit_matrix(), 0, 1).squared_norm(),
              0.5, 1e-15);
  EXPECT_THROW(apply_qubit_operator(s, cz_matrix(), 0, 3), InvalidArgument);
  StateVector bad{3, std::vector<Complex>(5)};
  EXPECT_THROW(apply_qubit_operator(bad, cz_matrix(), 0, 1), InvalidArgument);
}

TEST(Canonical, RelabelledCycleIsInvariant) {
  Graph c5 = cycle_graph(5);
  std::vector<VertexId> perm = {0, 1, 2, 3, 4};
  const std::uint64_t code = canonical_code(c5);
  do {
    EXPECT_EQ(canonical_code(c5.relabelled(perm)), code);
  } while (std::next_permutation(perm.begin(), perm.end()));
  EXPECT_NE(canonical_code(path_graph(4)), canonical_code(star_graph(4)));
}

TEST(Canonical, AgreesWithBruteForceUpToSix) {
  for (std::size_t n = 1; n <= 6; ++n) {
    std::map<std::uint64_t, std::uint64_t> ours_to_brute;
    std::map<std::uint64_t, std::uint64_t> brute_to_ours;
    for (const Graph& g : oracle::all_graphs(n)) {
      CanonicalForm cf = canonical_form(g);
      ASSERT_EQ(cf.graph, g.relabelled(cf.relabel));
      ASSERT_EQ(cf.graph.encode(), cf.code);
      ASSERT_EQ(canonical_code(cf.graph), cf.code);
      const std::uint64_t brute = oracle::brute_force_canonical_code(g);
      auto [it, fresh] = ours_to_brute.emplace(cf.code, brute);
      ASSERT_EQ(it->second, brute);
      auto [jt, fresh2] = brute_to_ours.emplace(brute, cf.code);
      ASSERT_EQ(jt->second, cf.code);
    }
  }
}

TEST(Canonical, InvariantUnderRandomRelabellingUpToTen) {
  std::mt19937_64 rng(11);
  for (std::size_t n = 7; n <= 10; ++n) {
    for (int trial = 0; trial < 200; ++trial) {
      Graph g = random_graph(n, trial % 2 ? 0.5 : 0.3, rng);
      std::vector<VertexId> perm(n);
      std::iota(perm.begin(), perm.end(), 0);
      std::shuffle(perm.begin(), perm.end(), rng);
      ASSERT_EQ(canonical_code(g), canonical_code(g.relabelled(perm)));
    }
  }
  // Highly symmetric inputs.
  for (std::size_t n = 2; n <= 10; ++n) {
    EXPECT_EQ(canonical_code(complete_graph(n)), (std::uint64_t{1} << (n * (n - 1) / 2)) - 1);
    EXPECT_EQ(canonical_code(Graph(n)), 0u);
  }
  EXPECT_THROW(canonical_form(Graph(11)), GuardExceeded);
}

TEST(Enumerate, ConnectedCountsMatchBruteForce) {
  for (std::size_t n = 1; n <= 6; ++n) {
    std::set<std::uint64_t> brute;
    for (const Graph& g : oracle::all_graphs(n)) {
      if (g.is_connected()) brute.insert(oracle::brute_force_canonical_code(g));
    }
    EXPECT_EQ(connected_graph_codes(n).size(), brute.size()) << "n=" << n;
  }
  EXPECT_EQ(connected_graph_codes(6).size(), 112u);
}

TEST(Trees, Pruefer) {
  std::mt19937_64 rng(3);
  EXPECT_EQ(random_labelled_tree(2, rng), complete_graph(2));
  EXPECT_THROW(random_labelled_tree(1, rng), InvalidArgument);

  auto trees = all_labelled_trees(4);
  std::set<std::uint64_t> codes;
  for (const Graph& t : trees) {
    EXPECT_TRUE(t.is_tree());
    codes.insert(t.encode());
    EXPECT_EQ(prufer_decode(prufer_encode(t), 4), t);
  }
  EXPECT_EQ(codes.size(), 16u);

  std::set<std::uint64_t> brute;
  for (const Graph& g : oracle::all_graphs(4)) {
    if (g.is_tree()) brute.insert(g.encode());
  }
  EXPECT_EQ(codes, brute);
}

TEST(Trees, UniformChiSquare) {
  std::mt19937_64 rng(2026);
  std::map<std::uint64_t, int> counts;
  const int samples = 100000;
  for (int s = 0; s < samples; ++s) ++counts[random_labelled_tree(4, rng).encode()];
  ASSERT_EQ(counts.size(), 16u);
  double chi2 = 0.0;
  const double expected = samples / 16.0;
  for (const auto& [code, c] : counts) chi2 += (c - expected) * (c - expected) / expected;
  // 99th percentile of chi-square with 15 degrees of freedom.
  EXPECT_LT(chi2, 30.578);
}

TEST(Trees, UnlabelledCounts) {
  const std::size_t expected[] = {1, 1, 1, 2, 3, 6, 11, 23, 47};
  for (std::size_t n = 1; n <= 9; ++n) {
    auto trees = unlabelled_trees(n);
    EXPECT_EQ(trees.size(), expected[n - 1]) << "n=" << n;
    for (const Graph& t : trees) EXPECT_TRUE(t.is_tree());
  }
}

TEST(Cycles, Examples) {
  std::mt19937_64 rng(5);
  EXPECT_TRUE(enumerate_simple_cycles(random_labelled_tree(7, rng)).empty());
  auto tri = enumerate_simple_cycles(complete_graph(3));
  ASSERT_EQ(tri.size(), 1u);
  EXPECT_EQ(tri[0].size(), 3u);
  EXPECT_EQ(enumerate_simple_cycles(complete_graph(4)).size(), 7u);
  EXPECT_THROW(enumerate_simple_cycles(Graph(17)), GuardExceeded);
}

TEST(Cycles, AgreesWithBruteForce) {
  for (std::size_t n = 3; n <= 5; ++n) {
    for (const Graph& g : oracle::all_graphs(n)) {
      auto cycles = enumerate_simple_cycles(g);
      ASSERT_EQ(cycles.size(), oracle::brute_force_cycle_count(g)) << g.to_string();
      std::set<std::vector<std::size_t>> unique(cycles.begin(), cycles.end());
      ASSERT_EQ(unique.size(), cycles.size());
    }
  }
  EXPECT_EQ(enumerate_simple_cycles(complete_graph(6)).size(), 197u);
}

TEST(Cycles, ParallelEdgesFormTwoCycles) {
  Multigraph g{3, {{0, 1}, {0, 1}, {1, 2}, {1, 2}, {0, 1}}};
  // Pairs among the three 0-1 edges, plus the single 1-2 pair.
  EXPECT_EQ(enumerate_simple_cycles(g).size(), 4u);
  Multigraph loop{2, {{0, 0}, {0, 1}}};
  EXPECT_TRUE(enumerate_simple_cycles(loop).empty());
}

TEST(RewriteIdentities, AlternatingLcHasPeriodAtMostSix) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 300; ++trial) {
    Graph g = random_connected_graph(3 + trial % 6, rng);
    for (const auto& [i, j] : g.edges()) {
      Graph h = g;
      int period = 0;
      do {
        h = local_complement(h, period % 2 == 0 ? j : i);
        ++period;
      } while (!(h == g) && period <= 6);
      EXPECT_LE(period, 6);
    }
  }
}

TEST(RewriteIdentities, CzCommutesWithDistantLc) {
  std::mt19937_64 rng(19);
  for (int trial = 0; trial < 2000; ++trial) {
    std::size_t n = 3 + trial % 6;
    Graph g = random_graph(n, 0.5, rng);
    std::uniform_int_distribution<VertexId> pick(0, n - 1);
    VertexId i = pick(rng), j = pick(rng), a = pick(rng);
    if (i == j || a == i || a == j) continue;
    EXPECT_EQ(cz_toggle(local_complement(g, a), i, j), local_complement(cz_toggle(g, i, j), a));
  }
}

}  // namespace
}  // namespace psgraph
