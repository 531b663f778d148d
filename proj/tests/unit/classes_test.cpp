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

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <numeric>
#include <random>
#include <map>
#include <set>

#include "psgraph/classes/catalogue.hpp"
#include "psgraph/errors.hpp"
#include "psgraph/graphs/canonical.hpp"
#include "psgraph/graphs/enumerate.hpp"
#include "psgraph/graphs/trees.hpp"

namespace psgraph {
namespace {

const Catalogue& catalogue(std::size_t n) {
  static std::map<std::size_t, Catalogue> cache;
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, build_catalogue(n)).first;
  return it->second;
}

bool orbit_contains(const std::vector<OrbitMember>& orbit, std::uint64_t code) {
  return std::any_of(orbit.begin(), orbit.end(),
                     [code](const OrbitMember& m) { return m.code == code; });
}

Graph random_connected(std::size_t n, std::mt19937_64& rng) {
  Graph g = random_labelled_tree(n, rng);
  std::bernoulli_distribution coin(0.35);
  for (VertexId i = 0; i < n; ++i) {
    for (VertexId j = i + 1; j < n; ++j) {
      if (coin(rng)) g.set_edge(i, j, true);
    }
  }
  return g;
}

TEST(LcOrbit, Examples) {
  auto pair = lc_orbit(complete_graph(2));
  ASSERT_EQ(pair.size(), 1u);
  EXPECT_EQ(pair[0].distance, 0u);

  auto p3 = lc_orbit(path_graph(3));
  ASSERT_EQ(p3.size(), 2u);
  std::set<std::uint64_t> codes = {p3[0].code, p3[1].code};
  EXPECT_EQ(codes, (std::set<std::uint64_t>{canonical_code(path_graph(3)),
                                            canonical_code(complete_graph(3))}));

  for (std::size_t n = 3; n <= 8; ++n) {
    auto orbit = lc_orbit(star_graph(n));
    EXPECT_TRUE(orbit_contains(orbit, canonical_code(complete_graph(n)))) << "n=" << n;
    EXPECT_EQ(orbit.size(), 2u);
  }
  EXPECT_THROW(lc_orbit(Graph(11)), GuardExceeded);
}

TEST(BuildCatalogue, OrderFourHasStarAndPath) {
  const Catalogue& c = catalogue(4);
  ASSERT_EQ(c.classes().size(), 2u);
  EXPECT_EQ(c.classes()[0].class_id, 3u);
  EXPECT_EQ(c.classes()[1].class_id, 4u);
  std::set<std::uint64_t> reps;
  for (const auto& r : c.classes()) {
    EXPECT_EQ(r.representative.edge_count(), 3u);
    reps.insert(r.representative.encode());
  }
  EXPECT_EQ(reps, (std::set<std::uint64_t>{canonical_code(star_graph(4)),
                                           canonical_code(path_graph(4))}));
  EXPECT_EQ(c.lookup().size(), 6u);
}

TEST(BuildCatalogue, ClassCountsAndPartition) {
  const std::size_t classes[] = {1, 1, 2, 4, 11, 26};
  const std::size_t connected[] = {1, 2, 6, 21, 112, 853};
  std::size_t next_id = 1;
  for (std::size_t n = 2; n <= 7; ++n) {
    const Catalogue& c = catalogue(n);
    EXPECT_EQ(c.classes().size(), classes[n - 2]) << "n=" << n;
    EXPECT_EQ(c.first_class_id(), next_id);
    next_id += c.classes().size();
    std::size_t total = 0;
    for (const auto& r : c.classes()) {
      EXPECT_GE(r.member_count, 1u);
      total += r.member_count;
      // Representative has the fewest edges among its members.
      for (const auto& [code, id] : c.lookup()) {
        if (id == r.class_id) {
          EXPECT_LE(r.representative.edge_count(),
                    static_cast<std::size_t>(__builtin_popcountll(code)));
        }
      }
    }
    EXPECT_EQ(total, connected[n - 2]);
    EXPECT_EQ(c.lookup().size(), connected_graph_codes(n).size());
  }
  EXPECT_THROW(build_catalogue(1), GuardExceeded);
  EXPECT_THROW(build_catalogue(10), GuardExceeded);
}

TEST(BuildCatalogue, IsDeterministic) {
  EXPECT_EQ(render_catalogue(build_catalogue(6)), render_catalogue(catalogue(6)));
}

TEST(BuildCatalogue, EachTreeSitsInItsOwnClass) {
  const std::size_t trees[] = {2, 3, 6, 11};
  for (std::size_t n = 4; n <= 7; ++n) {
    std::set<std::size_t> ids;
    for (const Graph& t : unlabelled_trees(n)) ids.insert(classify(catalogue(n), t));
    EXPECT_EQ(ids.size(), trees[n - 4]) << "n=" << n;
  }
}

TEST(Classify, Examples) {
  EXPECT_EQ(classify(catalogue(3), complete_graph(3)), classify(catalogue(3), path_graph(3)));
  Graph c5 = cycle_graph(5);
  for (VertexId v = 0; v < 5; ++v) {
    EXPECT_EQ(classify(catalogue(5), local_complement(c5, v)), classify(catalogue(5), c5));
  }
  EXPECT_THROW(classify(catalogue(5), Graph(5)), InvalidArgument);
  EXPECT_THROW(classify(catalogue(5), path_graph(4)), InvalidArgument);
}

TEST(Classify, AgreesWithOrbitMembership) {
  std::mt19937_64 rng(41);
  const Catalogue& c = catalogue(7);
  for (int trial = 0; trial < 1000; ++trial) {
    Graph g = random_connected(7, rng);
    const std::size_t id = classify(c, g);
    const auto orbit = lc_orbit(g);
    ASSERT_TRUE(orbit_contains(orbit, c.record(id).representative.encode()));
    // Class is LC-invariant and isomorphism-invariant.
    std::uniform_int_distribution<VertexId> pick(0, 6);
    ASSERT_EQ(classify(c, local_complement(g, pick(rng))), id);
    std::vector<VertexId> perm(7);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    ASSERT_EQ(classify(c, g.relabelled(perm)), id);
  }
}

TEST(OrbitDiameter, SmallOrders) {
  EXPECT_EQ(max_orbit_diameter(catalogue(2)), 0u);
  std::size_t previous = 0;
  for (std::size_t n = 2; n <= 7; ++n) {
    const std::size_t d = max_orbit_diameter(catalogue(n));
    EXPECT_GE(d, previous) << "n=" << n;
    previous = d;
    // Each diameter is the BFS eccentricity of the representative.
    for (const auto& r : catalogue(n).classes()) {
      std::size_t ecc = 0;
      for (const auto& m : lc_orbit(r.representative)) ecc = std::max(ecc, m.distance);
      EXPECT_EQ(ecc, r.orbit_diameter);
      EXPECT_EQ(lc_orbit(r.representative).size(), r.member_count);
    }
  }
}

class CatalogueFile : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = std::filesystem::temp_directory_path() /
           ("psgraph_cat_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) +
            "_" + ::testing::UnitTest::GetInstance()->current_test_info()->name());
    std::filesystem::create_directories(dir_);
  }
  void TearDown() override { std::filesystem::remove_all(dir_); }
  std::filesystem::path dir_;
};

TEST_F(CatalogueFile, RoundTrip) {
  auto path = dir_ / "cat6.txt";
  save_catalogue(catalogue(6), path);
  EXPECT_EQ(load_catalogue(path), catalogue(6));
  std::ifstream in(path);
  std::size_t lines = 0;
  for (std::string line; std::getline(in, line);) ++lines;
  EXPECT_EQ(lines, 1u + 11u + 112u);
  auto again = dir_ / "again.txt";
  save_catalogue(load_catalogue(path), again);
  std::ifstream a(path), b(again);
  EXPECT_EQ(std::string(std::istreambuf_iterator<char>(a), {}),
            std::string(std::istreambuf_iterator<char>(b), {}));
}

TEST_F(CatalogueFile, CorruptionIsReported) {
  const std::string text = render_catalogue(catalogue(5));
  EXPECT_THROW(parse_catalogue(text.substr(0, text.size() / 2)), FormatError);
  EXPECT_THROW(parse_catalogue(""), FormatError);
  std::string wrong_version = text;
  wrong_version.replace(wrong_version.find("v1"), 2, "v9");
  EXPECT_THROW(parse_catalogue(wrong_version), FormatError);
  std::string bad_field = text;
  bad_field.replace(bad_field.find('\n') + 1, 1, "x");
  EXPECT_THROW(parse_catalogue(bad_field), FormatError);
  EXPECT_THROW(load_catalogue(dir_ / "missing.txt"), InvalidArgument);
}

}  // namespace
}  // namespace psgraph
