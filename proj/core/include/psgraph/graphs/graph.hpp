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

#include <array>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace psgraph {

using VertexId = std::size_t;
using Edge = std::pair<VertexId, VertexId>;

// Simple undirected graph on at most 32 vertices, adjacency stored as bitmasks.
class Graph {
 public:
  static constexpr std::size_t kMaxOrder = 32;

  Graph() = default;
  explicit Graph(std::size_t n);
  static Graph from_edges(std::size_t n, const std::vector<Edge>& edges);

  std::size_t order() const { return n_; }
  bool has_edge(VertexId i, VertexId j) const;
  void set_edge(VertexId i, VertexId j, bool present);
  void toggle_edge(VertexId i, VertexId j);

  std::uint32_t neighbours(VertexId v) const;
  std::size_t degree(VertexId v) const;
  std::size_t edge_count() const;
  std::vector<Edge> edges() const;  // sorted by (min, max)

  bool is_connected() const;
  bool is_tree() const;

  // Upper-triangle row-major bit encoding; pair (0,1) is the most significant bit.
  // Defined for n <= 11.
  std::uint64_t encode() const;
  static Graph decode(std::size_t n, std::uint64_t code);

  // Result has vertex relabel[v] wherever this graph has vertex v.
  Graph relabelled(const std::vector<VertexId>& relabel) const;

  // Disjoint union; vertices of `other` are shifted by order().
  Graph disjoint_union(const Graph& other) const;

  // `n;i-j,i-j,...`
  std::string to_string() const;
  static Graph parse(std::string_view text);

  friend bool operator==(const Graph& a, const Graph& b);

 private:
  void check_vertex(VertexId v) const;

  std::size_t n_ = 0;
  std::array<std::uint32_t, kMaxOrder> adj_{};
};

Graph local_complement(const Graph& g, VertexId a);
Graph cz_toggle(const Graph& g, VertexId i, VertexId j);
Graph fuse(const Graph& g, VertexId i, VertexId j);

Graph path_graph(std::size_t n);
Graph star_graph(std::size_t n);  // centre 0
Graph cycle_graph(std::size_t n);
Graph complete_graph(std::size_t n);

}  // namespace psgraph
