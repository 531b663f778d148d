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

#include "psgraph/graphs/graph.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <sstream>

#include "psgraph/errors.hpp"

namespace psgraph {

Graph::Graph(std::size_t n) : n_(n) {
  if (n > kMaxOrder) {
    throw GuardExceeded("graph order " + std::to_string(n) + " exceeds " +
                        std::to_string(kMaxOrder));
  }
}

Graph Graph::from_edges(std::size_t n, const std::vector<Edge>& edges) {
  Graph g(n);
  for (const auto& [i, j] : edges) {
    if (i == j) throw InvalidArgument("self-loop on vertex " + std::to_string(i));
    g.set_edge(i, j, true);
  }
  return g;
}

void Graph::check_vertex(VertexId v) const {
  if (v >= n_) {
    throw InvalidArgument("vertex " + std::to_string(v) + " out of range for order " +
                          std::to_string(n_));
  }
}

bool Graph::has_edge(VertexId i, VertexId j) const {
  check_vertex(i);
  check_vertex(j);
  return (adj_[i] >> j) & 1u;
}

void Graph::set_edge(VertexId i, VertexId j, bool present) {
  check_vertex(i);
  check_vertex(j);
  if (i == j) throw InvalidArgument("self-loop on vertex " + std::to_string(i));
  if (present) {
    adj_[i] |= 1u << j;
    adj_[j] |= 1u << i;
  } else {
    adj_[i] &= ~(1u << j);
    adj_[j] &= ~(1u << i);
  }
}

void Graph::toggle_edge(VertexId i, VertexId j) {
  check_vertex(i);
  check_vertex(j);
  if (i == j) throw InvalidArgument("self-loop on vertex " + std::to_string(i));
  adj_[i] ^= 1u << j;
  adj_[j] ^= 1u << i;
}

std::uint32_t Graph::neighbours(VertexId v) const {
  check_vertex(v);
  return adj_[v];
}

std::size_t Graph::degree(VertexId v) const { return std::popcount(neighbours(v)); }

std::size_t Graph::edge_count() const {
  std::size_t twice = 0;
  for (std::size_t v = 0; v < n_; ++v) twice += std::popcount(adj_[v]);
  return twice / 2;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  for (VertexId i = 0; i < n_; ++i) {
    for (VertexId j = i + 1; j < n_; ++j) {
      if ((adj_[i] >> j) & 1u) out.emplace_back(i, j);
    }
  }
  return out;
}

bool Graph::is_connected() const {
  if (n_ == 0) return true;
  std::uint32_t seen = 1u;
  std::uint32_t frontier = 1u;
  while (frontier) {
    std::uint32_t next = 0;
    for (std::uint32_t f = frontier; f; f &= f - 1) next |= adj_[std::countr_zero(f)];
    frontier = next & ~seen;
    seen |= next;
  }
  return std::popcount(seen) == static_cast<int>(n_);
}

bool Graph::is_tree() const { return n_ >= 1 && edge_count() == n_ - 1 && is_connected(); }

std::uint64_t Graph::encode() const {
  if (n_ > 11) throw GuardExceeded("encoding is defined for order <= 11");
  std::uint64_t code = 0;
  for (VertexId i = 0; i < n_; ++i) {
    for (VertexId j = i + 1; j < n_; ++j) code = (code << 1) | ((adj_[i] >> j) & 1u);
  }
  return code;
}

Graph Graph::decode(std::size_t n, std::uint64_t code) {
  if (n > 11) throw GuardExceeded("encoding is defined for order <= 11");
  Graph g(n);
  std::size_t bits = n * (n - (n > 0 ? 1 : 0)) / 2;
  if (bits < 64 && (code >> bits) != 0) {
    throw InvalidArgument("code has bits beyond the upper triangle of order " +
                          std::to_string(n));
  }
  std::size_t k = bits;
  for (VertexId i = 0; i < n; ++i) {
    for (VertexId j = i + 1; j < n; ++j) {
      --k;
      if ((code >> k) & 1u) g.set_edge(i, j, true);
    }
  }
  return g;
}

Graph Graph::relabelled(const std::vector<VertexId>& relabel) const {
  if (relabel.size() != n_) throw InvalidArgument("relabelling has wrong length");
  std::uint32_t hit = 0;
  for (VertexId v : relabel) {
    check_vertex(v);
    hit |= 1u << v;
  }
  if (std::popcount(hit) != static_cast<int>(n_)) {
    throw InvalidArgument("relabelling is not a permutation");
  }
  Graph out(n_);
  for (VertexId v = 0; v < n_; ++v) {
    std::uint32_t mapped = 0;
    for (std::uint32_t m = adj_[v]; m; m &= m - 1) {
      mapped |= 1u << relabel[std::countr_zero(m)];
    }
    out.adj_[relabel[v]] = mapped;
  }
  return out;
}

Graph Graph::disjoint_union(const Graph& other) const {
  Graph out(n_ + other.n_);
  for (VertexId v = 0; v < n_; ++v) out.adj_[v] = adj_[v];
  for (VertexId v = 0; v < other.n_; ++v) out.adj_[n_ + v] = other.adj_[v] << n_;
  return out;
}

std::string Graph::to_string() const {
  std::ostringstream os;
  os << n_ << ';';
  bool first = true;
  for (const auto& [i, j] : edges()) {
    if (!first) os << ',';
    os << i << '-' << j;
    first = false;
  }
  return os.str();
}

namespace {

std::size_t parse_index(std::string_view s, std::string_view whole) {
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) {
    throw InvalidArgument("malformed graph text '" + std::string(whole) + "'");
  }
  return value;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r' ||
                        s.back() == '\n')) {
    s.remove_suffix(1);
  }
  return s;
}

}  // namespace

Graph Graph::parse(std::string_view text) {
  text = trim(text);
  auto semi = text.find(';');
  if (semi == std::string_view::npos) {
    throw InvalidArgument("malformed graph text '" + std::string(text) + "': missing ';'");
  }
  Graph g(parse_index(trim(text.substr(0, semi)), text));
  std::string_view rest = trim(text.substr(semi + 1));
  while (!rest.empty()) {
    auto comma = rest.find(',');
    std::string_view item = trim(rest.substr(0, comma));
    auto dash = item.find('-');
    if (dash == std::string_view::npos) {
      throw InvalidArgument("malformed edge '" + std::string(item) + "'");
    }
    VertexId i = parse_index(trim(item.substr(0, dash)), text);
    VertexId j = parse_index(trim(item.substr(dash + 1)), text);
    if (i == j) throw InvalidArgument("self-loop in '" + std::string(text) + "'");
    g.set_edge(i, j, true);
    if (comma == std::string_view::npos) break;
    rest = rest.substr(comma + 1);
  }
  return g;
}

bool operator==(const Graph& a, const Graph& b) {
  if (a.n_ != b.n_) return false;
  return std::equal(a.adj_.begin(), a.adj_.begin() + a.n_, b.adj_.begin());
}

Graph local_complement(const Graph& g, VertexId a) {
  std::uint32_t nbrs = g.neighbours(a);
  Graph out = g;
  for (std::uint32_t m = nbrs; m; m &= m - 1) {
    VertexId u = std::countr_zero(m);
    for (std::uint32_t r = nbrs & ~((2u << u) - 1); r; r &= r - 1) {
      out.toggle_edge(u, std::countr_zero(r));
    }
  }
  return out;
}

Graph cz_toggle(const Graph& g, VertexId i, VertexId j) {
  if (i == j) throw InvalidArgument("cz_toggle needs two distinct vertices");
  Graph out = g;
  out.toggle_edge(i, j);
  return out;
}

Graph fuse(const Graph& g, VertexId i, VertexId j) {
  if (i == j) throw InvalidArgument("fuse needs two distinct vertices");
  std::uint32_t a = g.neighbours(i) & ~(1u << j);
  std::uint32_t b = g.neighbours(j) & ~(1u << i);
  Graph out = g;
  for (VertexId v = 0; v < g.order(); ++v) {
    if (v != i && v != j) {
      out.set_edge(i, v, false);
      out.set_edge(j, v, ((a ^ b) >> v) & 1u);
    }
  }
  out.set_edge(i, j, true);
  return out;
}

Graph path_graph(std::size_t n) {
  Graph g(n);
  for (VertexId v = 0; v + 1 < n; ++v) g.set_edge(v, v + 1, true);
  return g;
}

Graph star_graph(std::size_t n) {
  Graph g(n);
  for (VertexId v = 1; v < n; ++v) g.set_edge(0, v, true);
  return g;
}

Graph cycle_graph(std::size_t n) {
  Graph g = path_graph(n);
  if (n >= 3) g.set_edge(n - 1, 0, true);
  return g;
}

Graph complete_graph(std::size_t n) {
  Graph g(n);
  for (VertexId i = 0; i < n; ++i) {
    for (VertexId j = i + 1; j < n; ++j) g.set_edge(i, j, true);
  }
  return g;
}

}  // namespace psgraph
