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

#include "psgraph/graphs/canonical.hpp"

#include <array>
#include <bit>
#include <limits>

#include "psgraph/errors.hpp"

namespace psgraph {
namespace {

// Ordered partition of the vertex set, one bitmask per cell.
using Cells = std::vector<std::uint32_t>;

struct Search {
  std::size_t n = 0;
  std::array<std::uint32_t, kMaxCanonicalOrder> adj{};
  std::uint64_t best = std::numeric_limits<std::uint64_t>::max();
  std::array<VertexId, kMaxCanonicalOrder> best_order{};

  // Split cells by neighbour counts into each splitter until equitable.
  void refine(Cells& cells) const {
    bool changed = true;
    while (changed) {
      changed = false;
      for (std::size_t s = 0; s < cells.size() && !changed; ++s) {
        const std::uint32_t splitter = cells[s];
        Cells next;
        next.reserve(n);
        for (std::uint32_t cell : cells) {
          if (std::popcount(cell) == 1) {
            next.push_back(cell);
            continue;
          }
          std::array<std::uint32_t, kMaxCanonicalOrder + 1> by_count{};
          for (std::uint32_t m = cell; m; m &= m - 1) {
            int v = std::countr_zero(m);
            by_count[std::popcount(adj[v] & splitter)] |= 1u << v;
          }
          std::size_t parts = 0;
          for (std::uint32_t part : by_count) {
            if (part) {
              next.push_back(part);
              ++parts;
            }
          }
          if (parts > 1) changed = true;
        }
        if (changed) cells = std::move(next);
      }
    }
  }

  void leaf(const Cells& cells) {
    std::array<VertexId, kMaxCanonicalOrder> order{};
    for (std::size_t p = 0; p < n; ++p) order[p] = std::countr_zero(cells[p]);
    std::uint64_t code = 0;
    for (std::size_t p = 0; p < n; ++p) {
      std::uint32_t row = adj[order[p]];
      for (std::size_t q = p + 1; q < n; ++q) code = (code << 1) | ((row >> order[q]) & 1u);
    }
    if (code < best) {
      best = code;
      best_order = order;
    }
  }

  bool twins(int u, int v) const {
    return (adj[u] & ~(1u << v)) == (adj[v] & ~(1u << u));
  }

  void run(Cells cells) {
    refine(cells);
    if (cells.size() == n) {
      leaf(cells);
      return;
    }
    std::size_t target = 0;
    int smallest = std::numeric_limits<int>::max();
    for (std::size_t c = 0; c < cells.size(); ++c) {
      int size = std::popcount(cells[c]);
      if (size > 1 && size < smallest) {
        smallest = size;
        target = c;
      }
    }
    std::uint32_t tried = 0;
    for (std::uint32_t m = cells[target]; m; m &= m - 1) {
      int v = std::countr_zero(m);
      bool redundant = false;
      for (std::uint32_t t = tried; t && !redundant; t &= t - 1) {
        redundant = twins(std::countr_zero(t), v);
      }
      if (redundant) continue;
      tried |= 1u << v;
      Cells child;
      child.reserve(cells.size() + 1);
      for (std::size_t c = 0; c < cells.size(); ++c) {
        if (c == target) {
          child.push_back(1u << v);
          child.push_back(cells[c] & ~(1u << v));
        } else {
          child.push_back(cells[c]);
        }
      }
      run(std::move(child));
    }
  }
};

Search searched(const Graph& g) {
  if (g.order() > kMaxCanonicalOrder) {
    throw GuardExceeded("canonical_form supports order <= " +
                        std::to_string(kMaxCanonicalOrder) + ", got " +
                        std::to_string(g.order()));
  }
  Search s;
  s.n = g.order();
  for (VertexId v = 0; v < s.n; ++v) s.adj[v] = g.neighbours(v);
  if (s.n == 0) {
    s.best = 0;
    return s;
  }
  s.run(Cells{static_cast<std::uint32_t>((std::uint64_t{1} << s.n) - 1)});
  return s;
}

}  // namespace

CanonicalForm canonical_form(const Graph& g) {
  Search s = searched(g);
  CanonicalForm out;
  out.relabel.resize(s.n);
  for (std::size_t p = 0; p < s.n; ++p) out.relabel[s.best_order[p]] = p;
  out.graph = g.relabelled(out.relabel);
  out.code = s.best;
  return out;
}

std::uint64_t canonical_code(const Graph& g) { return searched(g).best; }

}  // namespace psgraph
