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

#include "psgraph/explorer/recipe.hpp"

#include <charconv>
#include <algorithm>
#include <cmath>
#include <sstream>

#include "psgraph/errors.hpp"

namespace psgraph {

std::size_t Recipe::gate_count() const {
  std::size_t count = 0;
  for (const Operation& op : ops) count += op.kind == OpKind::kLc ? 0 : 1;
  return count;
}

double Recipe::probability() const {
  double p = 1.0;
  for (const Operation& op : ops) {
    if (op.kind == OpKind::kCz) p /= 9.0;
    if (op.kind == OpKind::kFusion) p /= 2.0;
  }
  return p;
}

std::string Recipe::to_string() const {
  std::ostringstream os;
  for (std::size_t k = 0; k < ops.size(); ++k) {
    if (k > 0) os << ' ';
    const Operation& op = ops[k];
    switch (op.kind) {
      case OpKind::kCz:
        os << "CZ(" << op.i << ',' << op.j << ')';
        break;
      case OpKind::kFusion:
        os << "F(" << op.i << ',' << op.j << ')';
        break;
      case OpKind::kLc:
        os << "LC(" << op.i << ')';
        break;
    }
  }
  if (ops.empty()) os << '-';
  if (!qubit_map.empty()) {
    os << " @ ";
    for (std::size_t v = 0; v < qubit_map.size(); ++v) os << (v ? "," : "") << qubit_map[v];
  }
  return os.str();
}

namespace {

std::vector<VertexId> parse_numbers(std::string_view text, const std::string& context) {
  std::vector<VertexId> out;
  while (true) {
    VertexId x = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), x);
    if (ec != std::errc() || ptr == text.data()) {
      throw InvalidArgument("bad number list in " + context);
    }
    out.push_back(x);
    text.remove_prefix(static_cast<std::size_t>(ptr - text.data()));
    if (text.empty()) return out;
    if (text.front() != ',') throw InvalidArgument("bad number list in " + context);
    text.remove_prefix(1);
  }
}

}  // namespace

Recipe Recipe::parse(std::string_view text) {
  Recipe r;
  if (const std::size_t at = text.find(" @ "); at != std::string_view::npos) {
    r.qubit_map = parse_numbers(text.substr(at + 3), "recipe qubit map");
    text = text.substr(0, at);
  }
  std::istringstream in{std::string(text)};
  std::string token;
  while (in >> token) {
    if (token == "-" && r.ops.empty()) continue;
    const std::size_t open = token.find('(');
    if (open == std::string::npos || token.back() != ')') {
      throw InvalidArgument("bad recipe operation '" + token + "'");
    }
    const std::string name = token.substr(0, open);
    const std::vector<VertexId> args =
        parse_numbers(std::string_view(token).substr(open + 1, token.size() - open - 2), token);
    if (name == "LC" && args.size() == 1) {
      r.ops.push_back(Operation::lc(args[0]));
    } else if (name == "CZ" && args.size() == 2) {
      r.ops.push_back(Operation::cz(args[0], args[1]));
    } else if (name == "F" && args.size() == 2) {
      r.ops.push_back(Operation::fusion(args[0], args[1]));
    } else {
      throw InvalidArgument("bad recipe operation '" + token + "'");
    }
  }
  return r;
}

Graph replay(const Recipe& recipe, const Resource& r) {
  Graph g = r.initial_graph();
  const std::size_t n = g.order();
  for (const Operation& op : recipe.ops) {
    const bool pair = op.kind != OpKind::kLc;
    if (op.i >= n || (pair && (op.j >= n || op.i == op.j))) {
      throw InvalidArgument("recipe operation out of range for " + std::to_string(n) + " qubits");
    }
    switch (op.kind) {
      case OpKind::kCz:
        g = cz_toggle(g, op.i, op.j);
        break;
      case OpKind::kFusion:
        g = fuse(g, op.i, op.j);
        break;
      case OpKind::kLc:
        g = local_complement(g, op.i);
        break;
    }
  }
  return g;
}

Graph realised_graph(const Recipe& recipe, const Resource& r) {
  Graph full = replay(recipe, r);
  if (recipe.qubit_map.empty()) return full;
  const std::size_t n = recipe.qubit_map.size();
  Graph out(n);
  for (VertexId u = 0; u < n; ++u) {
    if (recipe.qubit_map[u] >= full.order()) throw InvalidArgument("qubit map out of range");
    for (VertexId v = u + 1; v < n; ++v) {
      if (full.has_edge(recipe.qubit_map[u], recipe.qubit_map[v])) out.set_edge(u, v, true);
    }
  }
  return out;
}

Scheme recipe_scheme(const Recipe& recipe, const Resource& r) {
  Scheme s = r.bare_scheme();
  for (const Operation& op : recipe.ops) {
    if (op.kind == OpKind::kLc) continue;
    s.gates.push_back({op.i, op.j, op.kind == OpKind::kCz ? GateKind::kCz : GateKind::kFusion,
                       s.gates.size()});
  }
  return s;
}

bool better_recipe(const Recipe& a, const Recipe& b) {
  const double pa = a.probability();
  const double pb = b.probability();
  if (std::abs(pa - pb) > 1e-15 * std::max(pa, pb)) return pa > pb;
  if (a.ops.size() != b.ops.size()) return a.ops.size() < b.ops.size();
  return a.to_string() < b.to_string();
}

}  // namespace psgraph
