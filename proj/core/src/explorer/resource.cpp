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

#include "psgraph/explorer/resource.hpp"

#include <charconv>

#include "psgraph/errors.hpp"

namespace psgraph {

namespace {

struct Kind {
  const char* name;
  std::size_t Resource::*count;
};

constexpr Kind kKinds[] = {
    {"ND-EPP", &Resource::nondegenerate},
    {"DEG-EPP", &Resource::degenerate},
    {"BELL", &Resource::bell},
    {"SINGLE", &Resource::singles},
};

}  // namespace

void Resource::validate() const {
  if (order() < 2 || order() > Graph::kMaxOrder) {
    throw InvalidArgument("resource " + to_string() + " has " + std::to_string(order()) +
                          " qubits; need 2.." + std::to_string(Graph::kMaxOrder));
  }
}

std::vector<Source> Resource::sources() const {
  std::vector<Source> out;
  VertexId q = 0;
  auto add = [&](std::size_t count, SourceFlavour flavour) {
    for (std::size_t k = 0; k < count; ++k, q += 2) out.push_back({q, q + 1, flavour});
  };
  add(nondegenerate, SourceFlavour::kNonDegenerate);
  add(degenerate, SourceFlavour::kDegenerate);
  add(bell, SourceFlavour::kHeraldedBell);
  return out;
}

std::vector<VertexId> Resource::single_qubits() const {
  std::vector<VertexId> out;
  for (VertexId q = 2 * pairs(); q < order(); ++q) out.push_back(q);
  return out;
}

Graph Resource::initial_graph() const {
  Graph g(order());
  for (const Source& s : sources()) g.set_edge(s.a, s.b, true);
  return g;
}

Scheme Resource::bare_scheme() const {
  Scheme s;
  s.qubits = order();
  s.sources = sources();
  s.singles = single_qubits();
  return s;
}

std::string Resource::to_string() const {
  std::string out;
  for (const Kind& k : kKinds) {
    const std::size_t count = this->*k.count;
    if (count == 0) continue;
    if (!out.empty()) out += ',';
    out += std::to_string(count) + 'x' + k.name;
  }
  return out.empty() ? "empty" : out;
}

Resource Resource::parse(std::string_view text) {
  Resource r;
  bool any = false;
  while (!text.empty()) {
    const std::size_t comma = text.find(',');
    std::string_view item = text.substr(0, comma);
    text = comma == std::string_view::npos ? std::string_view{} : text.substr(comma + 1);
    while (!item.empty() && item.front() == ' ') item.remove_prefix(1);
    while (!item.empty() && item.back() == ' ') item.remove_suffix(1);

    const std::size_t x = item.find('x');
    std::size_t count = 0;
    const char* end = item.data() + (x == std::string_view::npos ? 0 : x);
    auto [ptr, ec] = std::from_chars(item.data(), end, count);
    if (x == std::string_view::npos || x == 0 || ec != std::errc() || ptr != end) {
      throw InvalidArgument("resource item '" + std::string(item) + "' is not <count>x<KIND>");
    }
    const std::string_view name = item.substr(x + 1);
    bool known = false;
    for (const Kind& k : kKinds) {
      if (name == k.name) {
        r.*k.count += count;
        known = true;
      }
    }
    if (!known) {
      throw InvalidArgument("unknown resource kind '" + std::string(name) +
                            "' (expected ND-EPP, DEG-EPP, BELL or SINGLE)");
    }
    any = true;
  }
  if (!any) throw InvalidArgument("empty resource");
  r.validate();
  return r;
}

}  // namespace psgraph
