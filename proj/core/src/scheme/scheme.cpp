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

#include "psgraph/scheme/scheme.hpp"

#include <algorithm>
#include <sstream>

#include "psgraph/errors.hpp"

namespace psgraph {

std::string to_string(GateKind kind) { return kind == GateKind::kCz ? "cz" : "fusion"; }

std::string to_string(SourceFlavour flavour) {
  switch (flavour) {
    case SourceFlavour::kDegenerate:
      return "degenerate";
    case SourceFlavour::kNonDegenerate:
      return "nondegenerate";
    case SourceFlavour::kHeraldedBell:
      return "bell";
  }
  return "?";
}

void Scheme::validate() const {
  std::vector<int> cover(qubits, 0);
  auto touch = [&](VertexId q, const std::string& what) {
    if (q >= qubits) {
      throw ModellingError(what + " uses qubit " + std::to_string(q) + " but the scheme has " +
                           std::to_string(qubits));
    }
    if (++cover[q] > 1) {
      throw ModellingError("qubit " + std::to_string(q) + " is fed by more than one resource");
    }
  };
  for (const Source& s : sources) {
    if (s.a == s.b) throw ModellingError("source joins qubit " + std::to_string(s.a) + " to itself");
    touch(s.a, "source");
    touch(s.b, "source");
  }
  for (VertexId q : singles) touch(q, "single photon");
  for (VertexId q = 0; q < qubits; ++q) {
    if (cover[q] == 0) throw ModellingError("qubit " + std::to_string(q) + " has no photon source");
  }
  std::vector<bool> seen(gates.size(), false);
  for (const Gate& g : gates) {
    if (g.i >= qubits || g.j >= qubits) throw ModellingError("gate qubit out of range");
    if (g.i == g.j) throw ModellingError("gate acts twice on qubit " + std::to_string(g.i));
    if (g.time >= gates.size() || seen[g.time]) {
      throw ModellingError("gate time indices must be a permutation of 0.." +
                           std::to_string(gates.size() == 0 ? 0 : gates.size() - 1));
    }
    seen[g.time] = true;
  }
}

std::vector<Gate> Scheme::gates_in_time_order() const {
  std::vector<Gate> out = gates;
  std::sort(out.begin(), out.end(), [](const Gate& a, const Gate& b) { return a.time < b.time; });
  return out;
}

std::size_t Scheme::epp_count() const {
  return static_cast<std::size_t>(
      std::count_if(sources.begin(), sources.end(), [](const Source& s) { return s.is_epp(); }));
}

bool Scheme::has_degenerate() const {
  return std::any_of(sources.begin(), sources.end(), [](const Source& s) {
    return s.flavour == SourceFlavour::kDegenerate;
  });
}

std::string Scheme::to_string() const {
  std::ostringstream os;
  os << "qubits " << qubits << '\n';
  for (const Source& s : sources) {
    os << "source " << s.a << ' ' << s.b << ' ' << psgraph::to_string(s.flavour) << '\n';
  }
  for (VertexId q : singles) os << "single " << q << '\n';
  for (const Gate& g : gates_in_time_order()) {
    os << "gate " << g.time << ' ' << psgraph::to_string(g.kind) << ' ' << g.i << ' ' << g.j
       << '\n';
  }
  return os.str();
}

Scheme Scheme::parse(std::string_view text) {
  Scheme s;
  bool have_header = false;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  auto fail = [&](const std::string& why) -> void {
    throw InvalidArgument("scheme line " + std::to_string(line_no) + ": " + why);
  };
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream words(line);
    std::string keyword;
    if (!(words >> keyword)) continue;
    if (keyword == "qubits") {
      if (have_header) fail("repeated 'qubits' header");
      if (!(words >> s.qubits)) fail("expected 'qubits <n>'");
      have_header = true;
    } else if (!have_header) {
      fail("the first statement must be 'qubits <n>'");
    } else if (keyword == "source") {
      Source src;
      std::string flavour;
      if (!(words >> src.a >> src.b >> flavour)) fail("expected 'source a b <flavour>'");
      if (flavour == "degenerate") {
        src.flavour = SourceFlavour::kDegenerate;
      } else if (flavour == "nondegenerate") {
        src.flavour = SourceFlavour::kNonDegenerate;
      } else if (flavour == "bell") {
        src.flavour = SourceFlavour::kHeraldedBell;
      } else {
        fail("unknown source flavour '" + flavour + "'");
      }
      s.sources.push_back(src);
    } else if (keyword == "single") {
      VertexId q = 0;
      if (!(words >> q)) fail("expected 'single q'");
      s.singles.push_back(q);
    } else if (keyword == "gate") {
      Gate g;
      std::string kind;
      if (!(words >> g.time >> kind >> g.i >> g.j)) fail("expected 'gate t cz|fusion i j'");
      if (kind == "cz") {
        g.kind = GateKind::kCz;
      } else if (kind == "fusion") {
        g.kind = GateKind::kFusion;
      } else {
        fail("unknown gate kind '" + kind + "'");
      }
      s.gates.push_back(g);
    } else {
      fail("unknown statement '" + keyword + "'");
    }
    std::string extra;
    if (words >> extra) fail("unexpected trailing '" + extra + "'");
  }
  if (!have_header) throw InvalidArgument("scheme text has no 'qubits' header");
  std::sort(s.gates.begin(), s.gates.end(),
            [](const Gate& a, const Gate& b) { return a.time < b.time; });
  return s;
}

}  // namespace psgraph
