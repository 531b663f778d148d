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

#include "psgraph/classes/catalogue.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cstdio>
#include <fstream>
#include <mutex>
#include <sstream>
#include <unordered_map>

#include "psgraph/errors.hpp"
#include "psgraph/graphs/canonical.hpp"
#include "psgraph/graphs/enumerate.hpp"

namespace psgraph {
namespace {

std::vector<std::uint64_t> lc_neighbours(std::size_t n, std::uint64_t code) {
  const Graph g = Graph::decode(n, code);
  std::vector<std::uint64_t> out;
  out.reserve(n);
  for (VertexId v = 0; v < n; ++v) out.push_back(canonical_code(local_complement(g, v)));
  return out;
}

// BFS distances (by code) from `start` within its LC orbit.
std::unordered_map<std::uint64_t, std::size_t> orbit_distances(std::size_t n,
                                                               std::uint64_t start) {
  std::unordered_map<std::uint64_t, std::size_t> dist = {{start, 0}};
  std::vector<std::uint64_t> frontier = {start};
  for (std::size_t d = 1; !frontier.empty(); ++d) {
    std::vector<std::uint64_t> next;
    for (std::uint64_t code : frontier) {
      for (std::uint64_t nb : lc_neighbours(n, code)) {
        if (dist.emplace(nb, d).second) next.push_back(nb);
      }
    }
    frontier = std::move(next);
  }
  return dist;
}

// Orbits of the connected graphs of order n, each as a sorted list of codes.
std::vector<std::vector<std::uint64_t>> partition_orbits(std::size_t n) {
  const std::vector<std::uint64_t> codes = connected_graph_codes(n);
  std::unordered_map<std::uint64_t, std::size_t> orbit_of;
  orbit_of.reserve(codes.size());
  std::vector<std::vector<std::uint64_t>> orbits;
  for (std::uint64_t code : codes) {
    if (orbit_of.count(code)) continue;
    std::vector<std::uint64_t> members;
    for (const auto& [member, d] : orbit_distances(n, code)) {
      orbit_of.emplace(member, orbits.size());
      members.push_back(member);
    }
    std::sort(members.begin(), members.end());
    orbits.push_back(std::move(members));
  }
  return orbits;
}

void check_order(std::size_t n) {
  if (n < Catalogue::kMinOrder || n > Catalogue::kMaxOrder) {
    throw GuardExceeded("catalogues are supported for orders " +
                        std::to_string(Catalogue::kMinOrder) + ".." +
                        std::to_string(Catalogue::kMaxOrder) + ", got " + std::to_string(n));
  }
}

std::size_t edge_count_of(std::uint64_t code) {
  return static_cast<std::size_t>(std::popcount(code));
}

}  // namespace

std::vector<OrbitMember> lc_orbit(const Graph& g) {
  if (g.order() > kMaxOrbitOrder) {
    throw GuardExceeded("lc_orbit supports order <= " + std::to_string(kMaxOrbitOrder));
  }
  std::vector<OrbitMember> out;
  for (const auto& [code, d] : orbit_distances(g.order(), canonical_code(g))) {
    out.push_back({code, d});
  }
  std::sort(out.begin(), out.end(),
            [](const OrbitMember& a, const OrbitMember& b) { return a.code < b.code; });
  return out;
}

Catalogue::Catalogue(std::size_t order, std::vector<ClassRecord> classes,
                     std::vector<std::pair<std::uint64_t, std::size_t>> lookup)
    : order_(order), classes_(std::move(classes)), lookup_(std::move(lookup)) {}

std::size_t Catalogue::first_class_id() const {
  return classes_.empty() ? 0 : classes_.front().class_id;
}

const ClassRecord& Catalogue::record(std::size_t class_id) const {
  const std::size_t first = first_class_id();
  if (class_id < first || class_id - first >= classes_.size()) {
    throw InvalidArgument("class id " + std::to_string(class_id) +
                          " is not in the order-" + std::to_string(order_) + " catalogue");
  }
  return classes_[class_id - first];
}

std::optional<std::size_t> Catalogue::find(std::uint64_t canonical_code) const {
  auto it = std::lower_bound(
      lookup_.begin(), lookup_.end(), canonical_code,
      [](const std::pair<std::uint64_t, std::size_t>& e, std::uint64_t c) { return e.first < c; });
  if (it == lookup_.end() || it->first != canonical_code) return std::nullopt;
  return it->second;
}

std::size_t class_count(std::size_t n) {
  check_order(n);
  static std::mutex mutex;
  static std::array<std::size_t, Catalogue::kMaxOrder + 1> cache{};
  std::lock_guard<std::mutex> lock(mutex);
  if (cache[n] == 0) cache[n] = partition_orbits(n).size();
  return cache[n];
}

std::size_t first_class_id(std::size_t n) {
  check_order(n);
  std::size_t id = 1;
  for (std::size_t k = Catalogue::kMinOrder; k < n; ++k) id += class_count(k);
  return id;
}

Catalogue build_catalogue(std::size_t n) {
  check_order(n);
  struct Pending {
    std::uint64_t rep;
    std::vector<std::uint64_t> members;
  };
  std::vector<Pending> pending;
  for (auto& members : partition_orbits(n)) {
    std::uint64_t rep = *std::min_element(
        members.begin(), members.end(), [](std::uint64_t a, std::uint64_t b) {
          return std::pair(edge_count_of(a), a) < std::pair(edge_count_of(b), b);
        });
    pending.push_back({rep, std::move(members)});
  }
  std::sort(pending.begin(), pending.end(), [](const Pending& a, const Pending& b) {
    return std::pair(edge_count_of(a.rep), a.rep) < std::pair(edge_count_of(b.rep), b.rep);
  });

  const std::size_t first = first_class_id(n);
  std::vector<ClassRecord> classes;
  std::vector<std::pair<std::uint64_t, std::size_t>> lookup;
  for (std::size_t k = 0; k < pending.size(); ++k) {
    const std::size_t id = first + k;
    std::size_t diameter = 0;
    for (const auto& [code, d] : orbit_distances(n, pending[k].rep)) {
      diameter = std::max(diameter, d);
    }
    classes.push_back({id, Graph::decode(n, pending[k].rep), pending[k].members.size(), diameter});
    for (std::uint64_t code : pending[k].members) lookup.emplace_back(code, id);
  }
  std::sort(lookup.begin(), lookup.end());
  return Catalogue(n, std::move(classes), std::move(lookup));
}

std::size_t classify(const Catalogue& c, const Graph& g) {
  if (g.order() != c.order()) {
    throw InvalidArgument("graph order " + std::to_string(g.order()) +
                          " does not match catalogue order " + std::to_string(c.order()));
  }
  if (!g.is_connected()) throw InvalidArgument("classify needs a connected graph");
  auto id = c.find(canonical_code(g));
  if (!id) throw FormatError("catalogue has no entry for " + g.to_string());
  return *id;
}

std::size_t max_orbit_diameter(const Catalogue& c) {
  std::size_t d = 0;
  for (const auto& r : c.classes()) d = std::max(d, r.orbit_diameter);
  return d;
}

std::string render_catalogue(const Catalogue& c) {
  std::ostringstream os;
  os << "PSGRAPH-CAT v" << Catalogue::kFormatVersion << " n=" << c.order()
     << " classes=" << c.classes().size() << '\n';
  for (const auto& r : c.classes()) {
    os << r.class_id << ';' << r.representative.to_string() << ';' << r.member_count << ';'
       << r.orbit_diameter << '\n';
  }
  const std::size_t bits = c.order() * (c.order() - 1) / 2;
  const int width = static_cast<int>((bits + 3) / 4);
  for (const auto& [code, id] : c.lookup()) {
    std::ostringstream hex;
    hex << std::hex;
    hex.width(width);
    hex.fill('0');
    hex << code;
    os << hex.str() << ';' << id << '\n';
  }
  return os.str();
}

namespace {

[[noreturn]] void corrupt(std::size_t line, const std::string& why) {
  throw FormatError("catalogue line " + std::to_string(line) + ": " + why);
}

std::size_t parse_count(const std::string& s, std::size_t line, int base = 10) {
  if (s.empty()) corrupt(line, "empty field");
  std::size_t used = 0;
  unsigned long long v = 0;
  try {
    v = std::stoull(s, &used, base);
  } catch (const std::exception&) {
    corrupt(line, "bad number '" + s + "'");
  }
  if (used != s.size()) corrupt(line, "bad number '" + s + "'");
  return static_cast<std::size_t>(v);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : s) {
    if (ch == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(ch);
    }
  }
  out.push_back(cur);
  return out;
}

}  // namespace

Catalogue parse_catalogue(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line)) throw FormatError("catalogue is empty");
  int version = 0;
  std::size_t n = 0, k = 0;
  if (std::sscanf(line.c_str(), "PSGRAPH-CAT v%d n=%zu classes=%zu", &version, &n, &k) != 3) {
    corrupt(1, "missing PSGRAPH-CAT header");
  }
  if (version != Catalogue::kFormatVersion) {
    throw FormatError("catalogue format version " + std::to_string(version) +
                      " is not supported (expected " +
                      std::to_string(Catalogue::kFormatVersion) + ")");
  }
  if (n < Catalogue::kMinOrder || n > Catalogue::kMaxOrder) corrupt(1, "order out of range");

  std::size_t line_no = 1;
  std::vector<ClassRecord> classes;
  std::size_t expected_members = 0;
  for (std::size_t c = 0; c < k; ++c) {
    ++line_no;
    if (!std::getline(in, line)) corrupt(line_no, "truncated class records");
    auto fields = split(line, ';');
    if (fields.size() != 5) corrupt(line_no, "class record needs 5 ';' fields");
    ClassRecord r;
    r.class_id = parse_count(fields[0], line_no);
    try {
      r.representative = Graph::parse(fields[1] + ";" + fields[2]);
    } catch (const std::exception& e) {
      corrupt(line_no, e.what());
    }
    if (r.representative.order() != n) corrupt(line_no, "representative has wrong order");
    r.member_count = parse_count(fields[3], line_no);
    r.orbit_diameter = parse_count(fields[4], line_no);
    if (r.member_count == 0) corrupt(line_no, "empty class");
    if (!classes.empty() && r.class_id != classes.back().class_id + 1) {
      corrupt(line_no, "class ids are not consecutive");
    }
    expected_members += r.member_count;
    classes.push_back(std::move(r));
  }

  std::vector<std::pair<std::uint64_t, std::size_t>> lookup;
  std::vector<std::size_t> tally(k, 0);
  while (std::getline(in, line)) {
    ++line_no;
    auto fields = split(line, ';');
    if (fields.size() != 2) corrupt(line_no, "lookup entry needs 2 ';' fields");
    std::uint64_t code = parse_count(fields[0], line_no, 16);
    std::size_t id = parse_count(fields[1], line_no);
    if (k == 0 || id < classes.front().class_id || id > classes.back().class_id) {
      corrupt(line_no, "lookup refers to unknown class " + std::to_string(id));
    }
    if (!lookup.empty() && lookup.back().first >= code) corrupt(line_no, "lookup not sorted");
    ++tally[id - classes.front().class_id];
    lookup.emplace_back(code, id);
  }
  if (lookup.size() != expected_members) {
    throw FormatError("catalogue truncated: " + std::to_string(lookup.size()) +
                      " lookup entries, class records promise " +
                      std::to_string(expected_members));
  }
  for (std::size_t c = 0; c < k; ++c) {
    if (tally[c] != classes[c].member_count) {
      throw FormatError("class " + std::to_string(classes[c].class_id) +
                        " member count disagrees with the lookup section");
    }
  }
  return Catalogue(n, std::move(classes), std::move(lookup));
}

void save_catalogue(const Catalogue& c, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InvalidArgument("cannot write catalogue to " + path.string());
  out << render_catalogue(c);
  if (!out) throw InvalidArgument("failed writing catalogue to " + path.string());
}

Catalogue load_catalogue(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidArgument("cannot read catalogue " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_catalogue(buffer.str());
}

}  // namespace psgraph
