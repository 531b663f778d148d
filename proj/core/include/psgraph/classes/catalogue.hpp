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

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "psgraph/graphs/graph.hpp"

namespace psgraph {

struct OrbitMember {
  std::uint64_t code = 0;     // canonical encoding
  std::size_t distance = 0;   // fewest local complementations from the start graph
};

inline constexpr std::size_t kMaxOrbitOrder = 10;

// Closure of g under local complementation, up to isomorphism, sorted by code.
std::vector<OrbitMember> lc_orbit(const Graph& g);

struct ClassRecord {
  std::size_t class_id = 0;
  Graph representative;  // fewest edges, then smallest canonical encoding
  std::size_t member_count = 0;
  std::size_t orbit_diameter = 0;  // max LC distance of a member from the representative

  friend bool operator==(const ClassRecord&, const ClassRecord&) = default;
};

// LC + isomorphism classes of the connected graphs of one order.
class Catalogue {
 public:
  static constexpr int kFormatVersion = 1;
  static constexpr std::size_t kMinOrder = 2;
  static constexpr std::size_t kMaxOrder = 9;

  Catalogue() = default;
  Catalogue(std::size_t order, std::vector<ClassRecord> classes,
            std::vector<std::pair<std::uint64_t, std::size_t>> lookup);

  std::size_t order() const { return order_; }
  const std::vector<ClassRecord>& classes() const { return classes_; }
  // (canonical code, class id), sorted by code.
  const std::vector<std::pair<std::uint64_t, std::size_t>>& lookup() const { return lookup_; }

  std::size_t first_class_id() const;
  const ClassRecord& record(std::size_t class_id) const;
  std::optional<std::size_t> find(std::uint64_t canonical_code) const;

  friend bool operator==(const Catalogue&, const Catalogue&) = default;

 private:
  std::size_t order_ = 0;
  std::vector<ClassRecord> classes_;
  std::vector<std::pair<std::uint64_t, std::size_t>> lookup_;
};

// Number of classes for each order; cumulative ids start at 1 for order 2.
std::size_t class_count(std::size_t n);
std::size_t first_class_id(std::size_t n);

Catalogue build_catalogue(std::size_t n);

// Class id of a connected graph with the catalogue's order.
std::size_t classify(const Catalogue& c, const Graph& g);

std::size_t max_orbit_diameter(const Catalogue& c);

void save_catalogue(const Catalogue& c, const std::filesystem::path& path);
Catalogue load_catalogue(const std::filesystem::path& path);
std::string render_catalogue(const Catalogue& c);
Catalogue parse_catalogue(const std::string& text);

}  // namespace psgraph
