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

#include <bit>

#include "psgraph/errors.hpp"
#include "psgraph/fock/fock.hpp"

namespace psgraph {

Complex permanent(const Eigen::MatrixXcd& m) {
  if (m.rows() != m.cols()) throw InvalidArgument("permanent needs a square matrix");
  const std::size_t n = static_cast<std::size_t>(m.rows());
  if (n > kMaxPermanentSize) {
    throw GuardExceeded("permanent supports size <= " + std::to_string(kMaxPermanentSize));
  }
  if (n == 0) return 1.0;
  // Ryser: perm = (-1)^n sum_S (-1)^|S| prod_i sum_{j in S} m(i, j), visiting
  // subsets in Gray-code order so each step adds or removes one column.
  Eigen::VectorXcd row_sums = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(n));
  Complex total = 0.0;
  std::uint32_t gray = 0;
  for (std::uint32_t k = 1; k < (1u << n); ++k) {
    const std::uint32_t next = k ^ (k >> 1);
    const std::uint32_t flipped = next ^ gray;
    const int col = std::countr_zero(flipped);
    if (next & flipped) {
      row_sums += m.col(col);
    } else {
      row_sums -= m.col(col);
    }
    gray = next;
    Complex prod = 1.0;
    for (std::size_t i = 0; i < n; ++i) prod *= row_sums(static_cast<Eigen::Index>(i));
    total += (std::popcount(gray) % 2) ? -prod : prod;
  }
  return (n % 2) ? -total : total;
}

}  // namespace psgraph
