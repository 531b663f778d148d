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

#include <cmath>
#include <cstdio>
#include <sstream>

#include "psgraph/errors.hpp"
#include "psgraph/fock/fock.hpp"

namespace psgraph {

FockVector::FockVector(std::size_t modes) : modes_(modes) {
  if (modes > kMaxModes) {
    throw GuardExceeded("Fock vectors support at most " + std::to_string(kMaxModes) + " modes");
  }
}

FockVector FockVector::vacuum(std::size_t modes) {
  FockVector v(modes);
  v.add(Occupation(modes, 0), 1.0);
  return v;
}

FockVector FockVector::basis(const Occupation& occupation, Complex amplitude) {
  FockVector v(occupation.size());
  v.add(occupation, amplitude);
  return v;
}

void FockVector::add(const Occupation& occupation, Complex amplitude) {
  if (occupation.size() != modes_) throw InvalidArgument("occupation has wrong mode count");
  auto [it, fresh] = terms_.emplace(occupation, amplitude);
  if (!fresh) it->second += amplitude;
  if (std::abs(it->second) < kPruneThreshold) terms_.erase(it);
}

Complex FockVector::amplitude(const Occupation& occupation) const {
  auto it = terms_.find(occupation);
  return it == terms_.end() ? Complex(0.0) : it->second;
}

double FockVector::squared_norm() const {
  double total = 0.0;
  for (const auto& [occ, a] : terms_) total += std::norm(a);
  return total;
}

FockVector FockVector::scaled(Complex factor) const {
  FockVector out(modes_);
  for (const auto& [occ, a] : terms_) out.add(occ, a * factor);
  return out;
}

namespace {

std::string format_real(double x) {
  if (std::abs(x) < kPruneThreshold) x = 0.0;
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

}  // namespace

std::string FockVector::to_string() const {
  std::ostringstream os;
  for (const auto& [occ, a] : terms_) {
    os << '|';
    for (std::size_t k = 0; k < occ.size(); ++k) {
      if (k) os << ',';
      os << static_cast<int>(occ[k]);
    }
    os << "> " << format_real(a.real());
    if (std::abs(a.imag()) >= kPruneThreshold) {
      os << (a.imag() < 0 ? " - " : " + ") << format_real(std::abs(a.imag())) << "i";
    }
    os << '\n';
  }
  return os.str();
}

FockVector tensor(const FockVector& a, const FockVector& b) {
  FockVector out(a.modes() + b.modes());
  for (const auto& [oa, xa] : a.terms()) {
    for (const auto& [ob, xb] : b.terms()) {
      Occupation o = oa;
      o.insert(o.end(), ob.begin(), ob.end());
      out.add(o, xa * xb);
    }
  }
  return out;
}

}  // namespace psgraph
