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

#include <stdexcept>
#include <string>

namespace psgraph {

// Bad argument to an operation (vertex out of range, i == j, malformed text).
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A resource guard (vertex count, photon count, state space) was exceeded.
class GuardExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A persisted file is truncated, corrupt or of the wrong version.
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// The experiment described is not physically constructible as stated.
class ModellingError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace psgraph
