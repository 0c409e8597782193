// Copyright 2026 The subarr Authors.
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

namespace subarr {

// Malformed input or a violated standing hypothesis (codim >= 2, geometric
// lattice, resource limits). Surfaces as exit code 2.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A computed identity that must hold did not. Surfaces as exit code 1.
class InvariantError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A configured size guard was exceeded. Reported like an input problem.
class ResourceLimitError : public InputError {
 public:
  using InputError::InputError;
};

}  // namespace subarr
