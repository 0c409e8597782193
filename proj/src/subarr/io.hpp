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

// Arrangement files:
// {"ambient_dim": l, "subspaces": [{"name": "x1", "equations": [["1", "0", ...], ...]}, ...]}
// Every coefficient is a rational string p or p/q.

#include <string>

#include "subarr/lattice.hpp"

namespace subarr::io {

// Throws InputError naming the line and column of syntax errors and the
// JSON path of schema errors.
lattice::Arrangement parse_arrangement(const std::string& text, const std::string& source = "<input>");
lattice::Arrangement load_arrangement(const std::string& path);

}  // namespace subarr::io
