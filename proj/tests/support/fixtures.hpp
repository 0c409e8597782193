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

// The bundled corpus arrangements, built directly in code.

#include <string>
#include <utility>
#include <vector>

#include "subarr/lattice.hpp"

namespace fixtures {

using Rows = std::vector<std::vector<long>>;

inline subarr::lattice::Arrangement make(std::size_t ambient, const std::vector<std::pair<std::string, Rows>>& atoms) {
  subarr::lattice::Arrangement arr;
  arr.ambient_dim = ambient;
  for (const auto& [name, rows] : atoms) {
    std::vector<std::vector<subarr::exactla::Rat>> eq;
    for (const auto& row : rows) {
      std::vector<subarr::exactla::Rat> r;
      for (long v : row) r.emplace_back(v);
      eq.push_back(std::move(r));
    }
    arr.atoms.push_back({name, subarr::lattice::Subspace::from_equations(ambient, eq)});
  }
  return arr;
}

// {z1 = z2 = 0} in C^2
inline subarr::lattice::Arrangement one_subspace() { return make(2, {{"x1", {{1, 0}, {0, 1}}}}); }

// {z1 = z2 = 0}, {z3 = z4 = 0} in C^4
inline subarr::lattice::Arrangement generic_two() {
  return make(4, {{"x1", {{1, 0, 0, 0}, {0, 1, 0, 0}}}, {"x2", {{0, 0, 1, 0}, {0, 0, 0, 1}}}});
}

// {z1 = z2 = 0}, {z2 = z3 = 0} in C^3
inline subarr::lattice::Arrangement two_share_line() {
  return make(3, {{"x1", {{1, 0, 0}, {0, 1, 0}}}, {"x2", {{0, 1, 0}, {0, 0, 1}}}});
}

// Three 2-planes in C^4 meeting pairwise only at the origin.
inline subarr::lattice::Arrangement case_b_three() {
  return make(4, {{"x1", {{1, 0, 0, 0}, {0, 1, 0, 0}}},
                  {"x2", {{0, 0, 1, 0}, {0, 0, 0, 1}}},
                  {"x3", {{1, 0, -1, 0}, {0, 1, 0, -1}}}});
}

// Four 2-planes in C^4 meeting pairwise only at the origin.
inline subarr::lattice::Arrangement case_b_four() {
  return make(4, {{"x1", {{1, 0, 0, 0}, {0, 1, 0, 0}}},
                  {"x2", {{0, 0, 1, 0}, {0, 0, 0, 1}}},
                  {"x3", {{1, 0, -1, 0}, {0, 1, 0, -1}}},
                  {"x4", {{1, 0, -2, 0}, {0, 1, 0, -2}}}});
}

// Coordinate 4-planes in C^6 with a Boolean lattice.
inline subarr::lattice::Arrangement boolean_three() {
  return make(6, {{"x1", {{1, 0, 0, 0, 0, 0}, {0, 1, 0, 0, 0, 0}}},
                  {"x2", {{0, 0, 1, 0, 0, 0}, {0, 0, 0, 1, 0, 0}}},
                  {"x3", {{0, 0, 0, 0, 1, 0}, {0, 0, 0, 0, 0, 1}}}});
}

// {z1 = z2 = 0}, {z2 = z3 = 0}, {z3 = z4 = 0} in C^4: not semimodular.
inline subarr::lattice::Arrangement non_geometric() {
  return make(4, {{"x1", {{1, 0, 0, 0}, {0, 1, 0, 0}}},
                  {"x2", {{0, 1, 0, 0}, {0, 0, 1, 0}}},
                  {"x3", {{0, 0, 1, 0}, {0, 0, 0, 1}}}});
}

inline std::vector<std::pair<std::string, subarr::lattice::Arrangement>> geometric_corpus() {
  return {{"one_subspace", one_subspace()}, {"generic_two", generic_two()},
          {"two_share_line", two_share_line()}, {"case_b_three", case_b_three()},
          {"case_b_four", case_b_four()}, {"boolean_three", boolean_three()}};
}

}  // namespace fixtures
