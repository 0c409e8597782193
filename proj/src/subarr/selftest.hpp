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

// Invariant suite over a directory of arrangement files.

#include <cstddef>
#include <string>
#include <vector>

#include "subarr/dga.hpp"
#include "subarr/pipeline.hpp"

namespace subarr::selftest {

struct AxiomReport {
  bool pass = true;
  std::size_t generators = 0;
  std::size_t pairs = 0;
  std::string failure;  // first failing identity, naming the generators
};

// d^2 = 0 on every generator, Leibniz and graded commutativity on every pair.
AxiomReport check_dga_axioms(const dga::RelativeAtomicAlgebra& algebra);

struct Options {
  int max_degree = pipeline::kDefaultMaxDegree;
  std::string corpus_dir;
  bool inject_sign_fault = false;
};

struct CaseResult {
  std::string name;
  bool pass = false;
  std::vector<std::string> lines;
};

struct Result {
  bool pass = false;
  std::vector<CaseResult> cases;

  std::string summary() const;
};

// Inputs whose lattice is not geometric pass when the pipeline rejects them.
// Throws InputError when the directory cannot be read or holds no files.
Result run(const Options& options);

}  // namespace subarr::selftest
