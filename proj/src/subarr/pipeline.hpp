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

// End-to-end analysis of one arrangement and its canonical report.

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "subarr/cohomology.hpp"
#include "subarr/dga.hpp"
#include "subarr/lattice.hpp"
#include "subarr/sullivan.hpp"
#include "subarr/witness.hpp"

namespace subarr::pipeline {

inline constexpr int kDefaultMaxDegree = 12;

struct Options {
  int max_degree = kDefaultMaxDegree;
  std::size_t generator_cap = sullivan::kDefaultGeneratorCap;
};

struct Analysis {
  Options options;
  lattice::Normalized normalized;
  std::shared_ptr<const lattice::IntersectionLattice> lattice;
  std::shared_ptr<const dga::RelativeAtomicAlgebra> algebra;
  std::shared_ptr<const cohomology::CohomologyRing> ring;
  cohomology::PhiAnalysis phi;
  cohomology::VanishingReport vanishing;
  cohomology::Classification classification;
  bool exterior_iso = false;
  std::optional<witness::CaseAWitness> case_a;
  std::optional<witness::CaseBWitness> case_b;
  std::vector<sullivan::ModelGenerator> model_generators;
  std::vector<sullivan::DegreeCheck> model_checks;
  std::map<int, std::size_t> homotopy_ranks;
  std::optional<sullivan::GrowthCertificate> growth;
};

// normalize -> lattice -> geometric check -> cohomology -> phi -> vanishing check ->
// classification -> witness -> minimal model -> certificate.
// Throws InputError on hypothesis violations and InvariantError on failed identities.
Analysis analyze(const lattice::Arrangement& raw, const Options& options = {});

nlohmann::json report_json(const Analysis& a);
std::string report_text(const Analysis& a);
// Two-space indented JSON with sorted keys and a trailing newline.
std::string serialize(const nlohmann::json& j);

}  // namespace subarr::pipeline
