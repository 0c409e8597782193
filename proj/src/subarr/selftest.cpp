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

#include "subarr/selftest.hpp"

#include <algorithm>
#include <filesystem>
#include <sstream>

#include "subarr/errors.hpp"
#include "subarr/io.hpp"

namespace subarr::selftest {

namespace fs = std::filesystem;
using dga::Cochain;
using dga::SubsetGen;
using exactla::Rat;

AxiomReport check_dga_axioms(const dga::RelativeAtomicAlgebra& algebra) {
  AxiomReport report;
  std::vector<SubsetGen> gens;
  for (int k = algebra.min_degree(); k <= algebra.max_degree(); ++k)
    for (const auto& s : algebra.basis_in_degree(k)) gens.push_back(s);
  report.generators = gens.size();

  for (const auto& s : gens) {
    const Cochain ds = algebra.differential(s);
    if (!algebra.differential(ds).is_zero()) {
      report.pass = false;
      report.failure = "d^2 != 0 on " + dga::format_subset(s);
      return report;
    }
  }
  for (const auto& a : gens) {
    const Cochain da = algebra.differential(a);
    const Cochain ga = algebra.generator(a);
    for (const auto& b : gens) {
      ++report.pairs;
      const Cochain gb = algebra.generator(b);
      const Cochain ab = algebra.product(a, b);
      const Cochain ba = algebra.product(b, a);
      const int da_deg = algebra.degree(a);
      const int db_deg = algebra.degree(b);
      const bool odd = (da_deg * db_deg) % 2 != 0;
      if (!(ab == (odd ? ba.scaled(Rat(-1)) : ba))) {
        report.pass = false;
        report.failure = "graded commutativity fails on " + dga::format_subset(a) + ", " + dga::format_subset(b);
        return report;
      }
      const Cochain lhs = algebra.differential(ab);
      const Cochain left = algebra.product(da, gb);
      const Cochain right = algebra.product(ga, algebra.differential(b));
      const Cochain rhs = da_deg % 2 == 0 ? left + right : left - right;
      if (!(lhs == rhs)) {
        report.pass = false;
        report.failure = "Leibniz rule fails on " + dga::format_subset(a) + ", " + dga::format_subset(b);
        return report;
      }
    }
  }
  return report;
}

namespace {

CaseResult run_one(const fs::path& file, const Options& options) {
  CaseResult out;
  out.name = file.stem().string();
  auto say = [&](const std::string& s) { out.lines.push_back(s); };

  lattice::Arrangement raw;
  try {
    raw = io::load_arrangement(file.string());
  } catch (const InputError& e) {
    say(std::string("input rejected: ") + e.what());
    return out;
  }
  const auto normalized = lattice::normalize(raw);
  const auto lat = lattice::IntersectionLattice::build(normalized.arrangement);
  const auto geo = lattice::is_geometric(*lat);
  if (!geo.geometric) {
    try {
      pipeline::analyze(raw, {options.max_degree});
      say("non-geometric lattice was not rejected");
    } catch (const InputError& e) {
      say(std::string("non-geometric lattice rejected: ") + e.what());
      out.pass = true;
    }
    return out;
  }

  const dga::RelativeAtomicAlgebra algebra(lat, dga::DgaOptions{options.inject_sign_fault});
  const auto axioms = check_dga_axioms(algebra);
  if (!axioms.pass) {
    say("dga axioms: " + axioms.failure);
    return out;
  }
  say("dga axioms: " + std::to_string(axioms.generators) + " generators, " + std::to_string(axioms.pairs) + " pairs");

  try {
    pipeline::Options po;
    po.max_degree = options.max_degree;
    const auto a = pipeline::analyze(raw, po);
    if (a.vanishing.vacuous)
      say("vanishing differentials: vacuous");
    else
      say("vanishing differentials: " + std::to_string(a.vanishing.checked) + " subsets");
    const auto& c = a.classification;
    if (c.verdict == cohomology::Verdict::Elliptic) {
      say("verdict: elliptic, exterior isomorphism verified");
    } else {
      say("verdict: hyperbolic case " + cohomology::to_string(*c.hyperbolic_case) + ", r = " + std::to_string(*c.r));
      if (a.case_a) say("retraction: " + std::to_string(a.case_a->retraction_basis_checked) + " basis classes");
      if (a.case_b) say("retraction: dim in word length r = " + std::to_string(a.case_b->algebra.dim(a.case_b->r)));
    }
    say("minimal model: quasi-isomorphic through degree " + std::to_string(options.max_degree) + ", " +
        std::to_string(a.model_generators.size()) + " generators");
    if (a.growth)
      say("certificate: " + sullivan::to_string(a.growth->kind) + (a.growth->passed ? " passed" : " inconclusive"));
    out.pass = true;
  } catch (const InvariantError& e) {
    say(std::string("invariant failure: ") + e.what());
  } catch (const InputError& e) {
    say(std::string("input rejected: ") + e.what());
  }
  return out;
}

}  // namespace

Result run(const Options& options) {
  const fs::path dir(options.corpus_dir);
  std::error_code ec;
  if (!fs::is_directory(dir, ec)) throw InputError("corpus directory not found: " + options.corpus_dir);
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(dir, ec))
    if (entry.is_regular_file() && entry.path().extension() == ".json") files.push_back(entry.path());
  if (ec) throw InputError("cannot read corpus directory " + options.corpus_dir + ": " + ec.message());
  if (files.empty()) throw InputError("no arrangement files in " + options.corpus_dir);
  std::sort(files.begin(), files.end());

  Result result;
  result.pass = true;
  for (const auto& f : files) {
    result.cases.push_back(run_one(f, options));
    result.pass = result.pass && result.cases.back().pass;
  }
  return result;
}

std::string Result::summary() const {
  std::ostringstream out;
  std::size_t passed = 0;
  for (const auto& c : cases) {
    out << (c.pass ? "PASS " : "FAIL ") << c.name << "\n";
    for (const auto& line : c.lines) out << "  " << line << "\n";
    if (c.pass) ++passed;
  }
  out << passed << "/" << cases.size() << " passed\n";
  return out.str();
}

}  // namespace subarr::selftest
