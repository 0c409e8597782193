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

#include "subarr/pipeline.hpp"

#include <algorithm>
#include <sstream>

#include "subarr/errors.hpp"

namespace subarr::pipeline {

using nlohmann::json;
using lattice::AtomMask;

namespace {

std::vector<std::string> atom_names(const lattice::IntersectionLattice& lat, AtomMask mask) {
  std::vector<std::string> out;
  for (auto i : dga::SubsetGen(mask).indices()) out.push_back(lat.arrangement().atoms[i].name);
  return out;
}

std::vector<std::string> atom_names(const lattice::IntersectionLattice& lat, const std::vector<std::size_t>& idx) {
  std::vector<std::string> out;
  for (auto i : idx) out.push_back(lat.arrangement().atoms[i].name);
  return out;
}

json ext_json(const cohomology::ExtElement& e) {
  json terms = json::array();
  for (const auto& [w, c] : e.terms())
    terms.push_back({{"word", cohomology::format_word(w.bits())}, {"coefficient", exactla::to_string(c)}});
  return {{"text", e.to_string()}, {"terms", terms}};
}

json degree_table(const std::map<int, std::size_t>& m) {
  json out = json::array();
  for (const auto& [k, v] : m) out.push_back({{"degree", k}, {"rank", v}});
  return out;
}

json algebra_json(const witness::TruncatedExterior& a) {
  json gens = json::array();
  for (std::size_t i = 0; i < a.generator_count(); ++i)
    gens.push_back({{"name", "e" + std::to_string(i + 1)}, {"atom", a.generators()[i].name},
                    {"degree", a.generators()[i].degree}});
  json dims = json::array();
  for (std::size_t s = 0; s <= a.generator_count(); ++s) dims.push_back(a.dim(s));
  json basis = json::array();
  for (std::size_t s = 0; s <= a.top_length(); ++s) {
    json words = json::array();
    for (auto w : a.basis(s)) words.push_back(cohomology::format_word(w));
    basis.push_back({{"word_length", s}, {"words", words}});
  }
  return {{"generators", gens}, {"relation_count", a.relations().size()}, {"dims_by_word_length", dims},
          {"basis", basis}, {"total_dim", a.total_dim()}};
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? sep : "") + parts[i];
  return out;
}

}  // namespace

Analysis analyze(const lattice::Arrangement& raw, const Options& options) {
  Analysis a;
  a.options = options;
  if (options.max_degree < 2) throw InputError("--max-degree must be at least 2");
  a.normalized = lattice::normalize(raw);
  a.lattice = lattice::IntersectionLattice::build(a.normalized.arrangement);
  const auto geo = lattice::is_geometric(*a.lattice);
  if (!geo.geometric) throw InputError("intersection lattice is not geometric: " + geo.message);

  a.algebra = std::make_shared<dga::RelativeAtomicAlgebra>(a.lattice);
  a.ring = cohomology::CohomologyRing::compute(a.algebra);
  a.phi = cohomology::analyze_phi(*a.ring);
  a.vanishing = cohomology::check_vanishing_differentials(*a.ring, a.phi);
  if (!a.vanishing.pass) throw InvariantError("vanishing-differential check failed: " + a.vanishing.message);
  a.classification = cohomology::classify(*a.ring, a.phi);

  const auto& c = a.classification;
  if (c.verdict == cohomology::Verdict::Elliptic) {
    a.exterior_iso = cohomology::check_exterior_iso(*a.ring, c);
  } else if (c.hyperbolic_case == cohomology::HyperbolicCase::A) {
    a.case_a = witness::build_case_a(*a.ring, c);
  } else {
    a.case_b = witness::build_case_b(*a.ring, c);
  }

  const auto model =
      sullivan::minimal_model(sullivan::GradedAlgebra::from_cohomology(*a.ring), options.max_degree, options.generator_cap);
  a.model_checks = model.verify();
  a.model_generators = model.generators();
  a.homotopy_ranks = model.ranks();

  if (c.verdict == cohomology::Verdict::Elliptic) {
    std::map<int, std::size_t> expected;
    for (int d : c.sphere_dimensions)
      if (d <= options.max_degree) ++expected[d];
    if (a.homotopy_ranks != expected) throw InvariantError("model of an elliptic input is not a product of odd spheres");
    for (const auto& g : a.model_generators)
      if (!g.differential.empty()) throw InvariantError("model of an elliptic input has a nonzero differential");
  } else {
    sullivan::GrowthRequest req;
    req.verdict = c.verdict;
    req.hyperbolic_case = c.hyperbolic_case;
    if (a.case_a) req.loop_degrees = std::make_pair(a.case_a->loop_degree_a, a.case_a->loop_degree_b);
    a.growth = sullivan::certify_hyperbolic_growth(req, a.homotopy_ranks, options.max_degree);
  }
  return a;
}

json report_json(const Analysis& a) {
  const auto& lat = *a.lattice;
  const auto& alg = *a.algebra;
  const auto& ring = *a.ring;
  const auto& c = a.classification;

  json atoms = json::array();
  for (std::size_t i = 0; i < lat.atom_count(); ++i)
    atoms.push_back({{"name", lat.arrangement().atoms[i].name},
                     {"codim", lat.codim_of(lat.atom(i))},
                     {"degree", alg.degree(dga::SubsetGen(AtomMask{1} << i))}});
  json elements = json::array();
  for (std::size_t e = 0; e < lat.size(); ++e)
    elements.push_back({{"label", lat.label(e)},
                        {"rank", lat.rank_of(e)},
                        {"codim", lat.codim_of(e)},
                        {"atoms_below", atom_names(lat, lat.atoms_below(e))}});
  json lattice_j = {{"ambient_dim", lat.arrangement().ambient_dim},
                    {"atoms", atoms},
                    {"elements", elements},
                    {"size", lat.size()},
                    {"rank", lat.rank_of(lat.top())},
                    {"geometric", true}};

  json kernel = json::array();
  for (const auto& [s, basis] : a.phi.kernel_by_wordlength) {
    json b = json::array();
    for (const auto& e : basis) b.push_back(ext_json(e));
    kernel.push_back({{"word_length", s}, {"basis", b}});
  }
  json phi_j = {{"injective", a.phi.injective()},
                {"r", a.phi.r ? json(*a.phi.r) : json(nullptr)},
                {"monomial_witness",
                 a.phi.monomial_witness ? json(cohomology::format_word(*a.phi.monomial_witness)) : json(nullptr)},
                {"kernel", kernel},
                {"vanishing_differentials",
                 {{"vacuous", a.vanishing.vacuous}, {"pass", a.vanishing.pass}, {"checked", a.vanishing.checked},
                  {"message", a.vanishing.message}}}};

  json class_j = {{"verdict", cohomology::to_string(c.verdict)}};
  if (c.verdict == cohomology::Verdict::Elliptic) {
    class_j["sphere_dimensions"] = c.sphere_dimensions;
    class_j["exterior_isomorphism"] = a.exterior_iso;
    class_j["case"] = nullptr;
    class_j["r"] = nullptr;
  } else {
    class_j["case"] = cohomology::to_string(*c.hyperbolic_case);
    class_j["r"] = *c.r;
    json k = json::array();
    for (const auto& e : c.kernel_at_r) k.push_back(ext_json(e));
    class_j["kernel_at_r"] = k;
    class_j["monomial_witness"] =
        c.monomial_witness ? json(cohomology::format_word(*c.monomial_witness)) : json(nullptr);
  }

  json witness_j = nullptr;
  if (a.case_a) {
    const auto& w = *a.case_a;
    witness_j = {{"case", "A"},
                 {"atoms", atom_names(lat, w.atoms)},
                 {"algebra", algebra_json(w.algebra)},
                 {"retraction_verified", w.retraction_verified},
                 {"free_lie_generator_loop_degrees", {w.loop_degree_a, w.loop_degree_b}},
                 {"checks",
                  {{"multiplicative_pairs", w.multiplicative_pairs_checked},
                   {"chain_map_cochains", w.chain_map_cochains_checked},
                   {"retraction_basis", w.retraction_basis_checked}}}};
  } else if (a.case_b) {
    const auto& w = *a.case_b;
    witness_j = {{"case", "B"},
                 {"sigma", atom_names(lat, w.sigma)},
                 {"join", lat.label(w.join_element)},
                 {"r", w.r},
                 {"atoms", atom_names(lat, w.below)},
                 {"m", w.below.size()},
                 {"algebra", algebra_json(w.algebra)},
                 {"kernel_dim_at_r", w.kernel_dim_at_r},
                 {"rho_injective", w.rho_injective},
                 {"retraction_verified", w.retraction_verified},
                 {"free_lie_generator_loop_degrees", nullptr},
                 {"checks",
                  {{"bracket_identities", w.brackets_checked},
                   {"multiplicative_pairs", w.multiplicative_pairs_checked},
                   {"chain_map_cochains", w.chain_map_cochains_checked}}}};
  }

  json ranks = json::array();
  for (int k = 2; k <= a.options.max_degree; ++k) {
    auto it = a.homotopy_ranks.find(k);
    ranks.push_back({{"degree", k}, {"rank", it == a.homotopy_ranks.end() ? 0 : it->second}});
  }
  json checks = json::array();
  for (const auto& row : a.model_checks)
    checks.push_back({{"degree", row.degree}, {"model", row.model_cohomology}, {"target", row.target_dim},
                      {"induced_rank", row.induced_rank}});
  json homotopy_j = {{"max_degree", a.options.max_degree},
                     {"ranks", ranks},
                     {"model_generators", a.model_generators.size()},
                     {"quasi_isomorphism", checks}};

  json certs = json::array();
  if (c.verdict == cohomology::Verdict::Elliptic) {
    certs.push_back({{"kind", "exterior_isomorphism"},
                     {"passed", a.exterior_iso},
                     {"sphere_dimensions", c.sphere_dimensions},
                     {"max_degree", a.options.max_degree}});
  } else if (a.growth) {
    const auto& g = *a.growth;
    json cert = {{"kind", sullivan::to_string(g.kind)}, {"passed", g.passed}, {"max_degree", g.max_degree}};
    if (g.kind == sullivan::GrowthCertificate::Kind::FreeLieLowerBound) {
      json rows = json::array();
      for (const auto& row : g.rows)
        rows.push_back({{"loop_degree", row.degree}, {"lower_bound", row.lower_bound.get_str()}, {"actual", row.actual}});
      cert["loop_degrees"] = g.loop_degrees;
      cert["rows"] = rows;
    } else {
      cert["window_split"] = g.window_split;
      cert["low_window"] = {2, g.window_split};
      cert["high_window"] = {g.window_split, g.max_degree};
      cert["low_sum"] = g.low_sum;
      cert["high_sum"] = g.high_sum;
    }
    certs.push_back(cert);
  }

  return {{"lattice", lattice_j},
          {"betti", degree_table(ring.betti_table())},
          {"phi", phi_j},
          {"classification", class_j},
          {"witness", witness_j},
          {"homotopy_ranks", homotopy_j},
          {"certificates", certs},
          {"warnings", a.normalized.warnings}};
}

std::string report_text(const Analysis& a) {
  const auto& lat = *a.lattice;
  const auto& c = a.classification;
  std::ostringstream out;
  out << "arrangement: " << lat.atom_count() << " subspaces in C^" << lat.arrangement().ambient_dim << "\n";
  for (const auto& w : a.normalized.warnings) out << "warning: " << w << "\n";
  out << "lattice: " << lat.size() << " elements, rank " << lat.rank_of(lat.top()) << ", geometric\n";
  out << "betti:";
  for (const auto& [k, b] : a.ring->betti_table()) out << " b" << k << "=" << b;
  out << "\n";
  if (a.phi.injective()) {
    out << "phi: injective\n";
  } else {
    out << "phi: r = " << *a.phi.r;
    if (a.phi.monomial_witness) out << ", monomial witness " << cohomology::format_word(*a.phi.monomial_witness);
    out << "\n";
    for (const auto& e : c.kernel_at_r) out << "  kernel: " << e.to_string() << "\n";
  }
  if (c.verdict == cohomology::Verdict::Elliptic) {
    std::vector<std::string> dims;
    for (int d : c.sphere_dimensions) dims.push_back(std::to_string(d));
    out << "verdict: elliptic, product of spheres of dimensions " << join(dims, ", ") << "\n";
  } else {
    out << "verdict: hyperbolic, case " << cohomology::to_string(*c.hyperbolic_case) << "\n";
  }
  if (a.case_a) {
    out << "witness: truncated exterior algebra on " << join(atom_names(lat, a.case_a->atoms), ", ") << ", dim " << a.case_a->algebra.total_dim()
        << ", retraction verified, loop degrees (" << a.case_a->loop_degree_a << ", " << a.case_a->loop_degree_b << ")\n";
  }
  if (a.case_b) {
    out << "witness: truncated exterior algebra on " << join(atom_names(lat, a.case_b->below), ", ") << " below " << lat.label(a.case_b->join_element)
        << ", dim in word length " << a.case_b->r << " = " << a.case_b->algebra.dim(a.case_b->r) << ", retraction verified\n";
  }
  out << "homotopy ranks (N = " << a.options.max_degree << "):";
  for (const auto& [k, v] : a.homotopy_ranks) out << " pi" << k << "=" << v;
  out << "\n";
  if (a.growth) {
    const auto& g = *a.growth;
    if (g.kind == sullivan::GrowthCertificate::Kind::FreeLieLowerBound) {
      out << "certificate: free Lie lower bound on loop degrees (" << g.loop_degrees[0] << ", " << g.loop_degrees[1]
          << ")\n";
      out << "  k  bound  pi_{k+1}\n";
      for (const auto& row : g.rows) {
        std::ostringstream line;
        line << "  " << row.degree << "  " << row.lower_bound.get_str() << "  " << row.actual;
        out << line.str() << "\n";
      }
    } else {
      out << "certificate: growth window, sum over [" << g.window_split << ", " << g.max_degree << "] = " << g.high_sum
          << (g.passed ? " > " : " <= ") << "sum over [2, " << g.window_split << "] = " << g.low_sum
          << (g.passed ? "" : ", growth not exhibited at this degree bound") << "\n";
    }
  } else {
    out << "certificate: exterior isomorphism verified\n";
  }
  return out.str();
}

std::string serialize(const json& j) { return j.dump(2) + "\n"; }

}  // namespace subarr::pipeline
