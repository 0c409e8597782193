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

#include "subarr/cohomology.hpp"

#include <algorithm>
#include <bit>
#include <sstream>
#include <stdexcept>

#include "subarr/errors.hpp"

namespace subarr::cohomology {

using exactla::Vec;

std::shared_ptr<const CohomologyRing> CohomologyRing::compute(std::shared_ptr<const dga::RelativeAtomicAlgebra> algebra) {
  auto ring = std::shared_ptr<CohomologyRing>(new CohomologyRing());
  ring->algebra_ = std::move(algebra);
  const auto& a = *ring->algebra_;
  const int lo = a.min_degree();
  const int hi = a.max_degree();

  std::vector<Vec> incoming;  // images of d from degree k-1
  for (int k = lo; k <= hi; ++k) {
    const auto& basis = a.basis_in_degree(k);
    std::vector<Vec> columns;
    columns.reserve(basis.size());
    for (const auto& s : basis) columns.push_back(a.to_vec(a.differential(s)));

    Degree deg;
    deg.cycles = exactla::kernel_basis(exactla::QMat::from_columns(columns, a.dim(k + 1)));
    exactla::RowEchelon boundary_span(basis.size());
    for (const auto& b : incoming) boundary_span.insert(b);
    deg.boundary_rank = boundary_span.rank();
    try {
      deg.quotient = exactla::coset_representatives(basis.size(), incoming, deg.cycles);
    } catch (const std::invalid_argument& e) {
      throw InvariantError("boundaries in degree " + std::to_string(k) + " are not cycles: d^2 != 0");
    }
    for (const auto& v : deg.quotient.basis) deg.reps.push_back(a.from_vec(k, v));
    ring->degrees_.push_back(std::move(deg));
    incoming = std::move(columns);
  }

  // Product table on representatives.
  for (int da = lo; da <= hi; ++da) {
    for (int db = lo; db <= hi; ++db) {
      if (da + db < lo || da + db > hi) continue;
      const auto& ra = ring->representatives(da);
      const auto& rb = ring->representatives(db);
      for (std::size_t i = 0; i < ra.size(); ++i) {
        for (std::size_t j = 0; j < rb.size(); ++j) {
          const dga::Cochain p = a.product(ra[i], rb[j]);
          ClassElement c;
          try {
            c = ring->class_of(p);
          } catch (const std::invalid_argument&) {
            throw InvariantError("product of cycles is not a cycle in degree " + std::to_string(da + db));
          }
          ring->table_.emplace(std::make_tuple(da, i, db, j), std::move(c.coords));
        }
      }
    }
  }
  return ring;
}

const CohomologyRing::Degree* CohomologyRing::degree_data(int k) const {
  if (k < min_degree() || k > max_degree()) return nullptr;
  return &degrees_[static_cast<std::size_t>(k - min_degree())];
}

std::size_t CohomologyRing::betti(int k) const {
  const Degree* d = degree_data(k);
  return d ? d->reps.size() : 0;
}

std::map<int, std::size_t> CohomologyRing::betti_table() const {
  std::map<int, std::size_t> out;
  for (int k = min_degree(); k <= max_degree(); ++k) {
    if (betti(k) != 0) out.emplace(k, betti(k));
  }
  return out;
}

std::size_t CohomologyRing::cycle_dim(int k) const {
  const Degree* d = degree_data(k);
  return d ? d->cycles.size() : 0;
}

std::size_t CohomologyRing::boundary_dim(int k) const {
  const Degree* d = degree_data(k);
  return d ? d->boundary_rank : 0;
}

const std::vector<dga::Cochain>& CohomologyRing::representatives(int k) const {
  static const std::vector<dga::Cochain> kEmpty;
  const Degree* d = degree_data(k);
  return d ? d->reps : kEmpty;
}

ClassElement CohomologyRing::zero(int degree) const { return ClassElement{degree, Vec(betti(degree))}; }

ClassElement CohomologyRing::class_of(const dga::Cochain& c) const {
  const Degree* d = degree_data(c.degree());
  if (d == nullptr) {
    if (!c.is_zero()) throw std::invalid_argument("cochain degree outside the algebra");
    return zero(c.degree());
  }
  return ClassElement{c.degree(), d->quotient.projection(algebra_->to_vec(c))};
}

dga::Cochain CohomologyRing::representative(const ClassElement& x) const {
  dga::Cochain out(x.degree);
  const auto& reps = representatives(x.degree);
  if (x.coords.dim() != reps.size()) throw std::invalid_argument("class coordinates have the wrong dimension");
  for (const auto& e : x.coords.entries()) out = out + reps[e.index].scaled(e.value);
  return out;
}

ClassElement CohomologyRing::unit() const { return class_of(algebra_->generator(SubsetGen(0))); }

ClassElement CohomologyRing::atom_class(std::size_t i) const {
  return class_of(algebra_->generator(SubsetGen(AtomMask{1} << i)));
}

const Vec& CohomologyRing::basis_product(int da, std::size_t i, int db, std::size_t j) const {
  static const Vec kEmpty(0);
  auto it = table_.find(std::make_tuple(da, i, db, j));
  return it == table_.end() ? kEmpty : it->second;
}

ClassElement CohomologyRing::product(const ClassElement& a, const ClassElement& b) const {
  ClassElement out = zero(a.degree + b.degree);
  if (out.coords.dim() == 0) return out;
  for (const auto& ea : a.coords.entries()) {
    for (const auto& eb : b.coords.entries()) {
      out.coords.add_scaled(basis_product(a.degree, ea.index, b.degree, eb.index), ea.value * eb.value);
    }
  }
  return out;
}

// ---------------------------------------------------------------------------

int word_degree(const dga::RelativeAtomicAlgebra& algebra, AtomMask word) {
  int total = 0;
  for (auto i : SubsetGen(word).indices()) total += algebra.degree(SubsetGen(AtomMask{1} << i));
  return total;
}

ClassElement phi_monomial(const CohomologyRing& ring, AtomMask word) {
  const auto& a = ring.algebra();
  dga::Cochain acc = a.generator(SubsetGen(0));
  for (auto i : SubsetGen(word).indices()) {
    acc = a.product(acc, a.generator(SubsetGen(AtomMask{1} << i)));
    if (acc.is_zero()) return ring.zero(word_degree(a, word));
  }
  return ring.class_of(acc);
}

std::map<int, Vec> phi(const CohomologyRing& ring, const ExtElement& e) {
  std::map<int, Vec> out;
  for (const auto& [w, c] : e.terms()) {
    ClassElement img = phi_monomial(ring, w.bits());
    auto it = out.find(img.degree);
    if (it == out.end()) it = out.emplace(img.degree, Vec(img.coords.dim())).first;
    it->second.add_scaled(img.coords, c);
  }
  return out;
}

PhiAnalysis analyze_phi(const CohomologyRing& ring) {
  PhiAnalysis out;
  out.n = ring.algebra().atom_count();
  for (std::size_t s = 1; s <= out.n; ++s) {
    const auto words = words_of_length(out.n, s);
    std::vector<ClassElement> images;
    images.reserve(words.size());
    std::map<int, std::size_t> offsets;
    for (auto w : words) {
      images.push_back(phi_monomial(ring, w));
      offsets.emplace(images.back().degree, 0);
    }
    std::size_t total = 0;
    for (auto& [deg, off] : offsets) {
      off = total;
      total += ring.betti(deg);
    }
    std::vector<Vec> columns;
    for (const auto& img : images) {
      Vec col(total);
      const std::size_t off = offsets.at(img.degree);
      for (const auto& e : img.coords.entries()) col.push_back(off + e.index, e.value);
      columns.push_back(std::move(col));
    }
    const auto kernel = exactla::kernel_basis(exactla::QMat::from_columns(columns, total));
    if (kernel.empty()) continue;
    std::vector<ExtElement> basis;
    for (const auto& v : kernel) {
      ExtElement x(s);
      for (const auto& e : v.entries()) x.add(words[e.index], e.value);
      basis.push_back(std::move(x));
    }
    out.kernel_by_wordlength.emplace(s, std::move(basis));
    if (!out.r) {
      out.r = s;
      for (std::size_t i = 0; i < words.size(); ++i) {
        if (images[i].is_zero()) {
          out.monomial_witness = words[i];
          break;
        }
      }
    }
  }
  return out;
}

VanishingReport check_vanishing_differentials(const CohomologyRing& ring, const PhiAnalysis& analysis) {
  VanishingReport out;
  if (!analysis.r) {
    out.vacuous = true;
    out.pass = true;
    out.message = "phi is injective; nothing to check";
    return out;
  }
  const auto& a = ring.algebra();
  const auto& lat = a.lattice();
  const std::size_t r = *analysis.r;
  const std::size_t masks = std::size_t{1} << a.atom_count();
  for (std::size_t m = 0; m < masks; ++m) {
    const SubsetGen s(static_cast<AtomMask>(m));
    if (s.size() > r) continue;
    ++out.checked;
    if (!a.differential(s).is_zero()) {
      out.violator = s;
      out.message = "d" + dga::format_subset(s) + " != 0";
      return out;
    }
    if (lat.rank_of(lat.join_of(s.bits())) != s.size()) {
      out.violator = s;
      out.message = "rank of join" + dga::format_subset(s) + " differs from its size";
      return out;
    }
  }
  out.pass = true;
  out.message = "all " + std::to_string(out.checked) + " subsets of size <= " + std::to_string(r) + " pass";
  return out;
}

Classification classify(const CohomologyRing& ring, const PhiAnalysis& analysis) {
  Classification out;
  const auto& a = ring.algebra();
  if (analysis.injective()) {
    out.verdict = Verdict::Elliptic;
    for (std::size_t i = 0; i < a.atom_count(); ++i)
      out.sphere_dimensions.push_back(a.degree(SubsetGen(AtomMask{1} << i)));
    std::sort(out.sphere_dimensions.begin(), out.sphere_dimensions.end());
    return out;
  }
  out.verdict = Verdict::Hyperbolic;
  out.r = analysis.r;
  out.kernel_at_r = analysis.kernel_by_wordlength.at(*analysis.r);
  if (analysis.monomial_witness) {
    out.hyperbolic_case = HyperbolicCase::A;
    out.monomial_witness = analysis.monomial_witness;
  } else {
    out.hyperbolic_case = HyperbolicCase::B;
  }
  return out;
}

bool check_exterior_iso(const CohomologyRing& ring, const Classification& c) {
  if (c.verdict != Verdict::Elliptic) throw std::invalid_argument("exterior check applies to elliptic verdicts only");
  const auto& a = ring.algebra();
  // Coefficients of prod (1 + t^(2 codim - 1)).
  std::map<int, long> poly{{0, 1}};
  for (std::size_t i = 0; i < a.atom_count(); ++i) {
    const int d = a.degree(SubsetGen(AtomMask{1} << i));
    std::map<int, long> next = poly;
    for (const auto& [k, v] : poly) next[k + d] += v;
    poly = std::move(next);
  }
  std::map<int, long> betti;
  for (const auto& [k, b] : ring.betti_table()) betti[k] = static_cast<long>(b);
  if (poly != betti) {
    std::ostringstream msg;
    msg << "Betti numbers differ from the exterior-algebra Poincare polynomial:";
    for (const auto& [k, v] : poly) msg << " t^" << k << ":" << v << " vs " << ring.betti(k);
    throw InvariantError(msg.str());
  }
  const auto& lat = a.lattice();
  const std::size_t masks = std::size_t{1} << a.atom_count();
  for (std::size_t m = 0; m < masks; ++m) {
    const auto w = static_cast<AtomMask>(m);
    if (lat.rank_of(lat.join_of(w)) != SubsetGen(w).size()) continue;
    if (phi_monomial(ring, w).is_zero())
      throw InvariantError("product of atom classes over independent " + dga::format_subset(SubsetGen(w)) +
                           " vanishes");
  }
  return true;
}

std::optional<int> independent_generation_failure(const CohomologyRing& ring) {
  const auto& a = ring.algebra();
  const auto& lat = a.lattice();
  for (int k = ring.min_degree(); k <= ring.max_degree(); ++k) {
    exactla::RowEchelon span(ring.betti(k));
    for (const auto& s : a.basis_in_degree(k)) {
      if (lat.rank_of(lat.join_of(s.bits())) != s.size()) continue;
      span.insert(ring.class_of(a.generator(s)).coords);
    }
    if (span.rank() != ring.betti(k)) return k;
  }
  return std::nullopt;
}

std::string to_string(Verdict v) { return v == Verdict::Elliptic ? "elliptic" : "hyperbolic"; }
std::string to_string(HyperbolicCase c) { return c == HyperbolicCase::A ? "A" : "B"; }

}  // namespace subarr::cohomology
