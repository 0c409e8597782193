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

#include "subarr/sullivan.hpp"

#include <algorithm>
#include <stdexcept>

#include "subarr/errors.hpp"

namespace subarr::sullivan {

namespace {

bool odd(int k) { return k % 2 != 0; }

Vec unit_vec(std::size_t dim, std::size_t i) { return Vec::unit(dim, i); }

void add_term(Polynomial& p, const Monomial& m, const Rat& c) {
  if (c == 0) return;
  auto it = p.find(m);
  if (it == p.end()) {
    p.emplace(m, c);
    return;
  }
  it->second += c;
  if (it->second == 0) p.erase(it);
}

// Derivative and evaluation with memoization, valid while the generator list
// only grows.
class Calculus {
 public:
  explicit Calculus(const MinimalModel& model) : model_(model) {}

  const Polynomial& d(const Monomial& m) {
    auto it = d_cache_.find(m);
    if (it != d_cache_.end()) return it->second;
    Polynomial out;
    if (m.size() == 1) {
      out = model_.generators()[m[0]].differential;
    } else if (m.size() > 1) {
      const Monomial first{m[0]};
      const Monomial rest(m.begin() + 1, m.end());
      const Polynomial& d_first = model_.generators()[m[0]].differential;
      const Polynomial d_rest = d(rest);
      out = model_.multiply(d_first, Polynomial{{rest, Rat(1)}});
      const Rat sign(odd(model_.generators()[m[0]].degree) ? -1 : 1);
      for (const auto& [mono, c] : model_.multiply(Polynomial{{first, Rat(1)}}, d_rest)) add_term(out, mono, c * sign);
    }
    return d_cache_.emplace(m, std::move(out)).first->second;
  }

  Polynomial d(const Polynomial& p) {
    Polynomial out;
    for (const auto& [m, c] : p)
      for (const auto& [mono, c2] : d(m)) add_term(out, mono, c * c2);
    return out;
  }

  const GradedElement& eval(const Monomial& m) {
    auto it = eval_cache_.find(m);
    if (it != eval_cache_.end()) return it->second;
    return eval_cache_.emplace(m, model_.evaluate(m)).first->second;
  }

 private:
  const MinimalModel& model_;
  std::map<Monomial, Polynomial> d_cache_;
  std::map<Monomial, GradedElement> eval_cache_;
};

struct Index {
  std::map<Monomial, std::size_t> pos;
  std::size_t of(const Monomial& m) {
    auto it = pos.find(m);
    if (it != pos.end()) return it->second;
    const std::size_t i = pos.size();
    pos.emplace(m, i);
    return i;
  }
};

Vec to_vec(const Polynomial& p, const std::map<Monomial, std::size_t>& pos, std::size_t dim) {
  Vec v(dim);
  for (const auto& [m, c] : p) v.add_at(pos.at(m), c);
  return v;
}

// Everything needed about one degree k of the current model.
struct DegreeData {
  std::vector<Monomial> basis;
  std::vector<Vec> cycles;  // in basis coordinates
  std::size_t boundary_rank = 0;
  std::vector<Vec> boundaries;  // images of d from degree k-1
  std::size_t induced_rank = 0;
  std::vector<Vec> cycle_images;
};

std::vector<Polynomial> differentials(Calculus& calc, const std::vector<Monomial>& basis) {
  std::vector<Polynomial> out;
  out.reserve(basis.size());
  for (const auto& m : basis) out.push_back(calc.d(m));
  return out;
}

GradedElement eval_vec(Calculus& calc, const GradedAlgebra& h, const std::vector<Monomial>& basis, const Vec& v,
                       int degree) {
  GradedElement out = h.zero(degree);
  for (const auto& e : v.entries()) {
    const GradedElement& img = calc.eval(basis[e.index]);
    out.coords.add_scaled(img.coords, e.value);
  }
  return out;
}

// Boundaries into degree k, as vectors over `target`.
std::vector<Vec> boundaries_into(Calculus& calc, const MinimalModel& model, int k,
                                 const std::map<Monomial, std::size_t>& target_pos) {
  std::vector<Vec> out;
  for (const auto& m : model.monomials_of_degree(k - 1)) {
    const Polynomial& dm = calc.d(m);
    if (!dm.empty()) out.push_back(to_vec(dm, target_pos, target_pos.size()));
  }
  return out;
}

std::vector<Vec> cycles_of(Calculus& calc, const std::vector<Monomial>& basis) {
  const auto ds = differentials(calc, basis);
  Index next;
  for (const auto& p : ds)
    for (const auto& [m, c] : p) next.of(m);
  std::vector<Vec> columns;
  columns.reserve(ds.size());
  for (const auto& p : ds) columns.push_back(to_vec(p, next.pos, next.pos.size()));
  return exactla::kernel_basis(exactla::QMat::from_columns(columns, next.pos.size()));
}

std::map<Monomial, std::size_t> positions(const std::vector<Monomial>& basis) {
  std::map<Monomial, std::size_t> pos;
  for (std::size_t i = 0; i < basis.size(); ++i) pos.emplace(basis[i], i);
  return pos;
}

mpz_class binomial(const mpz_class& n, unsigned long k) {
  mpz_class out;
  if (n < 0) return 0;
  mpz_bin_ui(out.get_mpz_t(), n.get_mpz_t(), k);
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------

GradedAlgebra::GradedAlgebra(std::vector<std::size_t> dims) : dims_(std::move(dims)) {
  if (dims_.empty()) dims_.push_back(1);
}

GradedAlgebra GradedAlgebra::from_cohomology(const cohomology::CohomologyRing& ring) {
  for (int k = ring.min_degree(); k < 0; ++k)
    if (ring.betti(k) != 0) throw InvariantError("cohomology is nonzero in negative degree " + std::to_string(k));
  if (ring.betti(0) != 1) throw InvariantError("H^0 has dimension " + std::to_string(ring.betti(0)));
  int top = 0;
  for (const auto& [k, b] : ring.betti_table()) top = std::max(top, k);
  std::vector<std::size_t> dims;
  for (int k = 0; k <= top; ++k) dims.push_back(ring.betti(k));
  GradedAlgebra h(dims);
  for (int da = 1; da <= top; ++da)
    for (int db = da; da + db <= top; ++db)
      for (std::size_t i = 0; i < h.dim(da); ++i)
        for (std::size_t j = 0; j < h.dim(db); ++j) h.set_product(da, i, db, j, ring.basis_product(da, i, db, j));
  return h;
}

GradedAlgebra GradedAlgebra::sphere(int k) {
  if (k < 1) throw std::invalid_argument("sphere dimension must be positive");
  std::vector<std::size_t> dims(static_cast<std::size_t>(k) + 1, 0);
  dims[0] = 1;
  dims[static_cast<std::size_t>(k)] = 1;
  return GradedAlgebra(dims);
}

GradedAlgebra GradedAlgebra::wedge_of_spheres(const std::vector<int>& degrees) {
  int top = 0;
  for (int k : degrees) {
    if (k < 1) throw std::invalid_argument("sphere dimension must be positive");
    top = std::max(top, k);
  }
  std::vector<std::size_t> dims(static_cast<std::size_t>(top) + 1, 0);
  dims[0] = 1;
  for (int k : degrees) ++dims[static_cast<std::size_t>(k)];
  return GradedAlgebra(dims);
}

std::size_t GradedAlgebra::dim(int k) const {
  if (k < 0 || k > top_degree()) return 0;
  return dims_[static_cast<std::size_t>(k)];
}

std::size_t GradedAlgebra::total_dim() const {
  std::size_t total = 0;
  for (auto d : dims_) total += d;
  return total;
}

void GradedAlgebra::set_product(int da, std::size_t i, int db, std::size_t j, const Vec& value) {
  if (i >= dim(da) || j >= dim(db)) throw std::invalid_argument("basis index out of range");
  if (value.dim() != dim(da + db)) throw std::invalid_argument("product value has the wrong dimension");
  if (da == 0 || db == 0) throw std::invalid_argument("products with the unit are fixed");
  table_[std::make_tuple(da, i, db, j)] = value;
  table_[std::make_tuple(db, j, da, i)] = value.scaled(Rat(odd(da) && odd(db) ? -1 : 1));
}

Vec GradedAlgebra::basis_product(int da, std::size_t i, int db, std::size_t j) const {
  if (da == 0) return unit_vec(dim(db), j);
  if (db == 0) return unit_vec(dim(da), i);
  auto it = table_.find(std::make_tuple(da, i, db, j));
  return it == table_.end() ? Vec(dim(da + db)) : it->second;
}

GradedElement GradedAlgebra::multiply(const GradedElement& a, const GradedElement& b) const {
  GradedElement out = zero(a.degree + b.degree);
  if (out.coords.dim() == 0) return out;
  for (const auto& ea : a.coords.entries())
    for (const auto& eb : b.coords.entries())
      out.coords.add_scaled(basis_product(a.degree, ea.index, b.degree, eb.index), ea.value * eb.value);
  return out;
}

GradedElement GradedAlgebra::unit() const { return GradedElement{0, unit_vec(1, 0)}; }
GradedElement GradedAlgebra::zero(int degree) const { return GradedElement{degree, Vec(dim(degree))}; }
GradedElement GradedAlgebra::basis(int degree, std::size_t i) const {
  return GradedElement{degree, unit_vec(dim(degree), i)};
}

void GradedAlgebra::validate() const {
  if (dim(0) != 1) throw InputError("algebra is not connected: degree 0 has dimension " + std::to_string(dim(0)));
  if (dim(1) != 0) throw InputError("algebra is not simply connected: degree 1 has dimension " + std::to_string(dim(1)));
  for (int da = 1; da <= top_degree(); ++da) {
    for (std::size_t i = 0; i < dim(da); ++i) {
      const GradedElement x = basis(da, i);
      for (int db = 1; da + db <= top_degree(); ++db) {
        for (std::size_t j = 0; j < dim(db); ++j) {
          const GradedElement y = basis(db, j);
          GradedElement yx = multiply(y, x);
          if (odd(da) && odd(db)) yx.coords = yx.coords.scaled(Rat(-1));
          if (!(multiply(x, y) == yx))
            throw InputError("product is not graded commutative in degrees " + std::to_string(da) + ", " +
                             std::to_string(db));
          for (int dc = 1; da + db + dc <= top_degree(); ++dc) {
            for (std::size_t k = 0; k < dim(dc); ++k) {
              const GradedElement z = basis(dc, k);
              if (!(multiply(multiply(x, y), z) == multiply(x, multiply(y, z))))
                throw InputError("product is not associative");
            }
          }
        }
      }
    }
  }
}

// ---------------------------------------------------------------------------

std::map<int, std::size_t> MinimalModel::ranks() const {
  std::map<int, std::size_t> out;
  for (const auto& g : generators_)
    if (g.degree <= max_degree_) ++out[g.degree];
  return out;
}

int MinimalModel::degree(const Monomial& m) const {
  int total = 0;
  for (auto i : m) total += generators_[i].degree;
  return total;
}

std::pair<int, Monomial> MinimalModel::multiply_monomials(const Monomial& a, const Monomial& b) const {
  int sign = 1;
  for (auto x : a) {
    for (auto y : b) {
      const bool ox = odd(generators_[x].degree);
      const bool oy = odd(generators_[y].degree);
      if (x == y && ox) return {0, {}};
      if (y < x && ox && oy) sign = -sign;
    }
  }
  Monomial out;
  out.reserve(a.size() + b.size());
  std::merge(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return {sign, out};
}

Polynomial MinimalModel::multiply(const Polynomial& a, const Polynomial& b) const {
  Polynomial out;
  for (const auto& [ma, ca] : a) {
    for (const auto& [mb, cb] : b) {
      auto [sign, m] = multiply_monomials(ma, mb);
      if (sign != 0) add_term(out, m, ca * cb * sign);
    }
  }
  return out;
}

Polynomial MinimalModel::differential(const Monomial& m) const {
  Calculus calc(*this);
  return calc.d(m);
}

Polynomial MinimalModel::differential(const Polynomial& p) const {
  Calculus calc(*this);
  return calc.d(p);
}

GradedElement MinimalModel::evaluate(const Monomial& m) const {
  GradedElement acc = target_.unit();
  for (auto i : m) {
    acc = target_.multiply(acc, generators_[i].image);
    if (acc.is_zero()) return target_.zero(degree(m));
  }
  return acc;
}

void MinimalModel::collect(int k, std::size_t first, Monomial& prefix, std::vector<Monomial>& out) const {
  if (k == 0) {
    out.push_back(prefix);
    return;
  }
  for (std::size_t g = first; g < generators_.size(); ++g) {
    const int dg = generators_[g].degree;
    if (dg > k) break;
    const int max_copies = odd(dg) ? 1 : k / dg;
    for (int t = 1; t <= max_copies; ++t) {
      prefix.push_back(static_cast<std::uint16_t>(g));
      collect(k - t * dg, g + 1, prefix, out);
    }
    for (int t = 1; t <= max_copies; ++t) prefix.pop_back();
  }
}

std::vector<Monomial> MinimalModel::monomials_of_degree(int k) const {
  std::vector<Monomial> out;
  if (k < 0) return out;
  Monomial prefix;
  collect(k, 0, prefix, out);
  return out;
}

std::vector<DegreeCheck> MinimalModel::verify() const {
  for (const auto& g : generators_) {
    if (g.degree < 2) throw InvariantError("generator " + g.name + " has degree below 2");
    for (const auto& [m, c] : g.differential)
      if (m.size() < 2) throw InvariantError("differential of " + g.name + " has a linear term");
  }
  Calculus calc(*this);
  for (const auto& g : generators_) {
    if (!calc.d(g.differential).empty()) throw InvariantError("d^2 != 0 on " + g.name);
    GradedElement img = target_.zero(g.degree + 1);
    for (const auto& [m, c] : g.differential) img.coords.add_scaled(calc.eval(m).coords, c);
    if (!img.is_zero()) throw InvariantError("comparison map does not commute with d on " + g.name);
  }

  std::vector<DegreeCheck> table;
  for (int k = 0; k <= max_degree_ + 1; ++k) {
    DegreeCheck row;
    row.degree = k;
    const auto basis = monomials_of_degree(k);
    const auto pos = positions(basis);
    const auto cycles = cycles_of(calc, basis);
    exactla::RowEchelon bspan(basis.size());
    for (const auto& b : boundaries_into(calc, *this, k, pos)) bspan.insert(b);
    row.model_cohomology = cycles.size() - bspan.rank();
    row.target_dim = target_.dim(k);
    exactla::RowEchelon ispan(target_.dim(k));
    for (const auto& z : cycles) ispan.insert(eval_vec(calc, target_, basis, z, k).coords);
    row.induced_rank = ispan.rank();
    const bool ok = k <= max_degree_
                        ? (row.model_cohomology == row.target_dim && row.induced_rank == row.target_dim)
                        : row.model_cohomology == row.induced_rank;
    if (!ok)
      throw InvariantError("comparison map fails in degree " + std::to_string(k) + ": model " +
                           std::to_string(row.model_cohomology) + ", target " + std::to_string(row.target_dim) +
                           ", induced rank " + std::to_string(row.induced_rank));
    table.push_back(row);
  }
  return table;
}

MinimalModel minimal_model(const GradedAlgebra& h, int max_degree, std::size_t generator_cap) {
  if (max_degree < 2) throw InputError("degree bound must be at least 2");
  h.validate();
  MinimalModel model;
  model.target_ = h;
  model.max_degree_ = max_degree;
  Calculus calc(model);

  auto guard = [&] {
    if (model.generators_.size() > generator_cap)
      throw ResourceLimitError("minimal model needs more than " + std::to_string(generator_cap) +
                               " generators below degree " + std::to_string(max_degree + 1) +
                               "; lower --max-degree");
  };

  for (int k = 2; k <= max_degree; ++k) {
    // Closed generators onto the cokernel in degree k.
    {
      const auto basis = model.monomials_of_degree(k);
      const auto cycles = cycles_of(calc, basis);
      exactla::RowEchelon span(h.dim(k));
      for (const auto& z : cycles) span.insert(eval_vec(calc, h, basis, z, k).coords);
      std::size_t count = 0;
      for (std::size_t i = 0; i < h.dim(k); ++i) {
        const Vec e = unit_vec(h.dim(k), i);
        if (!span.insert(e)) continue;
        ModelGenerator g;
        g.degree = k;
        g.image = h.basis(k, i);
        g.name = "v" + std::to_string(k) + "_" + std::to_string(++count);
        model.generators_.push_back(std::move(g));
        guard();
      }
    }
    // Generators killing the kernel in degree k + 1.
    {
      const auto basis = model.monomials_of_degree(k + 1);
      const auto pos = positions(basis);
      const auto ds = differentials(calc, basis);
      Index next;
      for (const auto& p : ds)
        for (const auto& [m, c] : p) next.of(m);
      const std::size_t nd = next.pos.size();
      const std::size_t nh = h.dim(k + 1);
      std::vector<Vec> columns;
      columns.reserve(basis.size());
      for (std::size_t c = 0; c < basis.size(); ++c) {
        Vec col = to_vec(ds[c], next.pos, nd + nh);
        const GradedElement& img = calc.eval(basis[c]);
        for (const auto& e : img.coords.entries()) col.add_at(nd + e.index, e.value);
        columns.push_back(std::move(col));
      }
      const auto killable = exactla::kernel_basis(exactla::QMat::from_columns(columns, nd + nh));
      const auto exact = boundaries_into(calc, model, k + 1, pos);
      exactla::Quotient q;
      try {
        q = exactla::coset_representatives(basis.size(), exact, killable);
      } catch (const std::invalid_argument&) {
        throw InvariantError("boundaries in degree " + std::to_string(k + 1) + " are not killable cycles");
      }
      std::size_t count = 0;
      for (const auto& g : model.generators_)
        if (g.degree == k) ++count;
      for (const auto& z : q.basis) {
        ModelGenerator g;
        g.degree = k;
        g.image = h.zero(k);
        for (const auto& e : z.entries()) g.differential.emplace(basis[e.index], e.value);
        g.name = "v" + std::to_string(k) + "_" + std::to_string(++count);
        model.generators_.push_back(std::move(g));
        guard();
      }
    }
  }
  return model;
}

std::map<int, std::size_t> homotopy_ranks_of_arrangement(const cohomology::CohomologyRing& ring, int max_degree,
                                                         std::size_t generator_cap) {
  const MinimalModel model = minimal_model(GradedAlgebra::from_cohomology(ring), max_degree, generator_cap);
  model.verify();
  return model.ranks();
}

// ---------------------------------------------------------------------------

std::vector<mpz_class> tensor_series(const std::vector<int>& generator_degrees, int max_degree) {
  std::vector<mpz_class> t(static_cast<std::size_t>(std::max(max_degree, 0)) + 1, 0);
  t[0] = 1;
  for (int k = 1; k <= max_degree; ++k)
    for (int g : generator_degrees)
      if (g <= k) t[static_cast<std::size_t>(k)] += t[static_cast<std::size_t>(k - g)];
  return t;
}

namespace {

// p *= factor for degree k with exponent c, truncated.
void multiply_factor(std::vector<mpz_class>& p, int k, const mpz_class& c) {
  if (c == 0) return;
  const int n = static_cast<int>(p.size()) - 1;
  std::vector<mpz_class> f(p.size(), 0);
  for (int j = 0; j * k <= n; ++j) {
    const unsigned long uj = static_cast<unsigned long>(j);
    f[static_cast<std::size_t>(j * k)] = odd(k) ? binomial(c, uj) : binomial(c + j - 1, uj);
  }
  std::vector<mpz_class> out(p.size(), 0);
  for (int a = 0; a <= n; ++a) {
    if (p[static_cast<std::size_t>(a)] == 0) continue;
    for (int b = 0; a + b <= n; b += k) out[static_cast<std::size_t>(a + b)] += p[static_cast<std::size_t>(a)] * f[static_cast<std::size_t>(b)];
  }
  p = std::move(out);
}

}  // namespace

std::vector<mpz_class> pbw_series(const std::map<int, mpz_class>& ranks, int max_degree) {
  std::vector<mpz_class> p(static_cast<std::size_t>(std::max(max_degree, 0)) + 1, 0);
  p[0] = 1;
  for (const auto& [k, c] : ranks)
    if (k >= 1 && k <= max_degree) multiply_factor(p, k, c);
  return p;
}

std::map<int, mpz_class> free_lie_ranks(const std::vector<int>& generator_degrees, int max_degree) {
  for (int g : generator_degrees)
    if (g < 1) throw std::invalid_argument("free Lie generator degrees must be at least 1");
  if (max_degree < 0) throw std::invalid_argument("degree bound must be nonnegative");
  const auto t = tensor_series(generator_degrees, max_degree);
  std::vector<mpz_class> p(t.size(), 0);
  p[0] = 1;
  std::map<int, mpz_class> out;
  for (int k = 1; k <= max_degree; ++k) {
    const mpz_class c = t[static_cast<std::size_t>(k)] - p[static_cast<std::size_t>(k)];
    if (c < 0) throw InvariantError("negative free Lie rank in degree " + std::to_string(k));
    if (c == 0) continue;
    out.emplace(k, c);
    multiply_factor(p, k, c);
  }
  return out;
}

// ---------------------------------------------------------------------------

GrowthCertificate certify_hyperbolic_growth(const GrowthRequest& request, const std::map<int, std::size_t>& ranks,
                                            int max_degree) {
  if (request.verdict != cohomology::Verdict::Hyperbolic || !request.hyperbolic_case)
    throw std::invalid_argument("growth certificates apply to hyperbolic inputs only");
  auto rank = [&](int k) -> std::size_t {
    auto it = ranks.find(k);
    return it == ranks.end() ? 0 : it->second;
  };
  GrowthCertificate out;
  out.max_degree = max_degree;
  if (*request.hyperbolic_case == cohomology::HyperbolicCase::A) {
    if (!request.loop_degrees) throw std::invalid_argument("case A certificate needs loop degrees");
    out.kind = GrowthCertificate::Kind::FreeLieLowerBound;
    out.loop_degrees = {request.loop_degrees->first, request.loop_degrees->second};
    const auto lie = free_lie_ranks(out.loop_degrees, max_degree - 1);
    for (int k = 1; k <= max_degree - 1; ++k) {
      CertificateRow row;
      row.degree = k;
      auto it = lie.find(k);
      row.lower_bound = it == lie.end() ? mpz_class(0) : it->second;
      row.actual = rank(k + 1);
      if (mpz_class(static_cast<unsigned long>(row.actual)) < row.lower_bound)
        throw InvariantError("rank pi_" + std::to_string(k + 1) + " = " + std::to_string(row.actual) +
                             " is below the free Lie bound " + row.lower_bound.get_str());
      out.rows.push_back(std::move(row));
    }
  } else {
    out.kind = GrowthCertificate::Kind::GrowthWindow;
    out.window_split = max_degree / 2;
    for (int k = 2; k <= out.window_split; ++k) out.low_sum += rank(k);
    for (int k = out.window_split; k <= max_degree; ++k) out.high_sum += rank(k);
    out.passed = out.high_sum > out.low_sum;
    return out;
  }
  out.passed = true;
  return out;
}

std::string to_string(GrowthCertificate::Kind k) {
  return k == GrowthCertificate::Kind::FreeLieLowerBound ? "free_lie_lower_bound" : "growth_window";
}

}  // namespace subarr::sullivan
