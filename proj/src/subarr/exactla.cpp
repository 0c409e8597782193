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

#include "subarr/exactla.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace subarr::exactla {

Rat make_rat(long numerator, long denominator) {
  if (denominator == 0) throw std::invalid_argument("zero denominator");
  Rat r(numerator, denominator);
  r.canonicalize();
  return r;
}

std::optional<Rat> parse_rat(std::string_view text) {
  std::size_t pos = 0;
  if (pos < text.size() && text[pos] == '-') ++pos;
  const std::size_t num_begin = pos;
  while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
  if (pos == num_begin) return std::nullopt;
  std::string numerator(text.substr(0, pos));
  std::string denominator = "1";
  if (pos < text.size()) {
    if (text[pos] != '/') return std::nullopt;
    ++pos;
    const std::size_t den_begin = pos;
    if (pos >= text.size() || text[pos] < '1' || text[pos] > '9') return std::nullopt;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos != text.size()) return std::nullopt;
    denominator = std::string(text.substr(den_begin));
  }
  Rat r(mpz_class(numerator, 10), mpz_class(denominator, 10));
  r.canonicalize();
  return r;
}

std::string to_string(const Rat& value) { return value.get_str(10); }

// ---------------------------------------------------------------------------
// Vec

Vec Vec::unit(std::size_t dim, std::size_t i) {
  Vec v(dim);
  v.push_back(i, Rat(1));
  return v;
}

Vec Vec::from_dense(const std::vector<Rat>& values) {
  Vec v(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) v.push_back(i, values[i]);
  return v;
}

Rat Vec::at(std::size_t i) const {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), i,
                             [](const Entry& e, std::size_t k) { return e.index < k; });
  if (it != entries_.end() && it->index == i) return it->value;
  return Rat(0);
}

std::vector<Rat> Vec::to_dense() const {
  std::vector<Rat> out(dim_);
  for (const auto& e : entries_) out[e.index] = e.value;
  return out;
}

void Vec::push_back(std::size_t i, Rat value) {
  if (i >= dim_) throw std::out_of_range("Vec index out of range");
  if (!entries_.empty() && entries_.back().index >= i)
    throw std::invalid_argument("Vec::push_back requires increasing indices");
  if (value == 0) return;
  entries_.push_back(Entry{i, std::move(value)});
}

void Vec::add_at(std::size_t i, const Rat& value) {
  if (i >= dim_) throw std::out_of_range("Vec index out of range");
  if (value == 0) return;
  auto it = std::lower_bound(entries_.begin(), entries_.end(), i,
                             [](const Entry& e, std::size_t k) { return e.index < k; });
  if (it != entries_.end() && it->index == i) {
    it->value += value;
    if (it->value == 0) entries_.erase(it);
  } else {
    entries_.insert(it, Entry{i, value});
  }
}

void Vec::add_scaled(const Vec& other, const Rat& factor) {
  if (other.dim_ != dim_) throw std::invalid_argument("Vec dimension mismatch");
  if (factor == 0 || other.entries_.empty()) return;
  std::vector<Entry> merged;
  merged.reserve(entries_.size() + other.entries_.size());
  auto a = entries_.begin();
  auto b = other.entries_.begin();
  while (a != entries_.end() || b != other.entries_.end()) {
    if (b == other.entries_.end() || (a != entries_.end() && a->index < b->index)) {
      merged.push_back(std::move(*a));
      ++a;
    } else if (a == entries_.end() || b->index < a->index) {
      merged.push_back(Entry{b->index, factor * b->value});
      ++b;
    } else {
      Rat sum = a->value + factor * b->value;
      if (sum != 0) merged.push_back(Entry{a->index, std::move(sum)});
      ++a;
      ++b;
    }
  }
  entries_ = std::move(merged);
}

Vec Vec::scaled(const Rat& factor) const {
  Vec out(dim_);
  if (factor == 0) return out;
  out.entries_.reserve(entries_.size());
  for (const auto& e : entries_) out.entries_.push_back(Entry{e.index, factor * e.value});
  return out;
}

void Vec::extend_dim(std::size_t dim) {
  if (dim < dim_) throw std::invalid_argument("Vec::extend_dim cannot shrink");
  dim_ = dim;
}

Vec Vec::operator+(const Vec& other) const {
  Vec out = *this;
  out.add_scaled(other, Rat(1));
  return out;
}

Vec Vec::operator-(const Vec& other) const {
  Vec out = *this;
  out.add_scaled(other, Rat(-1));
  return out;
}

bool Vec::operator==(const Vec& other) const {
  if (dim_ != other.dim_ || entries_.size() != other.entries_.size()) return false;
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (entries_[i].index != other.entries_[i].index) return false;
    if (entries_[i].value != other.entries_[i].value) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// QMat

QMat::QMat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows, Vec(cols)) {}

QMat QMat::identity(std::size_t n) {
  QMat m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.data_[i] = Vec::unit(n, i);
  return m;
}

QMat QMat::from_dense(const std::vector<std::vector<Rat>>& rows, std::size_t cols) {
  QMat m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw std::invalid_argument("ragged dense matrix");
    m.data_[r] = Vec::from_dense(rows[r]);
  }
  return m;
}

QMat QMat::from_rows(std::vector<Vec> rows, std::size_t cols) {
  QMat m(0, cols);
  for (auto& r : rows) {
    if (r.dim() != cols) throw std::invalid_argument("row dimension mismatch");
  }
  m.rows_ = rows.size();
  m.data_ = std::move(rows);
  return m;
}

QMat QMat::from_columns(const std::vector<Vec>& columns, std::size_t rows) {
  QMat m(rows, columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) {
    if (columns[c].dim() != rows) throw std::invalid_argument("column dimension mismatch");
    for (const auto& e : columns[c].entries()) m.data_[e.index].push_back(c, e.value);
  }
  return m;
}

Rat QMat::at(std::size_t r, std::size_t c) const {
  if (r >= rows_ || c >= cols_) throw std::out_of_range("QMat index out of range");
  return data_[r].at(c);
}

void QMat::set(std::size_t r, std::size_t c, const Rat& value) {
  if (r >= rows_ || c >= cols_) throw std::out_of_range("QMat index out of range");
  Rat delta = value - data_[r].at(c);
  data_[r].add_at(c, delta);
}

Vec QMat::apply(const Vec& v) const {
  if (v.dim() != cols_) throw std::invalid_argument("QMat::apply dimension mismatch");
  Vec out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    Rat acc = 0;
    const auto& row = data_[r].entries();
    const auto& ve = v.entries();
    auto a = row.begin();
    auto b = ve.begin();
    while (a != row.end() && b != ve.end()) {
      if (a->index < b->index) {
        ++a;
      } else if (b->index < a->index) {
        ++b;
      } else {
        acc += a->value * b->value;
        ++a;
        ++b;
      }
    }
    out.push_back(r, acc);
  }
  return out;
}

QMat QMat::transpose() const {
  QMat t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (const auto& e : data_[r].entries()) t.data_[e.index].push_back(r, e.value);
  return t;
}

bool QMat::operator==(const QMat& other) const {
  return rows_ == other.rows_ && cols_ == other.cols_ && data_ == other.data_;
}

// ---------------------------------------------------------------------------
// RowEchelon
//
// Rows are kept fully reduced: every stored row is zero in every other row's
// pivot column. Reducing a vector then needs a single pass over its entries.

RowEchelon::RowEchelon(std::size_t dim, std::size_t label_dim)
    : dim_(dim), label_dim_(label_dim), row_of_pivot_(dim, -1) {}

namespace {

// Sums (index, value) contributions into a sorted sparse vector.
Vec collapse(std::size_t dim, std::vector<Entry>& terms) {
  std::stable_sort(terms.begin(), terms.end(),
                   [](const Entry& a, const Entry& b) { return a.index < b.index; });
  Vec out(dim);
  std::size_t i = 0;
  while (i < terms.size()) {
    std::size_t j = i;
    Rat sum = 0;
    while (j < terms.size() && terms[j].index == terms[i].index) {
      sum += terms[j].value;
      ++j;
    }
    out.push_back(terms[i].index, std::move(sum));
    i = j;
  }
  return out;
}

}  // namespace

RowEchelon::Reduction RowEchelon::reduce(const Vec& v) const {
  if (v.dim() != dim_) throw std::invalid_argument("RowEchelon::reduce dimension mismatch");
  std::vector<Entry> terms;
  std::vector<Entry> label_terms;
  terms.reserve(v.nnz());
  for (const auto& e : v.entries()) {
    const long r = row_of_pivot_[e.index];
    if (r < 0) {
      terms.push_back(e);
      continue;
    }
    const Row& row = rows_[static_cast<std::size_t>(r)];
    const Rat minus = -e.value;
    for (const auto& re : row.vec.entries()) {
      if (re.index == e.index) continue;  // cancels exactly
      terms.push_back(Entry{re.index, minus * re.value});
    }
    for (const auto& le : row.label.entries()) label_terms.push_back(Entry{le.index, e.value * le.value});
  }
  Reduction out;
  out.remainder = collapse(dim_, terms);
  out.label = collapse(label_dim_, label_terms);
  return out;
}

bool RowEchelon::insert(const Vec& v, const Vec& label) {
  if (label.dim() != label_dim_) throw std::invalid_argument("RowEchelon::insert label dimension mismatch");
  Reduction red = reduce(v);
  if (red.remainder.is_zero()) return false;
  const std::size_t pivot = red.remainder.entries().front().index;
  const Rat inv = 1 / red.remainder.entries().front().value;
  Row fresh{red.remainder.scaled(inv), (label - red.label).scaled(inv)};
  for (auto& row : rows_) {
    const Rat c = row.vec.at(pivot);
    if (c == 0) continue;
    row.vec.add_scaled(fresh.vec, -c);
    row.label.add_scaled(fresh.label, -c);
  }
  row_of_pivot_[pivot] = static_cast<long>(rows_.size());
  rows_.push_back(std::move(fresh));
  return true;
}

void RowEchelon::grow_labels(std::size_t label_dim) {
  if (label_dim < label_dim_) throw std::invalid_argument("RowEchelon::grow_labels cannot shrink");
  label_dim_ = label_dim;
  for (auto& row : rows_) row.label.extend_dim(label_dim);
}

RrefResult RowEchelon::to_rref() const {
  RrefResult out;
  std::vector<Vec> rows;
  for (std::size_t c = 0; c < dim_; ++c) {
    const long r = row_of_pivot_[c];
    if (r < 0) continue;
    out.pivots.push_back(c);
    rows.push_back(rows_[static_cast<std::size_t>(r)].vec);
  }
  out.rank = rows.size();
  out.reduced = QMat::from_rows(std::move(rows), dim_);
  return out;
}

RrefResult rref(const QMat& m) {
  RowEchelon echelon(m.cols());
  for (const auto& row : m.row_vectors()) echelon.insert(row);
  return echelon.to_rref();
}

std::size_t rank(const QMat& m) {
  RowEchelon echelon(m.cols());
  for (const auto& row : m.row_vectors()) echelon.insert(row);
  return echelon.rank();
}

std::vector<Vec> kernel_basis(const QMat& m) {
  const RrefResult r = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : r.pivots) is_pivot[p] = true;
  std::vector<Vec> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    std::vector<Entry> terms;
    terms.push_back(Entry{f, Rat(1)});
    for (std::size_t i = 0; i < r.rank; ++i) {
      const Rat c = r.reduced.row(i).at(f);
      if (c != 0) terms.push_back(Entry{r.pivots[i], -c});
    }
    basis.push_back(collapse(m.cols(), terms));
  }
  return basis;
}

// ---------------------------------------------------------------------------
// Quotients

Vec CosetProjection::operator()(const Vec& v) const {
  RowEchelon::Reduction red = echelon_.reduce(v);
  if (!red.remainder.is_zero()) throw std::invalid_argument("vector is not in the cycle span");
  return std::move(red.label);
}

Quotient coset_representatives(std::size_t space_dim, const std::vector<Vec>& subspace,
                               const std::vector<Vec>& cycles) {
  RowEchelon cycle_span(space_dim);
  for (const auto& c : cycles) cycle_span.insert(c);
  for (const auto& s : subspace) {
    if (!cycle_span.contains(s)) throw std::invalid_argument("subspace is not contained in the cycle span");
  }

  RowEchelon echelon(space_dim, 0);
  for (const auto& s : subspace) echelon.insert(s);
  Quotient q;
  for (std::size_t i = 0; i < cycles.size(); ++i) {
    if (echelon.contains(cycles[i])) continue;
    const std::size_t idx = q.basis.size();
    echelon.grow_labels(idx + 1);
    echelon.insert(cycles[i], Vec::unit(idx + 1, idx));
    q.basis.push_back(cycles[i]);
    q.selected.push_back(i);
  }
  q.projection = CosetProjection(std::move(echelon));
  return q;
}

}  // namespace subarr::exactla
