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

// Exact rational linear algebra over sparse vectors and matrices.

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace subarr::exactla {

// mpq_class keeps values canonical (reduced, positive denominator) after
// every arithmetic operation; make_rat/parse_rat canonicalize on entry.
using Rat = mpq_class;

Rat make_rat(long numerator, long denominator = 1);

// Accepts exactly -?[0-9]+(/[1-9][0-9]*)?
std::optional<Rat> parse_rat(std::string_view text);

// Reduced "p/q", or "p" when the denominator is 1.
std::string to_string(const Rat& value);

struct Entry {
  std::size_t index;
  Rat value;
};

// Sparse vector of fixed dimension. Entries are sorted by index and never zero.
class Vec {
 public:
  Vec() = default;
  explicit Vec(std::size_t dim) : dim_(dim) {}

  static Vec unit(std::size_t dim, std::size_t i);
  static Vec from_dense(const std::vector<Rat>& values);

  std::size_t dim() const { return dim_; }
  bool is_zero() const { return entries_.empty(); }
  std::size_t nnz() const { return entries_.size(); }
  const std::vector<Entry>& entries() const { return entries_; }

  Rat at(std::size_t i) const;
  std::vector<Rat> to_dense() const;

  // Appends (i, value); i must exceed every stored index. Zero is skipped.
  void push_back(std::size_t i, Rat value);
  // Adds value at index i, wherever it falls.
  void add_at(std::size_t i, const Rat& value);
  // this += factor * other
  void add_scaled(const Vec& other, const Rat& factor);
  Vec scaled(const Rat& factor) const;
  // Enlarges the ambient dimension; stored entries are unchanged.
  void extend_dim(std::size_t dim);

  Vec operator+(const Vec& other) const;
  Vec operator-(const Vec& other) const;
  bool operator==(const Vec& other) const;

 private:
  std::size_t dim_ = 0;
  std::vector<Entry> entries_;
};

// Sparse matrix stored as rows; no explicit zeros.
class QMat {
 public:
  QMat() = default;
  QMat(std::size_t rows, std::size_t cols);

  static QMat identity(std::size_t n);
  static QMat from_dense(const std::vector<std::vector<Rat>>& rows, std::size_t cols);
  static QMat from_rows(std::vector<Vec> rows, std::size_t cols);
  // Each column given as a vector of dimension `rows`.
  static QMat from_columns(const std::vector<Vec>& columns, std::size_t rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const Vec& row(std::size_t r) const { return data_[r]; }
  const std::vector<Vec>& row_vectors() const { return data_; }
  Rat at(std::size_t r, std::size_t c) const;
  void set(std::size_t r, std::size_t c, const Rat& value);

  Vec apply(const Vec& v) const;
  QMat transpose() const;
  bool operator==(const QMat& other) const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Vec> data_;
};

struct RrefResult {
  QMat reduced;
  std::vector<std::size_t> pivots;
  std::size_t rank = 0;
};

// Row space of a set of vectors kept in echelon form, one row per pivot
// column. Each stored row optionally carries a label vector that transforms
// linearly alongside it.
class RowEchelon {
 public:
  explicit RowEchelon(std::size_t dim, std::size_t label_dim = 0);

  std::size_t dim() const { return dim_; }
  std::size_t rank() const { return rows_.size(); }

  struct Reduction {
    Vec remainder;
    Vec label;  // sum of multiplier * row label over the rows subtracted
  };
  Reduction reduce(const Vec& v) const;
  bool contains(const Vec& v) const { return reduce(v).remainder.is_zero(); }

  // Inserts v (with label) if independent of the stored rows; returns whether
  // it was. The stored row is the remainder scaled to a unit leading entry,
  // and its label is transformed accordingly.
  bool insert(const Vec& v, const Vec& label);
  bool insert(const Vec& v) { return insert(v, Vec(label_dim_)); }

  void grow_labels(std::size_t label_dim);
  std::size_t label_dim() const { return label_dim_; }

  // Fully reduced row-echelon rows sorted by pivot column.
  RrefResult to_rref() const;

 private:
  struct Row {
    Vec vec;
    Vec label;
  };
  std::size_t dim_;
  std::size_t label_dim_;
  std::vector<Row> rows_;
  std::vector<long> row_of_pivot_;  // -1 when the column is not a pivot
};

RrefResult rref(const QMat& m);
std::size_t rank(const QMat& m);

// Basis of {v : m v = 0}: one vector per free column of rref(m), in free
// column order, with a 1 in its free column.
std::vector<Vec> kernel_basis(const QMat& m);

// Linear map from cycles to coordinates in a quotient basis; vanishes exactly
// on the subspace.
class CosetProjection {
 public:
  CosetProjection() : echelon_(0) {}
  explicit CosetProjection(RowEchelon echelon) : echelon_(std::move(echelon)) {}
  // Throws std::invalid_argument if v is not in the cycle span.
  Vec operator()(const Vec& v) const;
  std::size_t quotient_dim() const { return echelon_.label_dim(); }

 private:
  RowEchelon echelon_;
};

struct Quotient {
  std::vector<Vec> basis;  // selected cycle-basis vectors
  std::vector<std::size_t> selected;  // their positions in the cycle list
  CosetProjection projection;
};

// Chooses cycle vectors completing the subspace to the cycle span, scanning
// the cycles in order. The subspace vectors need only span the subspace.
// Throws std::invalid_argument when the subspace is not inside the cycle span.
Quotient coset_representatives(std::size_t space_dim, const std::vector<Vec>& subspace,
                               const std::vector<Vec>& cycles);

}  // namespace subarr::exactla
