#pragma once

// Exact dense linear algebra over the rationals: reduced echelon forms,
// nullspaces, and subspace comparison. A subspace of Q^n is represented by a
// matrix whose rows span it; its canonical form is the reduced row echelon
// form with zero rows removed, so two spans are equal iff their canonical
// forms are identical.

#include <cstddef>
#include <map>
#include <span>
#include <vector>

#include "incgrade/rational.hpp"

namespace incgrade {

class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols);

  static RationalMatrix identity(std::size_t n);
  static RationalMatrix from_rows(std::size_t cols, const std::vector<std::vector<Rational>>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<const Rational> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
  std::span<Rational> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }

  void append_row(std::span<const Rational> values);

  /// Stacks the rows of `other` below this matrix.
  RationalMatrix stacked(const RationalMatrix& other) const;

  friend bool operator==(const RationalMatrix& a, const RationalMatrix& b);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

/// Unique reduced row echelon form with zero rows trimmed.
RationalMatrix rref(const RationalMatrix& m);

std::size_t rank(const RationalMatrix& m);

/// Canonical (reduced echelon) basis of {v | M v = 0}.
RationalMatrix nullspace(const RationalMatrix& m);

/// M v = 0 for every row v of `vectors`.
bool annihilates(const RationalMatrix& m, const RationalMatrix& vectors);

bool subspace_equal(const RationalMatrix& a, const RationalMatrix& b);

/// Canonical basis of span(a) ∩ span(b), computed as the common kernel of the
/// stacked orthogonal-complement generators of both spans.
RationalMatrix subspace_intersect(const RationalMatrix& a, const RationalMatrix& b);

/// span(inner) ⊆ span(outer).
bool subspace_contains(const RationalMatrix& outer, const RationalMatrix& inner);

bool span_contains(const RationalMatrix& space, std::span<const Rational> v);

/// Incremental Gauss-Jordan elimination. Rows are fed one at a time; the
/// reducer keeps the pivot rows fully reduced, so basis() is always the
/// canonical echelon form of everything fed so far.
class RowReducer {
 public:
  explicit RowReducer(std::size_t cols) : cols_(cols) {}

  /// Returns true if the row was independent of the rows seen so far.
  bool add_row(std::span<const Rational> values);

  std::size_t cols() const { return cols_; }
  std::size_t rank() const { return pivots_.size(); }
  bool full() const { return pivots_.size() == cols_; }

  RationalMatrix basis() const;

 private:
  std::size_t cols_;
  std::map<std::size_t, std::vector<Rational>> pivots_;  // pivot column -> row
};

}  // namespace incgrade
