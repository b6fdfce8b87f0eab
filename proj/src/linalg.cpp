#include "incgrade/linalg.hpp"

#include <algorithm>
#include <optional>
#include <string>

#include "incgrade/errors.hpp"

namespace incgrade {

RationalMatrix::RationalMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

RationalMatrix RationalMatrix::identity(std::size_t n) {
  RationalMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RationalMatrix RationalMatrix::from_rows(std::size_t cols, const std::vector<std::vector<Rational>>& rows) {
  RationalMatrix m(0, cols);
  for (const auto& r : rows) m.append_row(r);
  return m;
}

void RationalMatrix::append_row(std::span<const Rational> values) {
  if (values.size() != cols_)
    throw DimensionMismatchError("row of length " + std::to_string(values.size()) +
                                 " appended to matrix with " + std::to_string(cols_) + " columns");
  data_.insert(data_.end(), values.begin(), values.end());
  ++rows_;
}

RationalMatrix RationalMatrix::stacked(const RationalMatrix& other) const {
  if (other.cols_ != cols_) throw DimensionMismatchError("cannot stack matrices with different column counts");
  RationalMatrix m = *this;
  m.data_.insert(m.data_.end(), other.data_.begin(), other.data_.end());
  m.rows_ += other.rows_;
  return m;
}

bool operator==(const RationalMatrix& a, const RationalMatrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

namespace {

// Magnitude of the numerator, used to prefer "small" pivots.
bool smaller_pivot(const Rational& a, const Rational& b) {
  return mpz_cmpabs(a.get_num_mpz_t(), b.get_num_mpz_t()) < 0;
}

}  // namespace

RationalMatrix rref(const RationalMatrix& input) {
  RationalMatrix m = input;
  const std::size_t rows = m.rows(), cols = m.cols();
  std::size_t lead = 0;
  for (std::size_t c = 0; c < cols && lead < rows; ++c) {
    std::optional<std::size_t> best;
    for (std::size_t r = lead; r < rows; ++r) {
      if (sgn(m(r, c)) == 0) continue;
      if (!best || smaller_pivot(m(r, c), m(*best, c))) best = r;
    }
    if (!best) continue;
    if (*best != lead)
      for (std::size_t j = 0; j < cols; ++j) std::swap(m(*best, j), m(lead, j));
    const Rational inv = 1 / m(lead, c);
    for (std::size_t j = c; j < cols; ++j) m(lead, j) *= inv;
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == lead || sgn(m(r, c)) == 0) continue;
      const Rational factor = m(r, c);
      for (std::size_t j = c; j < cols; ++j) m(r, j) -= factor * m(lead, j);
    }
    ++lead;
  }
  RationalMatrix out(0, cols);
  for (std::size_t r = 0; r < lead; ++r) out.append_row(m.row(r));
  return out;
}

std::size_t rank(const RationalMatrix& m) { return rref(m).rows(); }

RationalMatrix nullspace(const RationalMatrix& m) {
  const RationalMatrix e = rref(m);
  const std::size_t cols = m.cols();
  std::vector<std::optional<std::size_t>> pivot_row(cols);
  for (std::size_t r = 0; r < e.rows(); ++r)
    for (std::size_t c = 0; c < cols; ++c)
      if (sgn(e(r, c)) != 0) {
        pivot_row[c] = r;
        break;
      }
  RationalMatrix basis(0, cols);
  std::vector<Rational> v(cols);
  for (std::size_t free = 0; free < cols; ++free) {
    if (pivot_row[free]) continue;
    std::fill(v.begin(), v.end(), Rational(0));
    v[free] = 1;
    for (std::size_t c = 0; c < cols; ++c)
      if (pivot_row[c]) v[c] = -e(*pivot_row[c], free);
    basis.append_row(v);
  }
  return rref(basis);
}

bool annihilates(const RationalMatrix& m, const RationalMatrix& vectors) {
  if (m.cols() != vectors.cols()) throw DimensionMismatchError("annihilates: column counts differ");
  for (std::size_t v = 0; v < vectors.rows(); ++v)
    for (std::size_t r = 0; r < m.rows(); ++r) {
      Rational acc = 0;
      for (std::size_t c = 0; c < m.cols(); ++c) acc += m(r, c) * vectors(v, c);
      if (sgn(acc) != 0) return false;
    }
  return true;
}

bool subspace_equal(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.cols() != b.cols()) throw DimensionMismatchError("subspace_equal: column counts differ");
  return rref(a) == rref(b);
}

RationalMatrix subspace_intersect(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.cols() != b.cols()) throw DimensionMismatchError("subspace_intersect: column counts differ");
  // (span a)^perp is the kernel of a; the intersection is the kernel of both complements.
  const RationalMatrix constraints = nullspace(a).stacked(nullspace(b));
  return nullspace(constraints);
}

bool subspace_contains(const RationalMatrix& outer, const RationalMatrix& inner) {
  if (outer.cols() != inner.cols()) throw DimensionMismatchError("subspace_contains: column counts differ");
  return rank(outer.stacked(inner)) == rank(outer);
}

bool span_contains(const RationalMatrix& space, std::span<const Rational> v) {
  RationalMatrix single(0, space.cols());
  single.append_row(v);
  return subspace_contains(space, single);
}

bool RowReducer::add_row(std::span<const Rational> values) {
  if (values.size() != cols_) throw DimensionMismatchError("RowReducer: row length mismatch");
  std::vector<Rational> v(values.begin(), values.end());
  for (const auto& [col, row] : pivots_) {
    if (sgn(v[col]) == 0) continue;
    const Rational factor = v[col];
    for (std::size_t j = col; j < cols_; ++j) v[j] -= factor * row[j];
  }
  std::size_t lead = 0;
  while (lead < cols_ && sgn(v[lead]) == 0) ++lead;
  if (lead == cols_) return false;
  const Rational inv = 1 / v[lead];
  for (std::size_t j = lead; j < cols_; ++j) v[j] *= inv;
  for (auto& [col, row] : pivots_) {
    if (sgn(row[lead]) == 0) continue;
    const Rational factor = row[lead];
    for (std::size_t j = lead; j < cols_; ++j) row[j] -= factor * v[j];
  }
  pivots_.emplace(lead, std::move(v));
  return true;
}

RationalMatrix RowReducer::basis() const {
  RationalMatrix m(0, cols_);
  for (const auto& [col, row] : pivots_) m.append_row(row);
  return m;
}

}  // namespace incgrade
