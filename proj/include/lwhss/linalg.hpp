// Copyright 2026 The lwhss Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Dense exact linear algebra over a FieldSpec.

#ifndef LWHSS_LINALG_HPP_
#define LWHSS_LINALG_HPP_

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "lwhss/error.hpp"
#include "lwhss/field.hpp"

namespace lwhss {

using Vector = std::vector<Elem>;

class Matrix {
 public:
  Matrix(FieldPtr field, std::size_t rows, std::size_t cols)
      : field_(std::move(field)), rows_(rows), cols_(cols), data_(rows * cols, 0) {}

  static Matrix identity(FieldPtr field, std::size_t n) {
    Matrix m(std::move(field), n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  static Matrix from_rows(FieldPtr field, const std::vector<std::vector<Elem>>& rows) {
    const std::size_t r = rows.size();
    const std::size_t c = r == 0 ? 0 : rows.front().size();
    Matrix m(std::move(field), r, c);
    for (std::size_t i = 0; i < r; ++i) {
      require(rows[i].size() == c, Errc::kDimensionMismatch, "ragged rows");
      for (std::size_t k = 0; k < c; ++k) {
        require(m.field_->contains(rows[i][k]), Errc::kInvalidField,
                "entry " + std::to_string(rows[i][k]) + " not in " + m.field_->name());
        m(i, k) = rows[i][k];
      }
    }
    return m;
  }

  static Matrix from_rows(FieldPtr field,
                          std::initializer_list<std::initializer_list<Elem>> rows) {
    std::vector<std::vector<Elem>> v;
    for (auto r : rows) v.emplace_back(r);
    return from_rows(std::move(field), v);
  }

  const FieldPtr& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Elem& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  Elem operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  FieldElem at(std::size_t r, std::size_t c) const { return {field_, (*this)(r, c)}; }

  std::span<Elem> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  std::span<const Elem> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

  Vector column(std::size_t c) const {
    Vector out(rows_);
    for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
    return out;
  }

  std::vector<std::vector<Elem>> to_rows() const {
    std::vector<std::vector<Elem>> out(rows_);
    for (std::size_t r = 0; r < rows_; ++r) out[r].assign(row(r).begin(), row(r).end());
    return out;
  }

  Matrix select_columns(std::span<const std::size_t> cols) const {
    Matrix out(field_, rows_, cols.size());
    for (std::size_t r = 0; r < rows_; ++r) {
      for (std::size_t k = 0; k < cols.size(); ++k) out(r, k) = (*this)(r, cols[k]);
    }
    return out;
  }

  Matrix select_rows(std::span<const std::size_t> rows) const {
    Matrix out(field_, rows.size(), cols_);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      for (std::size_t c = 0; c < cols_; ++c) out(r, c) = (*this)(rows[r], c);
    }
    return out;
  }

  Matrix submatrix(std::span<const std::size_t> rows, std::span<const std::size_t> cols) const {
    Matrix out(field_, rows.size(), cols.size());
    for (std::size_t r = 0; r < rows.size(); ++r) {
      for (std::size_t c = 0; c < cols.size(); ++c) out(r, c) = (*this)(rows[r], cols[c]);
    }
    return out;
  }

  // Columns [begin, end).
  Matrix column_range(std::size_t begin, std::size_t end) const {
    std::vector<std::size_t> idx;
    for (std::size_t c = begin; c < end; ++c) idx.push_back(c);
    return select_columns(idx);
  }

  Matrix hconcat(const Matrix& other) const {
    check_field(other);
    require(rows_ == other.rows_, Errc::kDimensionMismatch, "hconcat row count");
    Matrix out(field_, rows_, cols_ + other.cols_);
    for (std::size_t r = 0; r < rows_; ++r) {
      for (std::size_t c = 0; c < cols_; ++c) out(r, c) = (*this)(r, c);
      for (std::size_t c = 0; c < other.cols_; ++c) out(r, cols_ + c) = other(r, c);
    }
    return out;
  }

  Matrix transpose() const {
    Matrix out(field_, cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
      for (std::size_t c = 0; c < cols_; ++c) out(c, r) = (*this)(r, c);
    }
    return out;
  }

  Matrix operator+(const Matrix& other) const { return combine(other, false); }
  Matrix operator-(const Matrix& other) const { return combine(other, true); }

  Matrix operator*(const Matrix& other) const {
    check_field(other);
    require(cols_ == other.rows_, Errc::kDimensionMismatch, "matrix product shape");
    const FieldSpec& f = *field_;
    Matrix out(field_, rows_, other.cols_);
    for (std::size_t r = 0; r < rows_; ++r) {
      for (std::size_t k = 0; k < cols_; ++k) {
        const Elem a = (*this)(r, k);
        if (a == 0) continue;
        for (std::size_t c = 0; c < other.cols_; ++c) {
          out(r, c) = f.add(out(r, c), f.mul(a, other(k, c)));
        }
      }
    }
    return out;
  }

  // M x
  Vector apply(std::span<const Elem> x) const {
    require(x.size() == cols_, Errc::kLengthMismatch, "vector length must equal column count");
    const FieldSpec& f = *field_;
    Vector out(rows_, 0);
    for (std::size_t r = 0; r < rows_; ++r) {
      Elem acc = 0;
      for (std::size_t c = 0; c < cols_; ++c) acc = f.add(acc, f.mul((*this)(r, c), x[c]));
      out[r] = acc;
    }
    return out;
  }

  // m^T M
  Vector left_apply(std::span<const Elem> m) const {
    require(m.size() == rows_, Errc::kLengthMismatch, "vector length must equal row count");
    const FieldSpec& f = *field_;
    Vector out(cols_, 0);
    for (std::size_t r = 0; r < rows_; ++r) {
      if (m[r] == 0) continue;
      for (std::size_t c = 0; c < cols_; ++c) {
        out[c] = f.add(out[c], f.mul(m[r], (*this)(r, c)));
      }
    }
    return out;
  }

  bool is_zero() const {
    for (auto v : data_) {
      if (v != 0) return false;
    }
    return true;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return same_field(a.field_, b.field_) && a.rows_ == b.rows_ && a.cols_ == b.cols_ &&
           a.data_ == b.data_;
  }

 private:
  void check_field(const Matrix& other) const {
    require(same_field(field_, other.field_), Errc::kFieldMismatch,
            field_->name() + " vs " + other.field_->name());
  }

  Matrix combine(const Matrix& other, bool subtract) const {
    check_field(other);
    require(rows_ == other.rows_ && cols_ == other.cols_, Errc::kDimensionMismatch,
            "matrix sum shape");
    Matrix out(field_, rows_, cols_);
    for (std::size_t i = 0; i < data_.size(); ++i) {
      out.data_[i] = subtract ? field_->sub(data_[i], other.data_[i])
                              : field_->add(data_[i], other.data_[i]);
    }
    return out;
  }

  FieldPtr field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Elem> data_;
};

namespace detail {

// dst += factor * src, skipping zero entries of src.
inline void axpy(const FieldSpec& f, std::span<Elem> dst, Elem factor,
                 std::span<const Elem> src, std::size_t from = 0) {
  if (factor == 0) return;
  if (f.characteristic() == 2 && factor == 1) {
    for (std::size_t c = from; c < dst.size(); ++c) dst[c] ^= src[c];
    return;
  }
  for (std::size_t c = from; c < dst.size(); ++c) {
    if (src[c] != 0) dst[c] = f.add(dst[c], f.mul(factor, src[c]));
  }
}

inline void scale(const FieldSpec& f, std::span<Elem> row, Elem factor, std::size_t from = 0) {
  if (factor == 1) return;
  for (std::size_t c = from; c < row.size(); ++c) row[c] = f.mul(factor, row[c]);
}

inline void swap_rows(Matrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  auto ra = m.row(a);
  auto rb = m.row(b);
  for (std::size_t c = 0; c < m.cols(); ++c) std::swap(ra[c], rb[c]);
}

}  // namespace detail

struct RrefResult {
  Matrix reduced;
  std::vector<std::size_t> pivots;
  std::size_t rank;
};

// Gauss-Jordan elimination. Pivot rows are found by scanning top-down for the
// first nonzero entry in the current column, which makes the output fully
// deterministic.
inline RrefResult rref(Matrix m) {
  const FieldSpec& f = *m.field();
  std::vector<std::size_t> pivots;
  std::size_t prow = 0;
  for (std::size_t c = 0; c < m.cols() && prow < m.rows(); ++c) {
    std::size_t found = prow;
    while (found < m.rows() && m(found, c) == 0) ++found;
    if (found == m.rows()) continue;
    detail::swap_rows(m, prow, found);
    detail::scale(f, m.row(prow), f.inv(m(prow, c)), c);
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == prow || m(r, c) == 0) continue;
      detail::axpy(f, m.row(r), f.neg(m(r, c)), m.row(prow), c);
    }
    pivots.push_back(c);
    ++prow;
  }
  const std::size_t rank = pivots.size();
  return {std::move(m), std::move(pivots), rank};
}

// Row-echelon rank; does not back-substitute.
inline std::size_t rank(Matrix m) {
  const FieldSpec& f = *m.field();
  std::size_t prow = 0;
  for (std::size_t c = 0; c < m.cols() && prow < m.rows(); ++c) {
    std::size_t found = prow;
    while (found < m.rows() && m(found, c) == 0) ++found;
    if (found == m.rows()) continue;
    detail::swap_rows(m, prow, found);
    const Elem pinv = f.inv(m(prow, c));
    for (std::size_t r = prow + 1; r < m.rows(); ++r) {
      if (m(r, c) == 0) continue;
      detail::axpy(f, m.row(r), f.neg(f.mul(m(r, c), pinv)), m.row(prow), c);
    }
    ++prow;
  }
  return prow;
}

inline FieldElem det(Matrix m) {
  require(m.is_square(), Errc::kNotSquare,
          std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
  const FieldSpec& f = *m.field();
  Elem acc = 1;
  const std::size_t n = m.rows();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t found = c;
    while (found < n && m(found, c) == 0) ++found;
    if (found == n) return FieldElem::zero(m.field());
    if (found != c) {
      detail::swap_rows(m, c, found);
      acc = f.neg(acc);
    }
    const Elem pivot = m(c, c);
    acc = f.mul(acc, pivot);
    const Elem pinv = f.inv(pivot);
    for (std::size_t r = c + 1; r < n; ++r) {
      if (m(r, c) == 0) continue;
      detail::axpy(f, m.row(r), f.neg(f.mul(m(r, c), pinv)), m.row(c), c);
    }
  }
  return {m.field(), acc};
}

inline bool is_nonsingular(const Matrix& m) {
  return m.is_square() && rank(m) == m.rows();
}

// Basis of the right null space, one vector per free column of the RREF.
inline std::vector<Vector> kernel(const Matrix& m) {
  const FieldSpec& f = *m.field();
  const auto res = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : res.pivots) is_pivot[p] = true;
  std::vector<Vector> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vector v(m.cols(), 0);
    v[free] = 1;
    for (std::size_t k = 0; k < res.pivots.size(); ++k) {
      v[res.pivots[k]] = f.neg(res.reduced(k, free));
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

// Canonical particular solution of A x = b: RREF of [A | b], free variables
// set to zero. Returns nullopt when b is outside the column space.
inline std::optional<Vector> solve(const Matrix& a, std::span<const Elem> b) {
  require(a.rows() == b.size(), Errc::kLengthMismatch, "rhs length must equal row count");
  Matrix aug(a.field(), a.rows(), a.cols() + 1);
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) aug(r, c) = a(r, c);
    aug(r, a.cols()) = b[r];
  }
  const auto res = rref(std::move(aug));
  Vector x(a.cols(), 0);
  for (std::size_t k = 0; k < res.pivots.size(); ++k) {
    if (res.pivots[k] == a.cols()) return std::nullopt;
    x[res.pivots[k]] = res.reduced(k, a.cols());
  }
  return x;
}

inline std::optional<Matrix> inverse(const Matrix& m) {
  require(m.is_square(), Errc::kNotSquare, "inverse of non-square matrix");
  const std::size_t n = m.rows();
  const auto res = rref(m.hconcat(Matrix::identity(m.field(), n)));
  if (res.rank < n || res.pivots[n - 1] != n - 1) return std::nullopt;
  return res.reduced.column_range(n, 2 * n);
}

}  // namespace lwhss

#endif  // LWHSS_LINALG_HPP_
