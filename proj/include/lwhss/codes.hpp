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

// Labelweight codes and the matrices that generate them.
//
// A labeled code is a linear code C = rowspan(G) together with a surjection
// L from coordinates onto servers [s]. The labelweight of a codeword is the
// number of distinct labels its support touches. Codes with labelweight
// >= dt+1 and rate (s-dt)/s are exactly the systematic codes [I | A] whose
// non-systematic part A is block totally nonsingular, and such A can be
// obtained by embedding a totally nonsingular matrix over GF(q^j), which in
// turn comes from an MDS matrix in systematic form.

#ifndef LWHSS_CODES_HPP_
#define LWHSS_CODES_HPP_

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "lwhss/combinatorics.hpp"
#include "lwhss/embedding.hpp"
#include "lwhss/error.hpp"
#include "lwhss/field.hpp"
#include "lwhss/linalg.hpp"

namespace lwhss {

inline constexpr std::uint64_t kMinorBudget = 1'000'000;
inline constexpr std::uint64_t kCodewordBudget = std::uint64_t{1} << 24;

// Surjection from coordinates [0, n) onto labels 1..s.
class Labeling {
 public:
  Labeling(std::vector<int> labels, int s) : labels_(std::move(labels)), s_(s) {
    require(s_ >= 1, Errc::kInvalidLabeling, "labeling needs s >= 1");
    std::vector<bool> hit(static_cast<std::size_t>(s_) + 1, false);
    for (int l : labels_) {
      require(l >= 1 && l <= s_, Errc::kInvalidLabeling,
              "label " + std::to_string(l) + " outside [1, " + std::to_string(s_) + "]");
      hit[static_cast<std::size_t>(l)] = true;
    }
    for (int l = 1; l <= s_; ++l) {
      require(hit[static_cast<std::size_t>(l)], Errc::kInvalidLabeling,
              "label " + std::to_string(l) + " has empty preimage");
    }
  }

  std::size_t n() const { return labels_.size(); }
  int s() const { return s_; }
  int operator[](std::size_t i) const { return labels_[i]; }
  const std::vector<int>& labels() const { return labels_; }

  std::vector<std::size_t> preimage(int label) const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < labels_.size(); ++i) {
      if (labels_[i] == label) out.push_back(i);
    }
    return out;
  }

  friend bool operator==(const Labeling& a, const Labeling& b) {
    return a.s_ == b.s_ && a.labels_ == b.labels_;
  }

 private:
  std::vector<int> labels_;
  int s_;
};

struct Balance {
  bool balanced;
  int j;  // common preimage size; 0 when unbalanced
};

inline Balance is_balanced(const Labeling& L) {
  std::vector<int> counts(static_cast<std::size_t>(L.s()) + 1, 0);
  for (int l : L.labels()) ++counts[static_cast<std::size_t>(l)];
  for (int l = 2; l <= L.s(); ++l) {
    if (counts[static_cast<std::size_t>(l)] != counts[1]) return {false, 0};
  }
  return {true, counts[1]};
}

// x -> ceil(x / j) on 1-based coordinates.
inline Labeling canonical_labeling(int j, int s) {
  require(j >= 1 && s >= 1, Errc::kInvalidLabeling, "canonical labeling needs j, s >= 1");
  std::vector<int> labels;
  labels.reserve(static_cast<std::size_t>(j * s));
  for (int x = 1; x <= j * s; ++x) labels.push_back((x + j - 1) / j);
  return Labeling(std::move(labels), s);
}

inline int labelweight(std::span<const Elem> c, const Labeling& L) {
  require(c.size() == L.n(), Errc::kLengthMismatch,
          "codeword length " + std::to_string(c.size()) + " vs labeling length " +
              std::to_string(L.n()));
  std::vector<bool> touched(static_cast<std::size_t>(L.s()) + 1, false);
  int count = 0;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i] == 0) continue;
    auto l = static_cast<std::size_t>(L[i]);
    if (!touched[l]) {
      touched[l] = true;
      ++count;
    }
  }
  return count;
}

// rowspan(G) with a labeling of its coordinates. G must have full row rank.
class LabeledCode {
 public:
  LabeledCode(Matrix generator, Labeling labeling)
      : g_(std::move(generator)), labeling_(std::move(labeling)) {
    require(labeling_.n() == g_.cols(), Errc::kLengthMismatch,
            "labeling covers " + std::to_string(labeling_.n()) + " coordinates, G has " +
                std::to_string(g_.cols()) + " columns");
    require(rank(g_) == g_.rows(), Errc::kRankDeficient, "generator matrix lacks full row rank");
    const auto bal = is_balanced(labeling_);
    j_ = bal.balanced ? bal.j : 0;
  }

  const Matrix& generator() const { return g_; }
  const Labeling& labeling() const { return labeling_; }
  const FieldPtr& field() const { return g_.field(); }
  std::size_t dimension() const { return g_.rows(); }
  std::size_t length() const { return g_.cols(); }
  int servers() const { return labeling_.s(); }
  // Preimage size of the balanced labeling, 0 if unbalanced.
  int block_size() const { return j_; }

  friend bool operator==(const LabeledCode& a, const LabeledCode& b) {
    return a.g_ == b.g_ && a.labeling_ == b.labeling_;
  }

 private:
  Matrix g_;
  Labeling labeling_;
  int j_ = 0;
};

struct LabelweightResult {
  int labelweight;           // minimum over nonzero codewords
  Vector message;            // a message attaining it
  Vector codeword;           // message^T G
  std::uint64_t codewords;   // nonzero codewords examined
};

// Brute force over all q^dim - 1 nonzero messages.
inline LabelweightResult min_labelweight(const LabeledCode& code) {
  const FieldSpec& f = *code.field();
  const std::size_t k = code.dimension();
  const std::size_t n = code.length();
  const std::uint64_t total = saturating_pow(f.order(), k);
  require(total <= kCodewordBudget, Errc::kEnumerationTooLarge,
          "q^dim = " + std::to_string(total) + " exceeds the codeword budget 2^24");
  const Matrix& g = code.generator();

  LabelweightResult best{static_cast<int>(code.servers()) + 1, {}, {}, 0};
  if (k == 0) {
    best.labelweight = 0;
    return best;
  }
  // partial[level] = sum over rows < level of message[row] * G[row].
  std::vector<Vector> partial(k + 1, Vector(n, 0));
  Vector message(k, 0);
  std::size_t level = 0;
  std::vector<Elem> next_value(k + 1, 0);
  while (true) {
    if (level == k) {
      bool nonzero = std::any_of(message.begin(), message.end(), [](Elem v) { return v != 0; });
      if (nonzero) {
        ++best.codewords;
        const int w = labelweight(partial[k], code.labeling());
        if (w < best.labelweight) {
          best.labelweight = w;
          best.message = message;
          best.codeword = partial[k];
        }
      }
      --level;
      continue;
    }
    if (next_value[level] == f.order()) {
      next_value[level] = 0;
      if (level == 0) break;
      --level;
      continue;
    }
    const Elem a = next_value[level]++;
    message[level] = a;
    partial[level + 1] = partial[level];
    detail::axpy(f, partial[level + 1], a, g.row(level));
    ++level;
  }
  return best;
}

inline int labelweight_code(const LabeledCode& code) { return min_labelweight(code).labelweight; }

// G(Lambda): columns whose label lies in Lambda, original order kept.
inline Matrix column_block(const LabeledCode& code, const std::set<int>& labels) {
  std::vector<std::size_t> cols;
  for (std::size_t i = 0; i < code.length(); ++i) {
    if (labels.count(code.labeling()[i])) cols.push_back(i);
  }
  return code.generator().select_columns(cols);
}

// r x u array of invertible j x j blocks over the base field.
class BlockMatrix {
 public:
  BlockMatrix(FieldPtr field, int j, int r, int u, std::vector<Matrix> blocks)
      : field_(std::move(field)), j_(j), r_(r), u_(u), blocks_(std::move(blocks)) {
    require(j_ >= 1 && r_ >= 1 && u_ >= 1, Errc::kDimensionMismatch,
            "block matrix needs j, r, u >= 1");
    require(blocks_.size() == static_cast<std::size_t>(r_ * u_), Errc::kDimensionMismatch,
            "expected r*u blocks");
    for (std::size_t b = 0; b < blocks_.size(); ++b) {
      const Matrix& m = blocks_[b];
      require(same_field(m.field(), field_), Errc::kFieldMismatch, "block field");
      require(m.rows() == static_cast<std::size_t>(j_) && m.cols() == static_cast<std::size_t>(j_),
              Errc::kDimensionMismatch, "block is not j x j");
      require(is_nonsingular(m), Errc::kNotBlockTn,
              "block (" + std::to_string(b / static_cast<std::size_t>(u_)) + "," +
                  std::to_string(b % static_cast<std::size_t>(u_)) + ") is singular");
    }
  }

  const FieldPtr& field() const { return field_; }
  int j() const { return j_; }
  int r() const { return r_; }
  int u() const { return u_; }
  const Matrix& block(int i, int k) const { return blocks_[static_cast<std::size_t>(i * u_ + k)]; }
  const std::vector<Matrix>& blocks() const { return blocks_; }

  // The j|rows| x j|cols| matrix of the selected sub-array.
  Matrix assemble(std::span<const std::size_t> rows, std::span<const std::size_t> cols) const {
    const auto j = static_cast<std::size_t>(j_);
    Matrix out(field_, j * rows.size(), j * cols.size());
    for (std::size_t a = 0; a < rows.size(); ++a) {
      for (std::size_t b = 0; b < cols.size(); ++b) {
        const Matrix& blk = block(static_cast<int>(rows[a]), static_cast<int>(cols[b]));
        for (std::size_t x = 0; x < j; ++x) {
          for (std::size_t y = 0; y < j; ++y) out(a * j + x, b * j + y) = blk(x, y);
        }
      }
    }
    return out;
  }

  Matrix flatten() const {
    std::vector<std::size_t> rows(static_cast<std::size_t>(r_)), cols(static_cast<std::size_t>(u_));
    std::iota(rows.begin(), rows.end(), std::size_t{0});
    std::iota(cols.begin(), cols.end(), std::size_t{0});
    return assemble(rows, cols);
  }

  friend bool operator==(const BlockMatrix& a, const BlockMatrix& b) {
    return same_field(a.field_, b.field_) && a.j_ == b.j_ && a.r_ == b.r_ && a.u_ == b.u_ &&
           a.blocks_ == b.blocks_;
  }

 private:
  FieldPtr field_;
  int j_, r_, u_;
  std::vector<Matrix> blocks_;
};

namespace detail {

inline std::uint64_t square_subarray_count(std::uint64_t r, std::uint64_t u) {
  std::uint64_t total = 0;
  for (std::uint64_t k = 1; k <= std::min(r, u); ++k) {
    const std::uint64_t a = binomial(r, k), b = binomial(u, k);
    if (a != 0 && b > UINT64_MAX / a) return UINT64_MAX;
    total += a * b;
  }
  return total;
}

// Calls fn(rows, cols) for every pair of equal-size nonempty index sets.
// Stops and returns false as soon as fn does.
template <typename Fn>
bool for_each_square_subarray(std::size_t r, std::size_t u, Fn&& fn) {
  for (std::size_t k = 1; k <= std::min(r, u); ++k) {
    const bool done = for_each_combination(r, k, [&](std::span<const std::size_t> rows) {
      return for_each_combination(u, k, [&](std::span<const std::size_t> cols) {
        return fn(rows, cols);
      });
    });
    if (!done) return false;
  }
  return true;
}

}  // namespace detail

// Vandermonde on every field element in canonical order, extended by unit
// columns: (0,...,0,1) for u = Q+1, and (0,1,0), (0,0,1) for u = Q+2 with Q
// even and r = 3. For u <= Q only the first u Vandermonde columns are kept.
inline Matrix build_mds(const FieldPtr& field, int r, int u) {
  const std::uint64_t q = field->order();
  require(r >= 1 && u >= r, Errc::kParamsExceedMdsBound, "need 1 <= r <= u");
  const bool even = q % 2 == 0;
  // Over GF(2) the r = 3, u = 4 instance of the even case has r > q.
  const bool even_r3 = even && r == 3 && static_cast<std::uint64_t>(u) == q + 2;
  require(static_cast<std::uint64_t>(r) <= q || even_r3, Errc::kParamsExceedMdsBound,
          "r = " + std::to_string(r) + " exceeds field order " + std::to_string(q));
  const bool extra = even && (r == 3 || static_cast<std::uint64_t>(r) == q - 1);
  const std::uint64_t max_u = extra ? q + 2 : q + 1;
  require(static_cast<std::uint64_t>(u) <= max_u, Errc::kParamsExceedMdsBound,
          "u = " + std::to_string(u) + " exceeds " + std::to_string(max_u) + " over " +
              field->name());
  const auto rr = static_cast<std::size_t>(r);
  const auto uu = static_cast<std::size_t>(u);
  Matrix m(field, rr, uu);
  if (r == 1) {
    for (std::size_t c = 0; c < uu; ++c) m(0, c) = 1;
    return m;
  }
  if (static_cast<std::uint64_t>(u) == q + 2 && r != 3) {
    fail(Errc::kParamsExceedMdsBound,
         "the even-characteristic case r = q^j - 1, u = q^j + 2 is not constructed");
  }
  const std::size_t vand = std::min<std::size_t>(uu, q);
  for (std::size_t c = 0; c < vand; ++c) {
    for (std::size_t i = 0; i < rr; ++i) m(i, c) = field->pow(static_cast<Elem>(c), i);
  }
  if (uu == q + 1) {
    m(rr - 1, q) = 1;
  } else if (uu == q + 2) {
    m(1, q) = 1;
    m(2, q + 1) = 1;
  }
  return m;
}

inline bool is_mds(const Matrix& m) {
  const std::size_t r = m.rows(), u = m.cols();
  require(r <= u, Errc::kDimensionMismatch, "MDS check needs rows <= cols");
  require(binomial(u, r) <= kMinorBudget, Errc::kEnumerationTooLarge,
          "C(" + std::to_string(u) + "," + std::to_string(r) + ") minors exceed budget");
  std::vector<std::size_t> all_rows(r);
  std::iota(all_rows.begin(), all_rows.end(), std::size_t{0});
  return for_each_combination(u, r, [&](std::span<const std::size_t> cols) {
    return is_nonsingular(m.select_columns(cols));
  });
}

inline bool is_totally_nonsingular(const Matrix& m) {
  require(detail::square_subarray_count(m.rows(), m.cols()) <= kMinorBudget,
          Errc::kEnumerationTooLarge, "square submatrix count exceeds budget");
  return detail::for_each_square_subarray(
      m.rows(), m.cols(), [&](std::span<const std::size_t> rows, std::span<const std::size_t> cols) {
        return is_nonsingular(m.submatrix(rows, cols));
      });
}

// Systematic form [I | A] of an MDS matrix; returns A.
inline Matrix mds_to_tn(const Matrix& m, bool verify = true) {
  if (verify) require(is_mds(m), Errc::kNotMds, "input is not MDS");
  const std::size_t r = m.rows();
  auto res = rref(m);
  bool systematic = res.rank == r;
  for (std::size_t k = 0; systematic && k < r; ++k) systematic = res.pivots[k] == k;
  require(systematic, Errc::kNotMds, "leading r x r block is singular");
  Matrix a = res.reduced.column_range(r, m.cols());
  if (verify) require(is_totally_nonsingular(a), Errc::kNotTn, "non-systematic part is not TN");
  return a;
}

inline Matrix tn_to_mds(const Matrix& a, bool verify = true) {
  if (verify) require(is_totally_nonsingular(a), Errc::kNotTn, "input is not totally nonsingular");
  return Matrix::identity(a.field(), a.rows()).hconcat(a);
}

inline bool is_block_tn(const BlockMatrix& a) {
  require(detail::square_subarray_count(static_cast<std::uint64_t>(a.r()),
                                        static_cast<std::uint64_t>(a.u())) <= kMinorBudget,
          Errc::kEnumerationTooLarge, "square sub-array count exceeds budget");
  return detail::for_each_square_subarray(
      static_cast<std::size_t>(a.r()), static_cast<std::size_t>(a.u()),
      [&](std::span<const std::size_t> rows, std::span<const std::size_t> cols) {
        return is_nonsingular(a.assemble(rows, cols));
      });
}

// Apply the embedding GF(q^j) -> GF(q)^{j x j} entrywise.
inline BlockMatrix tn_to_block_tn(const Matrix& b, const Extension& ext, bool verify = true) {
  require(same_field(b.field(), ext.ext()), Errc::kFieldMismatch,
          "matrix is over " + b.field()->name() + ", extension is " + ext.ext()->name());
  if (verify) require(is_totally_nonsingular(b), Errc::kNotTn, "input is not totally nonsingular");
  std::vector<Matrix> blocks;
  blocks.reserve(b.rows() * b.cols());
  for (std::size_t i = 0; i < b.rows(); ++i) {
    for (std::size_t k = 0; k < b.cols(); ++k) blocks.push_back(ext.embed_matrix(b(i, k)));
  }
  return BlockMatrix(ext.base(), ext.degree(), static_cast<int>(b.rows()),
                     static_cast<int>(b.cols()), std::move(blocks));
}

// [I | A] with the canonical labeling on s = r + u labels.
inline LabeledCode block_tn_to_code(const BlockMatrix& a, bool verify = true) {
  if (verify) require(is_block_tn(a), Errc::kNotBlockTn, "input is not block TN");
  const Matrix flat = a.flatten();
  Matrix g = Matrix::identity(a.field(), flat.rows()).hconcat(flat);
  return LabeledCode(std::move(g), canonical_labeling(a.j(), a.r() + a.u()));
}

// Reorders coordinates by a stable sort on labels, brings G to systematic form
// and cuts the non-systematic part into j x j blocks.
inline BlockMatrix code_to_block_tn(const LabeledCode& code, int dt, bool verify = true) {
  const int s = code.servers();
  require(dt >= 1 && s - dt > 0, Errc::kInfeasibleParams, "need 0 < dt < s");
  const auto bal = is_balanced(code.labeling());
  require(bal.balanced, Errc::kLabelweightTooSmall, "labeling is not balanced");
  const int j = bal.j;
  require(code.dimension() == static_cast<std::size_t>(j * (s - dt)), Errc::kDimensionMismatch,
          "rate is not (s-dt)/s");
  if (verify) {
    require(labelweight_code(code) >= dt + 1, Errc::kLabelweightTooSmall,
            "labelweight below dt+1");
  }
  std::vector<std::size_t> order(code.length());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return code.labeling()[a] < code.labeling()[b];
  });
  const auto res = rref(code.generator().select_columns(order));
  const std::size_t l = code.dimension();
  bool systematic = res.rank == l;
  for (std::size_t k = 0; systematic && k < l; ++k) systematic = res.pivots[k] == k;
  require(systematic, Errc::kLabelweightTooSmall, "first s-dt label blocks are singular");

  const auto jj = static_cast<std::size_t>(j);
  std::vector<Matrix> blocks;
  for (int i = 0; i < s - dt; ++i) {
    for (int k = 0; k < dt; ++k) {
      Matrix blk(code.field(), jj, jj);
      for (std::size_t x = 0; x < jj; ++x) {
        for (std::size_t y = 0; y < jj; ++y) {
          blk(x, y) = res.reduced(static_cast<std::size_t>(i) * jj + x,
                                  l + static_cast<std::size_t>(k) * jj + y);
        }
      }
      blocks.push_back(std::move(blk));
    }
  }
  return BlockMatrix(code.field(), j, s - dt, dt, std::move(blocks));
}

// Whether the construction's case split admits j:
//   q^j >= s-1, or q^j >= s-2 when q^j is even and s-dt is 3 or q^j - 1.
inline bool construction_admits(std::uint64_t q, int s, int dt, int j) {
  if (j < 1) return false;
  const std::uint64_t big_q = saturating_pow(q, static_cast<std::uint64_t>(j));
  const auto r = static_cast<std::uint64_t>(s - dt);
  const bool even_case = big_q % 2 == 0 && (r == 3 || r + 1 == big_q);
  const auto need = static_cast<std::int64_t>(even_case ? s - 2 : s - 1);
  return need <= 0 || big_q >= static_cast<std::uint64_t>(need);
}

inline int construction_min_j(std::uint64_t q, int s, int d, int t) {
  require(s - d * t > 0, Errc::kInfeasibleParams, "need s - dt > 0");
  int j = 1;
  while (!construction_admits(q, s, d * t, j)) ++j;
  return j;
}

// ceil(max(log_q(s-dt+1), log_q(dt+1))) when both s-dt > 1 and dt > 1; 1
// otherwise, where the counting argument does not apply.
inline int j_lower_bound(std::uint64_t q, int s, int d, int t) {
  const int dt = d * t;
  require(s - dt > 0, Errc::kInfeasibleParams, "need s - dt > 0");
  if (s - dt <= 1 || dt <= 1) return 1;
  const auto target = static_cast<std::uint64_t>(std::max(s - dt + 1, dt + 1));
  int j = 0;
  for (std::uint64_t v = 1; v < target; v *= q) ++j;
  return std::max(j, 1);
}

struct OptimalCode {
  LabeledCode code;
  int j;
};

// The explicit rate-(s-dt)/s code with labelweight >= dt+1: MDS matrix over
// GF(q^j), systematic form, entrywise embedding into GF(q), then [I | A].
inline OptimalCode optimal_code(std::uint64_t q, int s, int d, int t,
                                std::optional<int> j_override = std::nullopt) {
  require(s >= 1 && d >= 1 && t >= 1, Errc::kInfeasibleParams, "s, d, t must be positive");
  const int dt = d * t;
  require(s - dt > 0, Errc::kInfeasibleParams,
          "s - dt = " + std::to_string(s - dt) + " must be positive");
  const int min_j = construction_min_j(q, s, d, t);
  const int j = j_override.value_or(min_j);
  require(j >= min_j, Errc::kInfeasibleParams,
          "j = " + std::to_string(j) + " is below the construction bound " + std::to_string(min_j));
  auto base = FieldSpec::of_order(q);
  const auto ext = Extension::create(base, j);
  const Matrix mds = build_mds(ext.ext(), s - dt, s);
  const Matrix tn = mds_to_tn(mds, false);
  const BlockMatrix blocks = tn_to_block_tn(tn, ext, false);
  return {block_tn_to_code(blocks, false), j};
}

}  // namespace lwhss

#endif  // LWHSS_CODES_HPP_
