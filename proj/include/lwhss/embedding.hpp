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

#ifndef LWHSS_EMBEDDING_HPP_
#define LWHSS_EMBEDDING_HPP_

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "lwhss/error.hpp"
#include "lwhss/field.hpp"
#include "lwhss/linalg.hpp"

namespace lwhss {

// GF(q^j) viewed as a j-dimensional vector space over GF(q).
//
// With q = p^a the extension is built as GF(p^(a*j)). The copy of GF(q) inside
// it is the set of elements fixed by x -> x^q; it is identified with the
// standalone base field by sending the base field's generator to the smallest
// root (in canonical order) of the base defining polynomial. Coordinates are
// taken in the polynomial basis {1, x, ..., x^(j-1)} where x is the class of
// the variable in the extension.
class Extension {
 public:
  static Extension create(FieldPtr base, int degree) {
    require(degree >= 1, Errc::kInvalidField, "extension degree must be >= 1");
    auto ext = FieldSpec::create(base->characteristic(), base->degree() * degree);
    return Extension(std::move(base), std::move(ext), degree);
  }

  const FieldPtr& base() const { return base_; }
  const FieldPtr& ext() const { return ext_; }
  int degree() const { return degree_; }

  bool in_subfield(Elem a) const { return ext_->pow(a, base_->order()) == a; }

  // The image of a base-field element in the extension.
  Elem lift(Elem b) const {
    require(base_->contains(b), Errc::kInvalidField, "not a base-field element");
    return lift_[b];
  }

  // The base-field element corresponding to a subfield element.
  std::optional<Elem> restrict(Elem a) const {
    for (Elem b = 0; b < base_->order(); ++b) {
      if (lift_[b] == a) return b;
    }
    return std::nullopt;
  }

  // Coordinates of a over the base field.
  std::span<const Elem> coordinates(Elem a) const {
    require(ext_->contains(a), Errc::kFieldMismatch, "not an element of " + ext_->name());
    const auto j = static_cast<std::size_t>(degree_);
    return {coords_.data() + static_cast<std::size_t>(a) * j, j};
  }

  // M_a: the matrix of y -> a*y over the base field; column k holds the
  // coordinates of a * x^k.
  Matrix embed_matrix(Elem a) const {
    require(ext_->contains(a), Errc::kFieldMismatch, "not an element of " + ext_->name());
    const auto j = static_cast<std::size_t>(degree_);
    Matrix m(base_, j, j);
    for (std::size_t k = 0; k < j; ++k) {
      const auto c = coordinates(ext_->mul(a, basis_[k]));
      for (std::size_t r = 0; r < j; ++r) m(r, k) = c[r];
    }
    return m;
  }

  Matrix embed_matrix(const FieldElem& a) const {
    require(same_field(a.field(), ext_), Errc::kFieldMismatch,
            a.field()->name() + " is not " + ext_->name());
    return embed_matrix(a.value());
  }

 private:
  Extension(FieldPtr base, FieldPtr ext, int degree)
      : base_(std::move(base)), ext_(std::move(ext)), degree_(degree) {
    const FieldSpec& E = *ext_;
    const auto& base_mod = base_->modulus();
    // Root of the base defining polynomial inside the subfield.
    Elem gamma = 0;
    bool found = false;
    for (Elem cand = 0; cand < E.order() && !found; ++cand) {
      if (!in_subfield(cand)) continue;
      Elem acc = 0, power = 1;
      for (auto c : base_mod) {
        acc = E.add(acc, E.mul(E.constant(c), power));
        power = E.mul(power, cand);
      }
      if (acc == 0) {
        gamma = cand;
        found = true;
      }
    }
    require(found, Errc::kInvalidField, "base field does not embed");

    lift_.resize(base_->order());
    for (Elem b = 0; b < base_->order(); ++b) {
      Elem acc = 0, power = 1;
      for (auto c : base_->coeffs(b)) {
        acc = E.add(acc, E.mul(E.constant(c), power));
        power = E.mul(power, gamma);
      }
      lift_[b] = acc;
    }

    const Elem x = degree_ > 1 ? (E.degree() > 1 ? E.characteristic() : 0) : 0;
    basis_.resize(static_cast<std::size_t>(degree_));
    Elem power = 1;
    for (auto& b : basis_) {
      b = power;
      power = E.mul(power, x);
    }

    const auto j = static_cast<std::size_t>(degree_);
    const std::uint32_t q = base_->order();
    coords_.assign(static_cast<std::size_t>(E.order()) * j, 0);
    std::vector<bool> seen(E.order(), false);
    std::vector<Elem> tuple(j, 0);
    for (std::uint64_t idx = 0; idx < E.order(); ++idx) {
      std::uint64_t rest = idx;
      Elem value = 0;
      for (std::size_t k = 0; k < j; ++k) {
        tuple[k] = static_cast<Elem>(rest % q);
        rest /= q;
        value = E.add(value, E.mul(lift_[tuple[k]], basis_[k]));
      }
      require(!seen[value], Errc::kInvalidField, "polynomial basis is degenerate");
      seen[value] = true;
      for (std::size_t k = 0; k < j; ++k) coords_[value * j + k] = tuple[k];
    }
  }

  FieldPtr base_;
  FieldPtr ext_;
  int degree_;
  std::vector<Elem> lift_;
  std::vector<Elem> basis_;
  std::vector<Elem> coords_;
};

}  // namespace lwhss

#endif  // LWHSS_EMBEDDING_HPP_
