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

// Exact arithmetic in GF(p^e) for p^e <= 2^16.
//
// Elements are encoded as the integer obtained by reading the polynomial-basis
// coefficient vector (low degree first) as a base-p number. That integer is
// both the wire format and the canonical enumeration order: element 0 is the
// zero of the field, element 1 its unit, and for e > 1 element p is the class
// of x modulo the defining polynomial.

#ifndef LWHSS_FIELD_HPP_
#define LWHSS_FIELD_HPP_

#include <algorithm>
#include <cstdint>
#include <memory>
#include <numeric>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "lwhss/error.hpp"

namespace lwhss {

using Elem = std::uint32_t;

class FieldSpec;
using FieldPtr = std::shared_ptr<const FieldSpec>;

namespace detail {

inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

inline std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

// Polynomials over GF(p) as coefficient vectors, low degree first.
using Poly = std::vector<std::uint32_t>;

inline void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

inline std::uint32_t inverse_mod(std::uint32_t a, std::uint32_t p) {
  // p is prime, so a^(p-2) is the inverse.
  std::uint64_t result = 1, base = a % p;
  for (std::uint32_t k = p - 2; k > 0; k >>= 1) {
    if (k & 1) result = result * base % p;
    base = base * base % p;
  }
  return static_cast<std::uint32_t>(result);
}

// Remainder of a modulo b over GF(p); b must be nonzero after trimming.
inline Poly poly_mod(Poly a, Poly b, std::uint32_t p) {
  trim(a);
  trim(b);
  const std::uint32_t lead_inv = inverse_mod(b.back(), p);
  while (a.size() >= b.size()) {
    const std::uint64_t factor =
        static_cast<std::uint64_t>(a.back()) * lead_inv % p;
    const std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) {
      const std::uint64_t sub = factor * b[i] % p;
      a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + p - sub) % p);
    }
    trim(a);
  }
  return a;
}

inline Poly poly_from_index(std::uint64_t index, std::uint32_t p, int len) {
  Poly out(static_cast<std::size_t>(len), 0);
  for (int i = 0; i < len; ++i) {
    out[static_cast<std::size_t>(i)] = static_cast<std::uint32_t>(index % p);
    index /= p;
  }
  return out;
}

// Trial division by every monic polynomial of degree 1..deg/2.
inline bool is_irreducible(const Poly& f, std::uint32_t p) {
  Poly g = f;
  trim(g);
  const int deg = static_cast<int>(g.size()) - 1;
  if (deg < 1) return false;
  if (deg == 1) return true;
  for (int k = 1; k <= deg / 2; ++k) {
    std::uint64_t count = 1;
    for (int i = 0; i < k; ++i) count *= p;
    for (std::uint64_t idx = 0; idx < count; ++idx) {
      Poly div = poly_from_index(idx, p, k);
      div.push_back(1);
      if (poly_mod(g, div, p).empty()) return false;
    }
  }
  return true;
}

}  // namespace detail

// A finite field GF(p^e) with a fixed defining polynomial. Immutable once
// built; share it through FieldPtr.
class FieldSpec {
  struct Token {};

 public:
  static constexpr std::uint32_t kMaxOrder = 1u << 16;

  FieldSpec(Token, std::uint32_t p, int e, detail::Poly modulus)
      : p_(p), e_(e), modulus_(std::move(modulus)) {
    order_ = 1;
    for (int i = 0; i < e_; ++i) order_ *= p_;
    build_tables();
  }

  // GF(p^e) with the built-in defining polynomial: the monic irreducible of
  // degree e whose lower coefficients, read as a base-p integer, are smallest.
  // This gives x^2+x+1 for GF(4), x^3+x+1 for GF(8) and x^2+1 for GF(9).
  static FieldPtr create(std::uint32_t p, int e) {
    check_size(p, e);
    std::uint64_t count = 1;
    for (int i = 0; i < e; ++i) count *= p;
    for (std::uint64_t idx = 0; idx < count; ++idx) {
      detail::Poly f = detail::poly_from_index(idx, p, e);
      f.push_back(1);
      if (detail::is_irreducible(f, p)) {
        return std::make_shared<const FieldSpec>(Token{}, p, e, std::move(f));
      }
    }
    fail(Errc::kInvalidField, "no irreducible polynomial found");
  }

  static FieldPtr create(std::uint32_t p, int e, std::vector<std::uint32_t> modulus) {
    check_size(p, e);
    require(modulus.size() == static_cast<std::size_t>(e) + 1 && modulus.back() == 1,
            Errc::kInvalidField, "modulus must be monic of degree e");
    for (auto c : modulus) {
      require(c < p, Errc::kInvalidField, "modulus coefficient out of range");
    }
    require(detail::is_irreducible(modulus, p), Errc::kInvalidField,
            "modulus is reducible over GF(" + std::to_string(p) + ")");
    return std::make_shared<const FieldSpec>(Token{}, p, e, std::move(modulus));
  }

  // GF(q) for a prime power q.
  static FieldPtr of_order(std::uint64_t q) {
    require(q >= 2, Errc::kInvalidField, "field order must be >= 2");
    require(q <= kMaxOrder, Errc::kFieldTooLarge,
            "field order " + std::to_string(q) + " exceeds 2^16");
    const auto factors = detail::prime_factors(q);
    require(factors.size() == 1, Errc::kInvalidField,
            std::to_string(q) + " is not a prime power");
    const auto p = static_cast<std::uint32_t>(factors[0]);
    int e = 0;
    for (std::uint64_t v = q; v > 1; v /= p) ++e;
    return create(p, e);
  }

  std::uint32_t characteristic() const { return p_; }
  int degree() const { return e_; }
  std::uint32_t order() const { return order_; }
  const std::vector<std::uint32_t>& modulus() const { return modulus_; }

  bool contains(Elem a) const { return a < order_; }

  Elem add(Elem a, Elem b) const {
    if (p_ == 2) return a ^ b;
    if (e_ == 1) return (a + b) % p_;
    if (!add_table_.empty()) return add_table_[a * order_ + b];
    return add_digits(a, b);
  }
  Elem neg(Elem a) const { return neg_table_[a]; }
  Elem sub(Elem a, Elem b) const { return add(a, neg_table_[b]); }

  Elem mul(Elem a, Elem b) const {
    if (a == 0 || b == 0) return 0;
    return exp_[log_[a] + log_[b]];
  }

  Elem inv(Elem a) const {
    require(a != 0, Errc::kDivisionByZero, "inverse of zero");
    const std::uint32_t n = order_ - 1;
    return exp_[(n - log_[a]) % n];
  }

  Elem div(Elem a, Elem b) const {
    require(b != 0, Errc::kDivisionByZero, "division by zero");
    return mul(a, inv(b));
  }

  Elem pow(Elem a, std::uint64_t k) const {
    if (k == 0) return 1;
    if (a == 0) return 0;
    const std::uint64_t n = order_ - 1;
    return exp_[static_cast<std::size_t>((log_[a] * (k % n)) % n)];
  }

  std::vector<std::uint32_t> coeffs(Elem a) const {
    std::vector<std::uint32_t> out(static_cast<std::size_t>(e_));
    for (auto& c : out) {
      c = a % p_;
      a /= p_;
    }
    return out;
  }

  Elem from_coeffs(std::span<const std::uint32_t> c) const {
    require(c.size() == static_cast<std::size_t>(e_), Errc::kLengthMismatch,
            "coefficient vector length must equal the extension degree");
    Elem out = 0;
    for (std::size_t i = c.size(); i-- > 0;) {
      require(c[i] < p_, Errc::kInvalidField, "coefficient out of range");
      out = out * p_ + c[i];
    }
    return out;
  }

  // Element with the integer encoding of the base-field constant c (c < p).
  Elem constant(std::uint32_t c) const { return c % p_; }

  // A fixed generator of the multiplicative group.
  Elem primitive() const { return primitive_; }

  std::string name() const { return "GF(" + std::to_string(order_) + ")"; }

  bool operator==(const FieldSpec& other) const {
    return p_ == other.p_ && e_ == other.e_ && modulus_ == other.modulus_;
  }

 private:
  static void check_size(std::uint32_t p, int e) {
    require(detail::is_prime(p), Errc::kInvalidField,
            std::to_string(p) + " is not prime");
    require(e >= 1, Errc::kInvalidField, "extension degree must be >= 1");
    std::uint64_t order = 1;
    for (int i = 0; i < e; ++i) {
      order *= p;
      require(order <= kMaxOrder, Errc::kFieldTooLarge,
              "field order exceeds 2^16");
    }
  }

  Elem add_digits(Elem a, Elem b) const {
    Elem out = 0, scale = 1;
    for (int i = 0; i < e_; ++i) {
      out += ((a % p_ + b % p_) % p_) * scale;
      a /= p_;
      b /= p_;
      scale *= p_;
    }
    return out;
  }

  Elem neg_digits(Elem a) const {
    Elem out = 0, scale = 1;
    for (int i = 0; i < e_; ++i) {
      out += ((p_ - a % p_) % p_) * scale;
      a /= p_;
      scale *= p_;
    }
    return out;
  }

  // Schoolbook product reduced modulo the defining polynomial; only used to
  // bootstrap the log tables.
  Elem slow_mul(Elem a, Elem b) const {
    const auto ca = coeffs(a), cb = coeffs(b);
    std::vector<std::uint64_t> prod(static_cast<std::size_t>(2 * e_), 0);
    for (int i = 0; i < e_; ++i) {
      for (int k = 0; k < e_; ++k) {
        prod[static_cast<std::size_t>(i + k)] += std::uint64_t{ca[i]} * cb[k];
      }
    }
    detail::Poly r(prod.size());
    for (std::size_t i = 0; i < prod.size(); ++i) {
      r[i] = static_cast<std::uint32_t>(prod[i] % p_);
    }
    r = detail::poly_mod(std::move(r), modulus_, p_);
    r.resize(static_cast<std::size_t>(e_), 0);
    return from_coeffs(r);
  }

  void build_tables() {
    neg_table_.resize(order_);
    for (Elem a = 0; a < order_; ++a) neg_table_[a] = neg_digits(a);
    if (p_ != 2 && e_ > 1 && order_ <= 256) {
      add_table_.resize(static_cast<std::size_t>(order_) * order_);
      for (Elem a = 0; a < order_; ++a) {
        for (Elem b = 0; b < order_; ++b) add_table_[a * order_ + b] = add_digits(a, b);
      }
    }

    const std::uint64_t n = order_ - 1;
    const auto factors = detail::prime_factors(n);
    auto slow_pow = [&](Elem a, std::uint64_t k) {
      Elem result = 1;
      for (; k > 0; k >>= 1) {
        if (k & 1) result = slow_mul(result, a);
        a = slow_mul(a, a);
      }
      return result;
    };
    primitive_ = 0;
    for (Elem g = 1; g < order_ && primitive_ == 0; ++g) {
      bool generates = true;
      for (auto f : factors) {
        if (slow_pow(g, n / f) == 1) {
          generates = false;
          break;
        }
      }
      if (generates) primitive_ = g;
    }
    require(primitive_ != 0, Errc::kInvalidField, "no primitive element");

    exp_.resize(static_cast<std::size_t>(2 * n));
    log_.assign(order_, 0);
    Elem cur = 1;
    for (std::uint64_t k = 0; k < n; ++k) {
      exp_[k] = cur;
      exp_[k + n] = cur;
      log_[cur] = static_cast<std::uint32_t>(k);
      cur = slow_mul(cur, primitive_);
    }
  }

  std::uint32_t p_;
  int e_;
  std::vector<std::uint32_t> modulus_;
  std::uint32_t order_ = 0;
  Elem primitive_ = 0;
  std::vector<Elem> exp_;
  std::vector<std::uint32_t> log_;
  std::vector<Elem> neg_table_;
  std::vector<Elem> add_table_;
};

inline bool same_field(const FieldPtr& a, const FieldPtr& b) {
  return a == b || (a && b && *a == *b);
}

// A field element bundled with its field. Arithmetic between elements of
// different fields raises FieldMismatch.
class FieldElem {
 public:
  FieldElem(FieldPtr field, Elem value) : field_(std::move(field)), value_(value) {
    require(field_ != nullptr, Errc::kInvalidField, "null field");
    require(field_->contains(value_), Errc::kInvalidField,
            "value " + std::to_string(value_) + " not in " + field_->name());
  }

  static FieldElem zero(FieldPtr f) { return FieldElem(std::move(f), 0); }
  static FieldElem one(FieldPtr f) { return FieldElem(std::move(f), 1); }

  const FieldPtr& field() const { return field_; }
  Elem value() const { return value_; }
  bool is_zero() const { return value_ == 0; }
  std::vector<std::uint32_t> coeffs() const { return field_->coeffs(value_); }

  FieldElem inverse() const { return {field_, field_->inv(value_)}; }
  FieldElem pow(std::uint64_t k) const { return {field_, field_->pow(value_, k)}; }
  FieldElem operator-() const { return {field_, field_->neg(value_)}; }

  friend FieldElem operator+(const FieldElem& a, const FieldElem& b) {
    check(a, b);
    return {a.field_, a.field_->add(a.value_, b.value_)};
  }
  friend FieldElem operator-(const FieldElem& a, const FieldElem& b) {
    check(a, b);
    return {a.field_, a.field_->sub(a.value_, b.value_)};
  }
  friend FieldElem operator*(const FieldElem& a, const FieldElem& b) {
    check(a, b);
    return {a.field_, a.field_->mul(a.value_, b.value_)};
  }
  friend FieldElem operator/(const FieldElem& a, const FieldElem& b) {
    check(a, b);
    return {a.field_, a.field_->div(a.value_, b.value_)};
  }
  friend bool operator==(const FieldElem& a, const FieldElem& b) {
    return same_field(a.field_, b.field_) && a.value_ == b.value_;
  }

 private:
  static void check(const FieldElem& a, const FieldElem& b) {
    require(same_field(a.field_, b.field_), Errc::kFieldMismatch,
            a.field_->name() + " vs " + b.field_->name());
  }

  FieldPtr field_;
  Elem value_;
};

enum class FieldOp { kAdd, kSub, kMul, kDiv };

inline FieldElem arith(const FieldElem& a, const FieldElem& b, FieldOp op) {
  switch (op) {
    case FieldOp::kAdd: return a + b;
    case FieldOp::kSub: return a - b;
    case FieldOp::kMul: return a * b;
    case FieldOp::kDiv: return a / b;
  }
  fail(Errc::kMalformedInput, "unknown field operation");
}

// All elements in canonical order; element 0 first.
inline std::vector<FieldElem> enumerate_field(const FieldPtr& field) {
  require(field->order() <= FieldSpec::kMaxOrder, Errc::kFieldTooLarge,
          "field too large to enumerate");
  std::vector<FieldElem> out;
  out.reserve(field->order());
  for (Elem a = 0; a < field->order(); ++a) out.emplace_back(field, a);
  return out;
}

}  // namespace lwhss

#endif  // LWHSS_FIELD_HPP_
