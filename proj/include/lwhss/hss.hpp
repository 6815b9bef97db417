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

// Linear HSS for degree-d polynomials on CNF-shared inputs.
//
// Every secret is split as x = sum over size-t subsets T of y_T and server
// lambda holds y_T whenever lambda is not in T. A degree-d product of secrets
// expands into monomials y_{0,T_1} ... y_{d-1,T_d}, and server lambda can
// compute exactly those whose subsets all avoid lambda. Output coordinate r is
// a linear combination of the monomials its server can compute; the
// coefficients are chosen so that G z recovers one product per instance.

#ifndef LWHSS_HSS_HPP_
#define LWHSS_HSS_HPP_

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "lwhss/codes.hpp"
#include "lwhss/combinatorics.hpp"
#include "lwhss/error.hpp"
#include "lwhss/field.hpp"
#include "lwhss/linalg.hpp"
#include "lwhss/rng.hpp"

namespace lwhss {

inline constexpr std::uint64_t kMonomialBudget = 1'000'000;
inline constexpr std::uint64_t kSubsetBudget = 10'000;

struct SchemeParams {
  FieldPtr field;
  int s = 0;
  int t = 0;
  int d = 0;
  int m = 0;
  int l = 0;
  int j = 0;

  // Builds params with l = j(s - dt) after checking the basic inequalities.
  static SchemeParams make(FieldPtr field, int s, int t, int d, int m, int j) {
    SchemeParams p{std::move(field), s, t, d, m, 0, j};
    require(s >= 1 && t >= 1 && d >= 1 && j >= 1, Errc::kInfeasibleParams,
            "s, t, d, j must be positive");
    require(s - d * t > 0, Errc::kInfeasibleParams,
            "s - dt = " + std::to_string(s - d * t) + " must be positive");
    require(m >= d, Errc::kInfeasibleParams,
            "m = " + std::to_string(m) + " must be at least d = " + std::to_string(d));
    p.l = j * (s - d * t);
    return p;
  }

  int dt() const { return d * t; }
  std::uint64_t q() const { return field->order(); }
  // Coordinates of the output vector.
  int n() const { return j * s; }
  // Secrets per instance including the trailing constant-1 dummy.
  int shared_secrets() const { return m + 1; }
  int dummy_index() const { return m; }
};

// Size-t subsets of [s] in lexicographic order, members 1-based.
class SubsetFamily {
 public:
  SubsetFamily(int s, int t) : s_(s), t_(t) {
    require(t >= 1 && t < s, Errc::kThresholdOutOfRange,
            "need 1 <= t < s, got t = " + std::to_string(t) + ", s = " + std::to_string(s));
    require(s <= 30, Errc::kThresholdOutOfRange, "at most 30 servers are supported");
    require(binomial(static_cast<std::uint64_t>(s), static_cast<std::uint64_t>(t)) <= kSubsetBudget,
            Errc::kThresholdOutOfRange, "C(s,t) exceeds 10^4");
    for_each_combination(static_cast<std::size_t>(s), static_cast<std::size_t>(t),
                         [&](std::span<const std::size_t> c) {
                           std::vector<int> members;
                           std::uint32_t mask = 0;
                           for (auto x : c) {
                             members.push_back(static_cast<int>(x) + 1);
                             mask |= 1u << (x + 1);
                           }
                           index_[mask] = subsets_.size();
                           subsets_.push_back(std::move(members));
                           masks_.push_back(mask);
                           return true;
                         });
  }

  int s() const { return s_; }
  int t() const { return t_; }
  std::size_t size() const { return subsets_.size(); }
  const std::vector<int>& members(std::size_t k) const { return subsets_[k]; }
  // Bit lambda set for each member lambda.
  std::uint32_t mask(std::size_t k) const { return masks_[k]; }
  bool contains(std::size_t k, int server) const { return (masks_[k] >> server) & 1u; }

  std::optional<std::size_t> index_of(std::span<const int> members) const {
    std::uint32_t mask = 0;
    for (int x : members) {
      if (x < 1 || x > s_) return std::nullopt;
      mask |= 1u << x;
    }
    if (static_cast<int>(members.size()) != t_) return std::nullopt;
    auto it = index_.find(mask);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

 private:
  int s_, t_;
  std::vector<std::vector<int>> subsets_;
  std::vector<std::uint32_t> masks_;
  std::map<std::uint32_t, std::size_t> index_;
};

struct Monomial {
  int instance;
  std::vector<std::size_t> subsets;  // position k -> subset index, k in [0, d)

  friend bool operator==(const Monomial&, const Monomial&) = default;
};

// Monomials of all instances under the ordered-tuple convention:
// id = instance * |T|^d + tuple, with position 0 the most significant digit,
// so ids run instance-major and then lexicographically over tuples.
class MonomialSpace {
 public:
  MonomialSpace(const SchemeParams& p, const SubsetFamily& family)
      : family_(&family), l_(p.l), d_(p.d),
        per_instance_(saturating_pow(family.size(), static_cast<std::uint64_t>(p.d))) {
    const std::uint64_t total = per_instance_ * static_cast<std::uint64_t>(l_);
    require(per_instance_ != UINT64_MAX && total <= kMonomialBudget, Errc::kEnumerationTooLarge,
            "l * C(s,t)^d exceeds 10^6");
    unions_.resize(per_instance_);
    tuples_.reserve(per_instance_ * static_cast<std::uint64_t>(d_));
    for (std::uint64_t tuple = 0; tuple < per_instance_; ++tuple) {
      std::uint32_t u = 0;
      for (auto k : decode_tuple(tuple)) {
        u |= family.mask(k);
        tuples_.push_back(k);
      }
      unions_[tuple] = u;
    }
  }

  std::uint64_t size() const { return per_instance_ * static_cast<std::uint64_t>(l_); }
  std::uint64_t per_instance() const { return per_instance_; }
  int degree() const { return d_; }
  const SubsetFamily& family() const { return *family_; }

  int instance(std::uint64_t id) const { return static_cast<int>(id / per_instance_); }
  std::uint64_t tuple(std::uint64_t id) const { return id % per_instance_; }

  std::vector<std::size_t> decode_tuple(std::uint64_t tuple) const {
    std::vector<std::size_t> out(static_cast<std::size_t>(d_));
    for (int k = d_ - 1; k >= 0; --k) {
      out[static_cast<std::size_t>(k)] = static_cast<std::size_t>(tuple % family_->size());
      tuple /= family_->size();
    }
    return out;
  }

  // Subset indices of a monomial, position 0 first.
  std::span<const std::size_t> subsets_of(std::uint64_t id) const {
    const auto d = static_cast<std::size_t>(d_);
    return {tuples_.data() + static_cast<std::size_t>(tuple(id)) * d, d};
  }

  Monomial decode(std::uint64_t id) const { return {instance(id), decode_tuple(tuple(id))}; }

  std::uint64_t encode(const Monomial& mono) const {
    require(mono.instance >= 0 && mono.instance < l_, Errc::kMalformedInput, "instance out of range");
    require(mono.subsets.size() == static_cast<std::size_t>(d_), Errc::kMalformedInput,
            "monomial has wrong degree");
    std::uint64_t tuple = 0;
    for (auto k : mono.subsets) {
      require(k < family_->size(), Errc::kMalformedInput, "subset index out of range");
      tuple = tuple * family_->size() + k;
    }
    return static_cast<std::uint64_t>(mono.instance) * per_instance_ + tuple;
  }

  // Servers appearing in some subset of the monomial, as a bitmask.
  std::uint32_t union_mask(std::uint64_t id) const { return unions_[tuple(id)]; }

  bool computable_by(std::uint64_t id, int server) const {
    return !((union_mask(id) >> server) & 1u);
  }

  // M_lambda in increasing id order.
  std::vector<std::uint64_t> computable(int server) const {
    std::vector<std::uint64_t> out;
    for (std::uint64_t id = 0; id < size(); ++id) {
      if (computable_by(id, server)) out.push_back(id);
    }
    return out;
  }

 private:
  const SubsetFamily* family_;
  int l_, d_;
  std::uint64_t per_instance_;
  std::vector<std::uint32_t> unions_;
  std::vector<std::size_t> tuples_;
};

struct EvalEntry {
  std::size_t r;          // output coordinate, 0-based
  std::uint64_t monomial;
  Elem coeff;

  friend bool operator==(const EvalEntry&, const EvalEntry&) = default;
};

// Nonzero coefficients e_{r, chi}, sorted by (r, monomial).
using EvalTable = std::vector<EvalEntry>;

// The dense system S e = g. Rows are (i, monomial) i-major; columns are
// (r, monomial) r-major with monomials of M_{L(r)} ascending.
struct EvalSystem {
  Matrix s;
  Vector g;
  std::vector<std::pair<int, std::uint64_t>> row_keys;
  std::vector<std::pair<std::size_t, std::uint64_t>> col_keys;
};

inline EvalSystem build_eval_system(const LabeledCode& code, const MonomialSpace& space) {
  const std::size_t l = code.dimension();
  const std::size_t n = code.length();
  const std::uint64_t mm = space.size();
  const Matrix& g = code.generator();
  std::vector<std::pair<std::size_t, std::uint64_t>> cols;
  for (std::size_t r = 0; r < n; ++r) {
    for (auto id : space.computable(code.labeling()[r])) cols.emplace_back(r, id);
  }
  EvalSystem sys{Matrix(code.field(), l * mm, cols.size()), Vector(l * mm, 0), {}, cols};
  sys.row_keys.reserve(l * mm);
  for (std::size_t i = 0; i < l; ++i) {
    for (std::uint64_t id = 0; id < mm; ++id) {
      sys.row_keys.emplace_back(static_cast<int>(i), id);
      if (static_cast<std::size_t>(space.instance(id)) == i) sys.g[i * mm + id] = 1;
    }
  }
  for (std::size_t c = 0; c < cols.size(); ++c) {
    const auto [r, id] = cols[c];
    for (std::size_t i = 0; i < l; ++i) sys.s(i * mm + id, c) = g(i, r);
  }
  return sys;
}

// Lays the table out as a vector in the column order of build_eval_system.
inline Vector eval_vector(const EvalSystem& sys, const EvalTable& table) {
  std::map<std::pair<std::size_t, std::uint64_t>, std::size_t> where;
  for (std::size_t c = 0; c < sys.col_keys.size(); ++c) where[sys.col_keys[c]] = c;
  Vector e(sys.col_keys.size(), 0);
  for (const auto& entry : table) {
    auto it = where.find({entry.r, entry.monomial});
    require(it != where.end(), Errc::kMalformedInput,
            "coefficient for a monomial the server cannot compute");
    e[it->second] = entry.coeff;
  }
  return e;
}

// S e = g decouples into one system per monomial chi:
//   G(Lambda_chi) e_chi = unit vector of chi's instance,
// where Lambda_chi is the set of servers able to compute chi. Each is solved
// canonically; the concatenation is the canonical solution of the full system.
inline EvalTable synthesize_eval(const LabeledCode& code, const MonomialSpace& space) {
  const std::size_t l = code.dimension();
  const std::size_t n = code.length();
  const Matrix& g = code.generator();
  std::map<std::pair<std::uint32_t, int>, std::vector<std::pair<std::size_t, Elem>>> cache;
  EvalTable table;
  for (std::uint64_t id = 0; id < space.size(); ++id) {
    const std::uint32_t blocked = space.union_mask(id);
    const int inst = space.instance(id);
    auto key = std::make_pair(blocked, inst);
    auto it = cache.find(key);
    if (it == cache.end()) {
      std::vector<std::size_t> cols;
      for (std::size_t r = 0; r < n; ++r) {
        if (!((blocked >> code.labeling()[r]) & 1u)) cols.push_back(r);
      }
      Vector rhs(l, 0);
      rhs[static_cast<std::size_t>(inst)] = 1;
      auto x = solve(g.select_columns(cols), rhs);
      require(x.has_value(), Errc::kSystemInfeasible,
              "no eval coefficients for instance " + std::to_string(inst) +
                  "; the code lacks the labelweight this degree needs");
      std::vector<std::pair<std::size_t, Elem>> nz;
      for (std::size_t c = 0; c < cols.size(); ++c) {
        if ((*x)[c] != 0) nz.emplace_back(cols[c], (*x)[c]);
      }
      it = cache.emplace(key, std::move(nz)).first;
    }
    for (const auto& [r, v] : it->second) table.push_back({r, id, v});
  }
  std::sort(table.begin(), table.end(), [](const EvalEntry& a, const EvalEntry& b) {
    return std::tie(a.r, a.monomial) < std::tie(b.r, b.monomial);
  });
  return table;
}

// Checks sum_r G[i,r] e_{r,chi} = [instance(chi) == i] for every (i, chi),
// which is S e = g computed without materializing S.
inline std::optional<std::pair<int, std::uint64_t>> first_identity_violation(
    const LabeledCode& code, const MonomialSpace& space, const EvalTable& table) {
  const FieldSpec& f = *code.field();
  const std::size_t l = code.dimension();
  const Matrix& g = code.generator();
  std::vector<Elem> acc(static_cast<std::size_t>(space.size()) * l, 0);
  for (const auto& e : table) {
    for (std::size_t i = 0; i < l; ++i) {
      auto& a = acc[static_cast<std::size_t>(e.monomial) * l + i];
      a = f.add(a, f.mul(g(i, e.r), e.coeff));
    }
  }
  for (std::size_t i = 0; i < l; ++i) {
    for (std::uint64_t id = 0; id < space.size(); ++id) {
      const Elem want = static_cast<std::size_t>(space.instance(id)) == i ? 1 : 0;
      if (acc[static_cast<std::size_t>(id) * l + i] != want) {
        return std::make_pair(static_cast<int>(i), id);
      }
    }
  }
  return std::nullopt;
}

class HssScheme {
 public:
  // Synthesizes Eval for the given code.
  static HssScheme synthesize(SchemeParams params, LabeledCode code) {
    HssScheme h(std::move(params), std::move(code));
    h.check_shape(true);
    h.table_ = synthesize_eval(h.code_, *h.space_);
    h.index_table();
    return h;
  }

  // Wraps an existing table. With validate, the code must have the optimal
  // shape and the table must satisfy the correctness identity.
  static HssScheme from_parts(SchemeParams params, LabeledCode code, EvalTable table,
                              bool validate = true) {
    HssScheme h(std::move(params), std::move(code));
    h.check_shape(validate);
    for (const auto& e : table) {
      require(e.r < h.code_.length(), Errc::kMalformedInput, "eval coordinate out of range");
      require(e.monomial < h.space_->size(), Errc::kMalformedInput, "monomial id out of range");
      require(h.code_.field()->contains(e.coeff), Errc::kMalformedInput, "coefficient not in field");
      require(h.space_->computable_by(e.monomial, h.code_.labeling()[e.r]), Errc::kMalformedInput,
              "coordinate " + std::to_string(e.r) + " uses a monomial its server cannot compute");
    }
    h.table_ = std::move(table);
    std::sort(h.table_.begin(), h.table_.end(), [](const EvalEntry& a, const EvalEntry& b) {
      return std::tie(a.r, a.monomial) < std::tie(b.r, b.monomial);
    });
    h.table_.erase(std::remove_if(h.table_.begin(), h.table_.end(),
                                  [](const EvalEntry& e) { return e.coeff == 0; }),
                   h.table_.end());
    if (validate) {
      require(!first_identity_violation(h.code_, *h.space_, h.table_).has_value(),
              Errc::kSystemInfeasible, "eval table does not satisfy S e = g");
    }
    h.index_table();
    return h;
  }

  HssScheme(const HssScheme& o)
      : params_(o.params_), code_(o.code_), family_(o.family_), table_(o.table_),
        by_coord_(o.by_coord_) {
    space_.emplace(params_, family_);
  }
  HssScheme& operator=(const HssScheme& o) {
    if (this != &o) {
      params_ = o.params_;
      code_ = o.code_;
      family_ = o.family_;
      table_ = o.table_;
      by_coord_ = o.by_coord_;
      space_.emplace(params_, family_);
    }
    return *this;
  }
  HssScheme(HssScheme&& o) : HssScheme(static_cast<const HssScheme&>(o)) {}

  const SchemeParams& params() const { return params_; }
  const LabeledCode& code() const { return code_; }
  const FieldPtr& field() const { return params_.field; }
  const SubsetFamily& family() const { return family_; }
  const MonomialSpace& monomials() const { return *space_; }
  const EvalTable& eval_table() const { return table_; }

  // Entries of coordinate r.
  std::span<const EvalEntry> coordinate_terms(std::size_t r) const {
    return {table_.data() + by_coord_[r], table_.data() + by_coord_[r + 1]};
  }

  // Coordinates owned by a server, ascending.
  std::vector<std::size_t> coordinates_of(int server) const {
    std::vector<std::size_t> out;
    for (std::size_t r = 0; r < code_.length(); ++r) {
      if (code_.labeling()[r] == server) out.push_back(r);
    }
    return out;
  }

 private:
  HssScheme(SchemeParams params, LabeledCode code)
      : params_(std::move(params)), code_(std::move(code)), family_(params_.s, params_.t) {
    space_.emplace(params_, family_);
  }

  void check_shape(bool strict) const {
    require(same_field(code_.field(), params_.field), Errc::kFieldMismatch,
            "code field differs from scheme field");
    require(code_.servers() == params_.s, Errc::kDimensionMismatch, "code labels != s");
    require(code_.dimension() == static_cast<std::size_t>(params_.l), Errc::kDimensionMismatch,
            "code dimension != l");
    require(params_.m >= params_.d, Errc::kInfeasibleParams, "need m >= d");
    if (strict) {
      require(params_.s - params_.dt() > 0, Errc::kInfeasibleParams, "need s - dt > 0");
      require(params_.l == params_.j * (params_.s - params_.dt()), Errc::kInfeasibleParams,
              "need l = j(s - dt)");
      require(code_.length() == static_cast<std::size_t>(params_.n()), Errc::kDimensionMismatch,
              "code length != js");
    }
  }

  void index_table() {
    by_coord_.assign(code_.length() + 1, 0);
    for (const auto& e : table_) ++by_coord_[e.r + 1];
    for (std::size_t r = 0; r < code_.length(); ++r) by_coord_[r + 1] += by_coord_[r];
  }

  SchemeParams params_;
  LabeledCode code_;
  SubsetFamily family_;
  std::optional<MonomialSpace> space_;
  EvalTable table_;
  std::vector<std::size_t> by_coord_;
};

// Builds the explicit optimal-rate code and synthesizes Eval for it.
inline HssScheme construct_scheme(std::uint64_t q, int s, int t, int d, int m,
                                  std::optional<int> j = std::nullopt) {
  require(t >= 1 && t < s, Errc::kThresholdOutOfRange, "need 1 <= t < s");
  auto oc = optimal_code(q, s, d, t, j);
  auto params = SchemeParams::make(oc.code.field(), s, t, d, m, oc.j);
  return HssScheme::synthesize(std::move(params), std::move(oc.code));
}

// --- Sharing ---------------------------------------------------------------

// CNF sharing with explicit randomness: the first |T|-1 values are taken from
// randomness and the last one completes the sum.
inline Vector cnf_share_from_randomness(const FieldSpec& f, Elem x, std::span<const Elem> randomness,
                                        std::size_t subsets) {
  require(randomness.size() + 1 == subsets, Errc::kLengthMismatch, "need |T| - 1 random values");
  Vector y(subsets, 0);
  Elem sum = 0;
  for (std::size_t k = 0; k + 1 < subsets; ++k) {
    y[k] = randomness[k];
    sum = f.add(sum, y[k]);
  }
  y[subsets - 1] = f.sub(x, sum);
  return y;
}

inline Vector cnf_share(const FieldSpec& f, Elem x, const SubsetFamily& family, CounterRng& rng) {
  require(f.contains(x), Errc::kFieldMismatch, "secret is not a field element");
  Vector randomness(family.size() - 1);
  for (auto& v : randomness) v = rng.uniform(f);
  return cnf_share_from_randomness(f, x, randomness, family.size());
}

// One value per subset index, lexicographic subset order.
inline Vector cnf_share(const FieldElem& x, int t, int s, CounterRng& rng) {
  SubsetFamily family(s, t);
  return cnf_share(*x.field(), x.value(), family, rng);
}

// The (subset index, value) pairs server lambda receives.
inline std::vector<std::pair<std::size_t, Elem>> cnf_view(const SubsetFamily& family,
                                                          std::span<const Elem> y, int server) {
  std::vector<std::pair<std::size_t, Elem>> out;
  for (std::size_t k = 0; k < family.size(); ++k) {
    if (!family.contains(k, server)) out.emplace_back(k, y[k]);
  }
  return out;
}

// Shares y^{(i)}_{k,T} for every instance i, secret k (dummy included) and T.
class ShareBundle {
 public:
  ShareBundle(int l, int secrets, std::size_t subsets)
      : l_(l), secrets_(secrets), subsets_(subsets),
        values_(static_cast<std::size_t>(l) * static_cast<std::size_t>(secrets) * subsets, 0) {}

  int instances() const { return l_; }
  int secrets() const { return secrets_; }
  std::size_t subsets() const { return subsets_; }

  Elem& at(int i, int k, std::size_t T) { return values_[offset(i, k, T)]; }
  Elem at(int i, int k, std::size_t T) const { return values_[offset(i, k, T)]; }

 private:
  std::size_t offset(int i, int k, std::size_t T) const {
    return (static_cast<std::size_t>(i) * static_cast<std::size_t>(secrets_) +
            static_cast<std::size_t>(k)) * subsets_ + T;
  }
  int l_, secrets_;
  std::size_t subsets_;
  Vector values_;
};

// What one server holds. Entries for subsets containing the server are absent.
class ServerShares {
 public:
  ServerShares(int server, int l, int secrets, std::size_t subsets)
      : server_(server), bundle_(l, secrets, subsets),
        present_(static_cast<std::size_t>(l) * static_cast<std::size_t>(secrets) * subsets, false) {}

  static ServerShares view(const ShareBundle& b, const SubsetFamily& family, int server) {
    ServerShares v(server, b.instances(), b.secrets(), b.subsets());
    for (int i = 0; i < b.instances(); ++i) {
      for (int k = 0; k < b.secrets(); ++k) {
        for (std::size_t T = 0; T < b.subsets(); ++T) {
          if (!family.contains(T, server)) v.set(i, k, T, b.at(i, k, T));
        }
      }
    }
    return v;
  }

  int server() const { return server_; }
  int instances() const { return bundle_.instances(); }
  int secrets() const { return bundle_.secrets(); }
  std::size_t subsets() const { return bundle_.subsets(); }

  void set(int i, int k, std::size_t T, Elem v) {
    bundle_.at(i, k, T) = v;
    present_[index(i, k, T)] = true;
  }
  bool has(int i, int k, std::size_t T) const { return present_[index(i, k, T)]; }

  Elem get(int i, int k, std::size_t T) const {
    require(has(i, k, T), Errc::kMissingShares,
            "server " + std::to_string(server_) + " lacks share (instance " + std::to_string(i) +
                ", secret " + std::to_string(k) + ", subset " + std::to_string(T) + ")");
    return bundle_.at(i, k, T);
  }

 private:
  std::size_t index(int i, int k, std::size_t T) const {
    require(i >= 0 && i < instances() && k >= 0 && k < secrets() && T < subsets(),
            Errc::kMalformedInput, "share index out of range");
    return (static_cast<std::size_t>(i) * static_cast<std::size_t>(secrets()) +
            static_cast<std::size_t>(k)) * subsets() + T;
  }
  int server_;
  ShareBundle bundle_;
  std::vector<bool> present_;
};

// secrets[i][k] for instance i < l and k < m. Stream i*(m+1)+k of the seed
// shares secret k of instance i; the dummy (k = m) is shared with value 1.
inline ShareBundle share_secrets(const HssScheme& scheme, const std::vector<Vector>& secrets,
                                 std::uint64_t seed) {
  const auto& p = scheme.params();
  require(secrets.size() == static_cast<std::size_t>(p.l), Errc::kLengthMismatch,
          "expected " + std::to_string(p.l) + " secret vectors");
  ShareBundle b(p.l, p.shared_secrets(), scheme.family().size());
  for (int i = 0; i < p.l; ++i) {
    require(secrets[static_cast<std::size_t>(i)].size() == static_cast<std::size_t>(p.m),
            Errc::kLengthMismatch, "each instance needs m secrets");
    for (int k = 0; k < p.shared_secrets(); ++k) {
      const Elem x = k == p.dummy_index() ? 1 : secrets[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)];
      CounterRng rng(seed, static_cast<std::uint64_t>(i * p.shared_secrets() + k));
      const Vector y = cnf_share(*p.field, x, scheme.family(), rng);
      for (std::size_t T = 0; T < y.size(); ++T) b.at(i, k, T) = y[T];
    }
  }
  return b;
}

// --- Evaluation ------------------------------------------------------------

// Which secrets fill the d factor positions of an instance's product, and a
// scalar applied to position 0.
struct Target {
  std::vector<int> secrets;
  Elem coeff = 1;
};

inline std::vector<Target> default_targets(const SchemeParams& p) {
  Target t;
  for (int k = 0; k < p.d; ++k) t.secrets.push_back(k);
  return std::vector<Target>(static_cast<std::size_t>(p.l), t);
}

inline Vector eval_shares(const HssScheme& scheme, int server, const ServerShares& shares,
                          const std::vector<Target>& targets) {
  const auto& p = scheme.params();
  const FieldSpec& f = *p.field;
  require(server >= 1 && server <= p.s, Errc::kWrongServer, "server out of range");
  require(shares.server() == server, Errc::kWrongServer,
          "shares belong to server " + std::to_string(shares.server()) + ", not " +
              std::to_string(server));
  require(shares.instances() == p.l && shares.secrets() == p.shared_secrets() &&
              shares.subsets() == scheme.family().size(),
          Errc::kMalformedInput, "share layout does not match the scheme");
  require(targets.size() == static_cast<std::size_t>(p.l), Errc::kLengthMismatch,
          "need one target per instance");
  for (const auto& t : targets) {
    require(t.secrets.size() == static_cast<std::size_t>(p.d), Errc::kDegreeTooHigh,
            "target must fill exactly d positions");
    for (int k : t.secrets) {
      require(k >= 0 && k < p.shared_secrets(), Errc::kMalformedInput, "secret index out of range");
    }
    require(f.contains(t.coeff), Errc::kMalformedInput, "coefficient not in field");
  }
  const MonomialSpace& space = scheme.monomials();
  Vector z;
  for (auto r : scheme.coordinates_of(server)) {
    Elem acc = 0;
    for (const auto& e : scheme.coordinate_terms(r)) {
      const int inst = space.instance(e.monomial);
      const Target& tg = targets[static_cast<std::size_t>(inst)];
      const auto tuple = space.subsets_of(e.monomial);
      Elem prod = f.mul(e.coeff, tg.coeff);
      for (std::size_t k = 0; k < tuple.size() && prod != 0; ++k) {
        prod = f.mul(prod, shares.get(inst, tg.secrets[k], tuple[k]));
      }
      acc = f.add(acc, prod);
    }
    z.push_back(acc);
  }
  return z;
}

inline Vector eval_shares(const HssScheme& scheme, int server, const ServerShares& shares) {
  return eval_shares(scheme, server, shares, default_targets(scheme.params()));
}

// coeff * product of variables; vars holds 0-based secret indices, repeated
// for powers.
struct Term {
  Elem coeff = 1;
  std::vector<int> vars;
};

using Polynomial = std::vector<Term>;

inline int degree(const Polynomial& poly) {
  int d = 0;
  for (const auto& t : poly) {
    if (t.coeff != 0) d = std::max(d, static_cast<int>(t.vars.size()));
  }
  return d;
}

// Evaluates one polynomial per instance by splitting each into monomials,
// padding short monomials with the dummy secret and summing the output shares
// of one product evaluation per round.
inline Vector eval_general(const HssScheme& scheme, int server, const ServerShares& shares,
                           const std::vector<Polynomial>& polys) {
  const auto& p = scheme.params();
  const FieldSpec& f = *p.field;
  require(polys.size() == static_cast<std::size_t>(p.l), Errc::kLengthMismatch,
          "need one polynomial per instance");
  std::size_t rounds = 0;
  for (const auto& poly : polys) {
    for (const auto& term : poly) {
      require(static_cast<int>(term.vars.size()) <= p.d, Errc::kDegreeTooHigh,
              "term of degree " + std::to_string(term.vars.size()) + " exceeds d = " +
                  std::to_string(p.d));
      require(f.contains(term.coeff), Errc::kMalformedInput, "coefficient not in field");
      for (int v : term.vars) {
        require(v >= 0 && v < p.m, Errc::kMalformedInput,
                "variable index " + std::to_string(v) + " outside [0, m)");
      }
    }
    rounds = std::max(rounds, poly.size());
  }
  Vector z(scheme.coordinates_of(server).size(), 0);
  for (std::size_t round = 0; round < rounds; ++round) {
    std::vector<Target> targets;
    for (const auto& poly : polys) {
      Target tg;
      if (round < poly.size()) {
        tg.coeff = poly[round].coeff;
        tg.secrets = poly[round].vars;
      } else {
        tg.coeff = 0;
      }
      tg.secrets.resize(static_cast<std::size_t>(p.d), p.dummy_index());
      targets.push_back(std::move(tg));
    }
    const Vector part = eval_shares(scheme, server, shares, targets);
    for (std::size_t k = 0; k < z.size(); ++k) z[k] = f.add(z[k], part[k]);
  }
  return z;
}

// Concatenates per-server outputs (index lambda-1) into coordinate order.
inline Vector assemble_outputs(const HssScheme& scheme, const std::vector<Vector>& per_server) {
  const auto& p = scheme.params();
  require(per_server.size() == static_cast<std::size_t>(p.s), Errc::kMissingShares,
          "need output shares from all " + std::to_string(p.s) + " servers");
  Vector z(scheme.code().length(), 0);
  for (int lambda = 1; lambda <= p.s; ++lambda) {
    const auto coords = scheme.coordinates_of(lambda);
    const auto& zl = per_server[static_cast<std::size_t>(lambda - 1)];
    require(zl.size() == coords.size(), Errc::kLengthMismatch,
            "server " + std::to_string(lambda) + " sent " + std::to_string(zl.size()) +
                " symbols, expected " + std::to_string(coords.size()));
    for (std::size_t k = 0; k < coords.size(); ++k) z[coords[k]] = zl[k];
  }
  return z;
}

inline Vector reconstruct(const HssScheme& scheme, std::span<const Elem> z) {
  require(z.size() == scheme.code().length(), Errc::kLengthMismatch,
          "output vector has " + std::to_string(z.size()) + " symbols, expected " +
              std::to_string(scheme.code().length()));
  return scheme.code().generator().apply(z);
}

inline Elem evaluate(const FieldSpec& f, const Polynomial& poly, std::span<const Elem> x) {
  Elem acc = 0;
  for (const auto& term : poly) {
    Elem v = term.coeff;
    for (int k : term.vars) v = f.mul(v, x[static_cast<std::size_t>(k)]);
    acc = f.add(acc, v);
  }
  return acc;
}

struct DownloadCost {
  std::size_t symbols;
  double bits;
};

inline DownloadCost download_cost(const HssScheme& scheme) {
  const auto n = scheme.code().length();
  return {n, static_cast<double>(n) * std::log2(static_cast<double>(scheme.field()->order()))};
}

}  // namespace lwhss

#endif  // LWHSS_HSS_HPP_
