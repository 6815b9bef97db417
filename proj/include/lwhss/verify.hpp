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

// Checks that do not trust the constructor: brute-force correctness, exact
// privacy, code extraction and the small searches behind the lower bounds.

#ifndef LWHSS_VERIFY_HPP_
#define LWHSS_VERIFY_HPP_

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "lwhss/codes.hpp"
#include "lwhss/combinatorics.hpp"
#include "lwhss/error.hpp"
#include "lwhss/field.hpp"
#include "lwhss/hss.hpp"
#include "lwhss/linalg.hpp"
#include "lwhss/rng.hpp"

namespace lwhss {

inline constexpr int kMaxExhaustiveVariables = 20;
inline constexpr std::uint64_t kExhaustiveAssignments = std::uint64_t{1} << 24;
inline constexpr std::uint64_t kPrivacyRandomness = std::uint64_t{1} << 16;
inline constexpr std::uint64_t kSearchBudget = 10'000'000;
inline constexpr std::uint64_t kGlBudget = 10'000;

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string witness;  // counterexample on failure, extremal object otherwise
  std::uint64_t work = 0;
};

struct VerificationReport {
  std::vector<CheckResult> checks;

  bool passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
  }

  void add(CheckResult c) { checks.push_back(std::move(c)); }

  std::string table() const {
    std::size_t width = 5;
    for (const auto& c : checks) width = std::max(width, c.name.size());
    std::ostringstream os;
    for (const auto& c : checks) {
      os << (c.passed ? "PASS  " : "FAIL  ") << c.name << std::string(width - c.name.size() + 2, ' ')
         << "work=" << c.work;
      if (!c.witness.empty()) os << "  " << c.witness;
      os << '\n';
    }
    return os.str();
  }
};

namespace detail {

inline std::string join(std::span<const Elem> v) {
  std::string out = "(";
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (k) out += ",";
    out += std::to_string(v[k]);
  }
  return out + ")";
}

inline std::string join_ints(std::span<const int> v) {
  std::string out = "{";
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (k) out += ",";
    out += std::to_string(v[k]);
  }
  return out + "}";
}

// Runs every server on a bundle and reconstructs.
inline Vector run_protocol(const HssScheme& scheme, const ShareBundle& bundle,
                           const std::vector<Target>& targets) {
  std::vector<Vector> outs;
  for (int lambda = 1; lambda <= scheme.params().s; ++lambda) {
    outs.push_back(eval_shares(scheme, lambda, ServerShares::view(bundle, scheme.family(), lambda),
                               targets));
  }
  const Vector z = assemble_outputs(scheme, outs);
  return reconstruct(scheme, z);
}

// A fixed valid sharing of 1 for the dummy slot.
inline void fill_dummy(ShareBundle& b, const SchemeParams& p) {
  for (int i = 0; i < p.l; ++i) {
    for (std::size_t T = 0; T < b.subsets(); ++T) b.at(i, p.dummy_index(), T) = T == 0 ? 1 : 0;
  }
}

// Secret k of instance i is the sum of its shares.
inline Elem share_sum(const FieldSpec& f, const ShareBundle& b, int i, int k) {
  Elem x = 0;
  for (std::size_t T = 0; T < b.subsets(); ++T) x = f.add(x, b.at(i, k, T));
  return x;
}

}  // namespace detail

struct CorrectnessMode {
  bool exhaustive = true;
  std::uint64_t trials = 0;
  std::uint64_t seed = 0;
  unsigned threads = 1;

  static CorrectnessMode Exhaustive() { return {}; }
  static CorrectnessMode Sampled(std::uint64_t trials, std::uint64_t seed, unsigned threads = 1) {
    return {false, trials, seed, threads};
  }
};

// End-to-end check of Rec(Eval(y)) = prod of secrets 0..d-1 per instance.
// Exhaustive mode treats the shares of secrets 0..d-1 as free variables.
inline CheckResult check_correctness(const HssScheme& scheme, CorrectnessMode mode) {
  const auto& p = scheme.params();
  const FieldSpec& f = *p.field;
  const auto targets = default_targets(p);
  const std::size_t nt = scheme.family().size();

  auto expected = [&](const ShareBundle& b) {
    Vector want(static_cast<std::size_t>(p.l));
    for (int i = 0; i < p.l; ++i) {
      Elem v = 1;
      for (int k = 0; k < p.d; ++k) v = f.mul(v, detail::share_sum(f, b, i, k));
      want[static_cast<std::size_t>(i)] = v;
    }
    return want;
  };

  CheckResult res{mode.exhaustive ? "correctness (exhaustive)" : "correctness (sampled)", true, "", 0};
  if (mode.exhaustive) {
    const std::uint64_t vars = static_cast<std::uint64_t>(p.l) * static_cast<std::uint64_t>(p.d) * nt;
    const std::uint64_t total = saturating_pow(f.order(), vars);
    require(vars <= kMaxExhaustiveVariables && total <= kExhaustiveAssignments,
            Errc::kTooLargeForExhaustive,
            std::to_string(vars) + " share variables exceed the exhaustive limit of 20");
    ShareBundle b(p.l, p.shared_secrets(), nt);
    detail::fill_dummy(b, p);
    Vector digits(vars, 0);
    for (std::uint64_t a = 0; a < total; ++a) {
      std::uint64_t rest = a;
      std::size_t v = 0;
      for (int i = 0; i < p.l; ++i) {
        for (int k = 0; k < p.d; ++k) {
          for (std::size_t T = 0; T < nt; ++T, ++v) {
            digits[v] = static_cast<Elem>(rest % f.order());
            rest /= f.order();
            b.at(i, k, T) = digits[v];
          }
        }
      }
      ++res.work;
      const Vector got = detail::run_protocol(scheme, b, targets);
      const Vector want = expected(b);
      if (got != want) {
        res.passed = false;
        res.witness = "shares=" + detail::join(digits) + " got=" + detail::join(got) +
                      " want=" + detail::join(want);
        return res;
      }
    }
    return res;
  }

  // Sampled: trial k draws secrets and sharing randomness from stream k.
  const unsigned threads = std::max(1u, mode.threads);
  std::vector<std::optional<std::pair<std::uint64_t, std::string>>> failures(threads);
  auto worker = [&](unsigned w) {
    for (std::uint64_t k = w; k < mode.trials; k += threads) {
      CounterRng rng(mode.seed, k);
      std::vector<Vector> secrets(static_cast<std::size_t>(p.l), Vector(static_cast<std::size_t>(p.m)));
      for (auto& row : secrets) {
        for (auto& x : row) x = rng.uniform(f);
      }
      const ShareBundle b = share_secrets(scheme, secrets, rng.next());
      const Vector got = detail::run_protocol(scheme, b, targets);
      const Vector want = expected(b);
      if (got != want) {
        failures[w] = {k, "trial=" + std::to_string(k) + " got=" + detail::join(got) +
                              " want=" + detail::join(want)};
        return;
      }
    }
  };
  if (threads == 1) {
    worker(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < threads; ++w) pool.emplace_back(worker, w);
    for (auto& th : pool) th.join();
  }
  res.work = mode.trials;
  std::optional<std::pair<std::uint64_t, std::string>> first;
  for (auto& fl : failures) {
    if (fl && (!first || fl->first < first->first)) first = fl;
  }
  if (first) {
    res.passed = false;
    res.witness = first->second;
  }
  return res;
}

// Rec o Eval minus the target product, expanded over share variables, is the
// zero polynomial.
inline CheckResult check_polynomial_identity(const HssScheme& scheme) {
  CheckResult res{"polynomial identity", true, "", scheme.monomials().size() * scheme.code().dimension()};
  if (auto bad = first_identity_violation(scheme.code(), scheme.monomials(), scheme.eval_table())) {
    res.passed = false;
    const Monomial mono = scheme.monomials().decode(bad->second);
    std::vector<int> subsets(mono.subsets.begin(), mono.subsets.end());
    res.witness = "instance=" + std::to_string(bad->first) + " monomial=(instance " +
                  std::to_string(mono.instance) + ", subsets " + detail::join_ints(subsets) + ")";
  }
  return res;
}

// A share function maps (secret, randomness) to one value per subset.
using ShareFunction = std::function<Vector(Elem, std::span<const Elem>)>;

inline ShareFunction cnf_share_function(const FieldPtr& field, const SubsetFamily& family) {
  const std::size_t nt = family.size();
  return [field, nt](Elem x, std::span<const Elem> rand) {
    return cnf_share_from_randomness(*field, x, rand, nt);
  };
}

// For every coalition of t servers, the multiset of its joint views over all
// randomness must not depend on the secret.
inline CheckResult check_privacy(const FieldPtr& field, const SubsetFamily& family,
                                 const ShareFunction& share) {
  const FieldSpec& f = *field;
  const std::size_t nt = family.size();
  const std::uint64_t rand_count = saturating_pow(f.order(), nt - 1);
  require(rand_count <= kPrivacyRandomness, Errc::kTooLargeForExhaustive,
          "randomness space exceeds 2^16");
  CheckResult res{"privacy (exhaustive)", true, "", 0};
  // Coalition views, indexed by coalition then secret.
  std::vector<std::vector<std::map<Vector, std::uint64_t>>> views(
      nt, std::vector<std::map<Vector, std::uint64_t>>(f.order()));
  Vector rand(nt - 1, 0);
  for (Elem x = 0; x < f.order(); ++x) {
    for (std::uint64_t a = 0; a < rand_count; ++a) {
      std::uint64_t rest = a;
      for (auto& r : rand) {
        r = static_cast<Elem>(rest % f.order());
        rest /= f.order();
      }
      const Vector y = share(x, rand);
      ++res.work;
      for (std::size_t c = 0; c < nt; ++c) {
        // The coalition c sees every y_U with U != c.
        Vector view;
        for (std::size_t u = 0; u < nt; ++u) {
          if (u != c) view.push_back(y[u]);
        }
        ++views[c][x][view];
      }
    }
  }
  for (std::size_t c = 0; c < nt; ++c) {
    for (Elem x = 1; x < f.order(); ++x) {
      if (views[c][x] == views[c][0]) continue;
      res.passed = false;
      // A view whose count differs between the two secrets.
      Vector tuple;
      for (const auto& [v, cnt] : views[c][0]) {
        auto it = views[c][x].find(v);
        if (it == views[c][x].end() || it->second != cnt) {
          tuple = v;
          break;
        }
      }
      if (tuple.empty()) {
        for (const auto& [v, cnt] : views[c][x]) {
          if (!views[c][0].count(v)) {
            tuple = v;
            break;
          }
        }
      }
      res.witness = "T=" + detail::join_ints(family.members(c)) + " x=0 x'=" + std::to_string(x) +
                    " view=" + detail::join(tuple);
      return res;
    }
  }
  res.witness = std::to_string(nt) + " coalitions";
  return res;
}

inline CheckResult check_privacy(const HssScheme& scheme) {
  return check_privacy(scheme.field(), scheme.family(),
                       cnf_share_function(scheme.field(), scheme.family()));
}

struct Rate {
  std::uint64_t num;
  std::uint64_t den;

  friend bool operator==(const Rate& a, const Rate& b) { return a.num * b.den == b.num * a.den; }
  std::string str() const {
    const auto g = std::gcd(num, den);
    return std::to_string(num / g) + "/" + std::to_string(den / g);
  }
};

struct ExtractedCode {
  LabeledCode code;
  Rate rate;
  int labelweight;
};

// The reconstruction matrix with the server labeling of its columns.
inline ExtractedCode extract_code(const HssScheme& scheme) {
  const LabeledCode& c = scheme.code();
  return {c, {c.dimension(), c.length()}, labelweight_code(c)};
}

inline Rate optimal_rate(const SchemeParams& p) {
  return {static_cast<std::uint64_t>(p.s - p.dt()), static_cast<std::uint64_t>(p.s)};
}

inline CheckResult check_rate(const HssScheme& scheme) {
  const auto& c = scheme.code();
  const Rate got{c.dimension(), c.length()};
  const Rate want = optimal_rate(scheme.params());
  return {"download rate", got == want, "rate=" + got.str() + " optimal=" + want.str(), 1};
}

// Every nonzero codeword touches at least dt+1 servers.
inline CheckResult check_query_spread(const HssScheme& scheme) {
  const auto lw = min_labelweight(scheme.code());
  const int need = scheme.params().dt() + 1;
  CheckResult res{"query spread", lw.labelweight >= need, "", lw.codewords};
  res.witness = "labelweight=" + std::to_string(lw.labelweight) + " need=" + std::to_string(need);
  if (!res.passed) res.witness += " codeword=" + detail::join(lw.codeword);
  return res;
}

inline CheckResult check_full_rank(const HssScheme& scheme) {
  const auto sys = build_eval_system(scheme.code(), scheme.monomials());
  const std::size_t rk = rank(sys.s);
  return {"S full row rank", rk == sys.s.rows(),
          "rank=" + std::to_string(rk) + " rows=" + std::to_string(sys.s.rows()), sys.s.rows()};
}

inline VerificationReport verify_scheme(const HssScheme& scheme, CorrectnessMode mode,
                                        bool include_rank = true) {
  VerificationReport rep;
  rep.add(check_polynomial_identity(scheme));
  rep.add(check_correctness(scheme, mode));
  rep.add(check_privacy(scheme));
  rep.add(check_rate(scheme));
  rep.add(check_query_spread(scheme));
  if (include_rank) rep.add(check_full_rank(scheme));
  return rep;
}

enum class Admissibility { kAdmissible, kInadmissible, kUnknown };

inline std::string_view admissibility_name(Admissibility a) {
  switch (a) {
    case Admissibility::kAdmissible: return "admissible";
    case Admissibility::kInadmissible: return "inadmissible";
    case Admissibility::kUnknown: return "unknown";
  }
  return "?";
}

struct AmortizationVerdict {
  Admissibility verdict;
  int j;  // 0 when l is not a multiple of s - dt
  std::string reason;
};

inline AmortizationVerdict check_amortization_bound(std::uint64_t q, int s, int d, int t, int l) {
  const int r = s - d * t;
  require(r > 0, Errc::kInfeasibleParams, "need s - dt > 0");
  if (l <= 0 || l % r != 0) {
    return {Admissibility::kInadmissible, 0,
            "l = " + std::to_string(l) + " is not a positive multiple of s - dt = " + std::to_string(r)};
  }
  const int j = l / r;
  const int lower = j_lower_bound(q, s, d, t);
  if (j < lower) {
    return {Admissibility::kInadmissible, j,
            "j = " + std::to_string(j) + " is below the lower bound " + std::to_string(lower)};
  }
  if (construction_admits(q, s, d * t, j)) {
    return {Admissibility::kAdmissible, j, "explicit construction exists"};
  }
  return {Admissibility::kUnknown, j, "between the lower bound and the construction"};
}

// All invertible j x j matrices over GF(q), identity first, then the others in
// increasing order of their row-major base-q encoding.
inline std::vector<Matrix> general_linear_group(const FieldPtr& field, int j) {
  const auto jj = static_cast<std::size_t>(j);
  const std::uint64_t total = saturating_pow(field->order(), jj * jj);
  require(total <= FieldSpec::kMaxOrder, Errc::kSearchTooLarge, "q^(j^2) exceeds 2^16");
  const Matrix id = Matrix::identity(field, jj);
  std::vector<Matrix> out{id};
  for (std::uint64_t code = 0; code < total; ++code) {
    Matrix m(field, jj, jj);
    std::uint64_t rest = code;
    for (std::size_t x = 0; x < jj; ++x) {
      for (std::size_t y = 0; y < jj; ++y) {
        m(x, y) = static_cast<Elem>(rest % field->order());
        rest /= field->order();
      }
    }
    if (m == id || !is_nonsingular(m)) continue;
    out.push_back(std::move(m));
  }
  return out;
}

struct BlockTnSearch {
  bool exists;
  std::optional<BlockMatrix> witness;
  std::uint64_t nodes;  // partial assignments examined
};

// Exhaustive search for an r x u block-TN array of j x j blocks over GF(q).
// Block-row and block-column operations preserve block-TN, so the first block
// row and column can be taken to be identities.
inline BlockTnSearch search_block_tn(std::uint64_t q, int j, int r, int u) {
  require(r >= 1 && u >= 1 && j >= 1, Errc::kSearchTooLarge, "need r, u, j >= 1");
  auto field = FieldSpec::of_order(q);
  const auto gl = general_linear_group(field, j);
  const auto cells = static_cast<std::uint64_t>((r - 1) * (u - 1));
  require(saturating_pow(gl.size(), cells) <= kSearchBudget, Errc::kSearchTooLarge,
          "|GL|^((r-1)(u-1)) exceeds 10^7");
  const auto R = static_cast<std::size_t>(r), U = static_cast<std::size_t>(u);
  const auto jj = static_cast<std::size_t>(j);
  std::vector<std::size_t> choice(R * U, 0);  // index into gl, 0 = identity

  auto assembled_ok = [&](std::span<const std::size_t> rows, std::span<const std::size_t> cols) {
    Matrix m(field, jj * rows.size(), jj * cols.size());
    for (std::size_t a = 0; a < rows.size(); ++a) {
      for (std::size_t b = 0; b < cols.size(); ++b) {
        const Matrix& blk = gl[choice[rows[a] * U + cols[b]]];
        for (std::size_t x = 0; x < jj; ++x) {
          for (std::size_t y = 0; y < jj; ++y) m(a * jj + x, b * jj + y) = blk(x, y);
        }
      }
    }
    return is_nonsingular(m);
  };

  // Every square sub-array whose last row is i and last column is k.
  auto cell_ok = [&](std::size_t i, std::size_t k) {
    for (std::size_t size = 2; size <= std::min(i, k) + 1; ++size) {
      const bool ok = for_each_combination(i, size - 1, [&](std::span<const std::size_t> rs) {
        std::vector<std::size_t> rows(rs.begin(), rs.end());
        rows.push_back(i);
        return for_each_combination(k, size - 1, [&](std::span<const std::size_t> cs) {
          std::vector<std::size_t> cols(cs.begin(), cs.end());
          cols.push_back(k);
          return assembled_ok(rows, cols);
        });
      });
      if (!ok) return false;
    }
    return true;
  };

  std::vector<std::pair<std::size_t, std::size_t>> order;
  for (std::size_t i = 1; i < R; ++i) {
    for (std::size_t k = 1; k < U; ++k) order.emplace_back(i, k);
  }
  std::uint64_t nodes = 0;
  std::function<bool(std::size_t)> dfs = [&](std::size_t pos) {
    if (pos == order.size()) return true;
    const auto [i, k] = order[pos];
    for (std::size_t g = 0; g < gl.size(); ++g) {
      choice[i * U + k] = g;
      ++nodes;
      if (cell_ok(i, k) && dfs(pos + 1)) return true;
    }
    choice[i * U + k] = 0;
    return false;
  };
  if (!dfs(0)) return {false, std::nullopt, nodes};
  std::vector<Matrix> blocks;
  for (auto c : choice) blocks.push_back(gl[c]);
  return {true, BlockMatrix(field, j, r, u, std::move(blocks)), nodes};
}

struct DifferenceSet {
  std::size_t size;
  std::vector<Matrix> witness;
  std::uint64_t nodes;
};

// Largest W in GL(q, j) with A - B invertible for all distinct A, B in W, by
// branch and bound over the compatibility graph. Right multiplication by an
// invertible matrix preserves the property, so the identity is placed first
// and the search finds a maximum set containing it when one exists.
inline DifferenceSet max_difference_invertible_set(std::uint64_t q, int j) {
  auto field = FieldSpec::of_order(q);
  const auto gl = general_linear_group(field, j);
  require(gl.size() <= kGlBudget, Errc::kSearchTooLarge, "|GL| exceeds 10^4");
  const std::size_t n = gl.size();
  std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      adj[a][b] = adj[b][a] = is_nonsingular(gl[a] - gl[b]);
    }
  }
  std::vector<std::size_t> best, current;
  std::uint64_t nodes = 0;
  std::function<void(std::vector<std::size_t>&)> expand = [&](std::vector<std::size_t>& cand) {
    ++nodes;
    if (current.size() > best.size()) best = current;
    while (!cand.empty()) {
      if (current.size() + cand.size() <= best.size()) return;
      const std::size_t v = cand.front();
      cand.erase(cand.begin());
      std::vector<std::size_t> next;
      for (auto w : cand) {
        if (adj[v][w]) next.push_back(w);
      }
      current.push_back(v);
      expand(next);
      current.pop_back();
    }
  };
  std::vector<std::size_t> all(n);
  std::iota(all.begin(), all.end(), std::size_t{0});
  expand(all);
  std::vector<Matrix> witness;
  for (auto v : best) witness.push_back(gl[v]);
  return {best.size(), std::move(witness), nodes};
}

}  // namespace lwhss

#endif  // LWHSS_VERIFY_HPP_
