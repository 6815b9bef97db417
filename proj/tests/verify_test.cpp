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

#include <gtest/gtest.h>

#include <algorithm>
#include <vector>

#include "lwhss/verify.hpp"
#include "expect_error.hpp"
#include "oracles.hpp"

namespace lwhss {
namespace {

HssScheme three_server_scheme() { return construct_scheme(2, 3, 1, 1, 1); }

// Server 1 holds coordinates 0 and 1, and each coordinate forwards one
// share, so the code is [1 1 1 0 0 0] with labels (1,1,2,2,3,3).
HssScheme forwarding_scheme() {
  auto gf2 = FieldSpec::of_order(2);
  const LabeledCode code(Matrix::from_rows(gf2, {{1, 1, 1, 0, 0, 0}}),
                         Labeling({1, 1, 2, 2, 3, 3}, 3));
  const SchemeParams params{gf2, 3, 1, 1, 1, 1, 2};
  // Monomial ids 0, 1, 2 are y_{1}, y_{2}, y_{3} of the single instance.
  const EvalTable table{{0, 1, 1}, {1, 2, 1}, {2, 0, 1}};
  return HssScheme::from_parts(params, code, table, false);
}

TEST(Correctness, ExhaustiveThreeServer) {
  const auto res = check_correctness(three_server_scheme(), CorrectnessMode::Exhaustive());
  EXPECT_TRUE(res.passed) << res.witness;
  EXPECT_EQ(res.work, 64u);
}

TEST(Correctness, SampledDegreeTwo) {
  const auto scheme = construct_scheme(2, 5, 1, 2, 2);
  const auto res = check_correctness(scheme, CorrectnessMode::Sampled(10000, 1));
  EXPECT_TRUE(res.passed) << res.witness;
  EXPECT_EQ(res.work, 10000u);
  const auto threaded = check_correctness(scheme, CorrectnessMode::Sampled(2000, 1, 4));
  EXPECT_TRUE(threaded.passed);
  EXPECT_ERRC(check_correctness(scheme, CorrectnessMode::Exhaustive()), Errc::kTooLargeForExhaustive);
}

TEST(Correctness, FlippedCoefficientFails) {
  const auto good = construct_scheme(3, 3, 1, 1, 1);
  ASSERT_TRUE(check_correctness(good, CorrectnessMode::Exhaustive()).passed);
  EvalTable table = good.eval_table();
  table[0].coeff = good.field()->add(table[0].coeff, 1);
  if (table[0].coeff == 0) table[0].coeff = 1;
  const auto bad = HssScheme::from_parts(good.params(), good.code(), table, false);

  const auto ex = check_correctness(bad, CorrectnessMode::Exhaustive());
  EXPECT_FALSE(ex.passed);
  EXPECT_FALSE(ex.witness.empty());
  const auto sampled = check_correctness(bad, CorrectnessMode::Sampled(200, 5));
  EXPECT_FALSE(sampled.passed);
  EXPECT_FALSE(sampled.witness.empty());
  // The same failing trial is reported regardless of threading.
  EXPECT_EQ(check_correctness(bad, CorrectnessMode::Sampled(200, 5, 3)).witness, sampled.witness);
  EXPECT_FALSE(check_polynomial_identity(bad).passed);
  EXPECT_ERRC(HssScheme::from_parts(good.params(), good.code(), table, true), Errc::kSystemInfeasible);
}

TEST(Correctness, DroppedTermFails) {
  const auto good = three_server_scheme();
  EvalTable table = good.eval_table();
  table.pop_back();
  const auto bad = HssScheme::from_parts(good.params(), good.code(), table, false);
  EXPECT_FALSE(check_correctness(bad, CorrectnessMode::Exhaustive()).passed);
}

TEST(Privacy, CnfPasses) {
  auto gf2 = FieldSpec::of_order(2);
  auto gf3 = FieldSpec::of_order(3);
  for (int t : {1, 2}) {
    const SubsetFamily fam(3, t);
    const auto res = check_privacy(gf2, fam, cnf_share_function(gf2, fam));
    EXPECT_TRUE(res.passed) << res.witness;
  }
  const SubsetFamily fam31(3, 1);
  EXPECT_TRUE(check_privacy(gf3, fam31, cnf_share_function(gf3, fam31)).passed);
  // t = 2: every x sees 2^2 randomness values.
  const SubsetFamily fam32(3, 2);
  EXPECT_EQ(check_privacy(gf2, fam32, cnf_share_function(gf2, fam32)).work, 8u);
}

TEST(Privacy, BrokenShareFails) {
  auto gf2 = FieldSpec::of_order(2);
  const SubsetFamily fam(3, 1);
  // y_{1} = x. Coalition {1} still sees only randomness; {2} sees x.
  const ShareFunction leaky = [](Elem x, std::span<const Elem> r) { return Vector{x, r[0], r[1]}; };
  const auto res = check_privacy(gf2, fam, leaky);
  EXPECT_FALSE(res.passed);
  EXPECT_EQ(res.witness.rfind("T={2}", 0), 0u) << res.witness;

  // Leaking through a sum of two shares is caught as well.
  auto gf3 = FieldSpec::of_order(3);
  const ShareFunction biased = [&](Elem x, std::span<const Elem> r) {
    return Vector{r[0], r[0], gf3->sub(x, gf3->add(r[0], r[0]))};
  };
  EXPECT_FALSE(check_privacy(gf3, fam, biased).passed);
}

TEST(Privacy, EveryConstructedScheme) {
  for (auto [q, s, t, d] : std::vector<std::tuple<int, int, int, int>>{
           {2, 3, 1, 1}, {2, 4, 1, 1}, {3, 3, 1, 1}, {2, 4, 2, 1}, {2, 5, 1, 2}, {4, 3, 1, 1}}) {
    EXPECT_TRUE(check_privacy(construct_scheme(q, s, t, d, d)).passed);
  }
}

TEST(ExtractCode, Examples) {
  const auto a = extract_code(three_server_scheme());
  EXPECT_EQ(a.rate.str(), "2/3");
  EXPECT_EQ(a.labelweight, 2);

  const auto fwd = forwarding_scheme();
  EXPECT_TRUE(check_polynomial_identity(fwd).passed);
  EXPECT_TRUE(check_correctness(fwd, CorrectnessMode::Exhaustive()).passed);
  const auto b = extract_code(fwd);
  EXPECT_EQ(b.rate.str(), "1/6");
  EXPECT_EQ(b.labelweight, 2);
  EXPECT_FALSE(check_rate(fwd).passed);

  // The identity code on its own has labelweight 1.
  auto gf2 = FieldSpec::of_order(2);
  EXPECT_EQ(labelweight_code(LabeledCode(Matrix::identity(gf2, 3), Labeling({1, 2, 3}, 3))), 1);

  const auto c = extract_code(construct_scheme(2, 5, 1, 2, 2));
  EXPECT_EQ(c.rate.str(), "3/5");
  EXPECT_EQ(c.labelweight, 3);
}

TEST(ExtractCode, RoundTripKeepsRateAndLabelweight) {
  for (auto [q, s, t, d] : std::vector<std::tuple<int, int, int, int>>{
           {2, 3, 1, 1}, {3, 4, 1, 1}, {2, 5, 2, 1}, {4, 5, 1, 2}}) {
    const auto oc = optimal_code(q, s, d, t);
    const auto scheme = construct_scheme(q, s, t, d, d);
    const auto ex = extract_code(scheme);
    EXPECT_EQ(ex.code.generator(), oc.code.generator());
    EXPECT_EQ(ex.labelweight, labelweight_code(oc.code));
    EXPECT_TRUE(ex.rate == (Rate{oc.code.dimension(), oc.code.length()}));
  }
}

TEST(VerifyScheme, ReportsAllChecks) {
  const auto rep = verify_scheme(three_server_scheme(), CorrectnessMode::Exhaustive());
  EXPECT_TRUE(rep.passed()) << rep.table();
  EXPECT_EQ(rep.checks.size(), 6u);
  const auto fwd = verify_scheme(forwarding_scheme(), CorrectnessMode::Exhaustive(), false);
  EXPECT_FALSE(fwd.passed());
}

TEST(Amortization, Examples) {
  auto a = check_amortization_bound(2, 3, 1, 1, 2);
  EXPECT_EQ(a.verdict, Admissibility::kAdmissible);
  EXPECT_EQ(a.j, 1);
  EXPECT_EQ(check_amortization_bound(2, 3, 1, 1, 3).verdict, Admissibility::kInadmissible);
  EXPECT_EQ(check_amortization_bound(2, 5, 2, 1, 4).verdict, Admissibility::kInadmissible);
  EXPECT_EQ(check_amortization_bound(2, 5, 2, 1, 3).verdict, Admissibility::kInadmissible);
  EXPECT_EQ(check_amortization_bound(2, 5, 2, 1, 6).verdict, Admissibility::kAdmissible);
  EXPECT_ERRC(check_amortization_bound(2, 3, 3, 1, 2), Errc::kInfeasibleParams);
}

TEST(Amortization, VerdictMatchesBounds) {
  for (std::uint64_t q : {2, 3, 4}) {
    for (int s = 2; s <= 12; ++s) {
      for (int d = 1; d < s; ++d) {
        for (int t = 1; d * t < s; ++t) {
          const int r = s - d * t;
          const int lo = j_lower_bound(q, s, d, t);
          const int hi = construction_min_j(q, s, d, t);
          for (int j = 1; j <= hi + 1; ++j) {
            const auto v = check_amortization_bound(q, s, d, t, j * r).verdict;
            const auto want = j < lo ? Admissibility::kInadmissible
                              : j >= hi ? Admissibility::kAdmissible
                                        : Admissibility::kUnknown;
            EXPECT_EQ(v, want) << q << " " << s << " " << d << " " << t << " j=" << j;
          }
        }
      }
    }
  }
}

TEST(BlockTnSearch, Examples) {
  const auto none = search_block_tn(2, 1, 2, 2);
  EXPECT_FALSE(none.exists);
  EXPECT_FALSE(none.witness.has_value());
  EXPECT_GT(none.nodes, 0u);

  const auto yes = search_block_tn(2, 2, 3, 2);
  ASSERT_TRUE(yes.exists);
  ASSERT_TRUE(yes.witness.has_value());
  EXPECT_TRUE(is_block_tn(*yes.witness));
  EXPECT_EQ(yes.witness->block(0, 0), Matrix::identity(FieldSpec::of_order(2), 2));
  EXPECT_EQ(labelweight_code(block_tn_to_code(*yes.witness)), 3);

  EXPECT_TRUE(search_block_tn(2, 1, 1, 5).exists);
  EXPECT_ERRC(search_block_tn(2, 3, 4, 4), Errc::kSearchTooLarge);
}

TEST(BlockTnSearch, NoneOverGf2AtJ1) {
  for (int r : {2, 3}) {
    for (int u : {2, 3}) {
      EXPECT_FALSE(search_block_tn(2, 1, r, u).exists) << r << "x" << u;
      EXPECT_EQ(j_lower_bound(2, r + u, u, 1), 2);
    }
  }
}

// No witness below the lower bound, one at the construction's j, for every
// search that fits the budget.
TEST(BlockTnSearch, AgreesWithBounds) {
  int searched = 0;
  for (std::uint64_t q : {2, 3, 4}) {
    for (int r = 1; r <= 3; ++r) {
      for (int u = 1; u <= 3; ++u) {
        const int s = r + u;
        const int lo = j_lower_bound(q, s, u, 1);
        const int hi = construction_min_j(q, s, u, 1);
        for (int j = 1; j <= hi; ++j) {
          BlockTnSearch res{};
          try {
            res = search_block_tn(q, j, r, u);
          } catch (const Error& e) {
            ASSERT_EQ(e.code(), Errc::kSearchTooLarge);
            continue;
          }
          ++searched;
          if (j < lo) { EXPECT_FALSE(res.exists) << q << " j=" << j << " " << r << "x" << u; }
          if (j == hi) { EXPECT_TRUE(res.exists) << q << " j=" << j << " " << r << "x" << u; }
          if (res.exists) { EXPECT_TRUE(is_block_tn(*res.witness)); }
        }
      }
    }
  }
  EXPECT_GT(searched, 20);
}

TEST(DifferenceSet, Examples) {
  const auto a = max_difference_invertible_set(2, 1);
  EXPECT_EQ(a.size, 1u);

  const auto b = max_difference_invertible_set(2, 2);
  ASSERT_EQ(b.size, 3u);
  const auto ext = Extension::create(FieldSpec::of_order(2), 2);
  const std::vector<Matrix> units{ext.embed_matrix(1), ext.embed_matrix(2), ext.embed_matrix(3)};
  // Same set; the search lists members in its own order.
  EXPECT_TRUE(std::is_permutation(b.witness.begin(), b.witness.end(), units.begin(), units.end()));

  EXPECT_EQ(max_difference_invertible_set(3, 1).size, 2u);
}

TEST(DifferenceSet, WitnessesAreValidAndTight) {
  for (auto [q, j] : std::vector<std::pair<std::uint64_t, int>>{{2, 1}, {2, 2}, {3, 1}, {4, 1}, {5, 1}}) {
    const auto res = max_difference_invertible_set(q, j);
    EXPECT_EQ(res.size, saturating_pow(q, static_cast<std::uint64_t>(j)) - 1);
    ASSERT_EQ(res.witness.size(), res.size);
    for (std::size_t a = 0; a < res.size; ++a) {
      EXPECT_TRUE(is_nonsingular(res.witness[a]));
      for (std::size_t b = a + 1; b < res.size; ++b) {
        EXPECT_TRUE(is_nonsingular(res.witness[a] - res.witness[b]));
      }
    }
  }
}

TEST(GeneralLinearGroup, Orders) {
  // |GL(j, q)| = prod (q^j - q^k).
  EXPECT_EQ(general_linear_group(FieldSpec::of_order(2), 2).size(), 6u);
  EXPECT_EQ(general_linear_group(FieldSpec::of_order(3), 2).size(), 48u);
  EXPECT_EQ(general_linear_group(FieldSpec::of_order(2), 3).size(), 168u);
  EXPECT_EQ(general_linear_group(FieldSpec::of_order(5), 1).size(), 4u);
}

}  // namespace
}  // namespace lwhss
