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

#include <set>
#include <vector>

#include "lwhss/hss.hpp"
#include "expect_error.hpp"

namespace lwhss {
namespace {

// The two-instance, three-server scheme over GF(2) with G = [[1,0,1],[0,1,1]].
HssScheme three_server_scheme() { return construct_scheme(2, 3, 1, 1, 1); }

std::vector<Vector> run_all(const HssScheme& scheme, const ShareBundle& bundle) {
  std::vector<Vector> outs;
  for (int lambda = 1; lambda <= scheme.params().s; ++lambda) {
    outs.push_back(eval_shares(scheme, lambda,
                               ServerShares::view(bundle, scheme.family(), lambda)));
  }
  return outs;
}

TEST(Cnf, ShareExamples) {
  auto gf2 = FieldSpec::of_order(2);
  const SubsetFamily fam(3, 1);
  const std::vector<Elem> rand{1, 0};
  const Vector y = cnf_share_from_randomness(*gf2, 1, rand, fam.size());
  EXPECT_EQ(y, (Vector{1, 0, 0}));

  auto gf5 = FieldSpec::of_order(5);
  const SubsetFamily fam2(4, 2);
  ASSERT_EQ(fam2.size(), 6u);
  EXPECT_EQ(fam2.members(0), (std::vector<int>{1, 2}));
  EXPECT_EQ(fam2.members(5), (std::vector<int>{3, 4}));
  CounterRng rng(3, 0);
  for (Elem x = 0; x < 5; ++x) {
    const Vector s = cnf_share(*gf5, x, fam2, rng);
    Elem sum = 0;
    for (auto v : s) sum = gf5->add(sum, v);
    EXPECT_EQ(sum, x);
  }
  EXPECT_ERRC(cnf_share_from_randomness(*gf2, 1, rand, 4), Errc::kLengthMismatch);
  EXPECT_ERRC(SubsetFamily(3, 3), Errc::kThresholdOutOfRange);
  EXPECT_ERRC(SubsetFamily(3, 0), Errc::kThresholdOutOfRange);
}

TEST(Cnf, ViewOmitsOwnSubsets) {
  const SubsetFamily fam(4, 2);
  const Vector y{1, 2, 3, 4, 5, 6};
  const auto view = cnf_view(fam, y, 1);
  // Subsets avoiding server 1: {2,3}, {2,4}, {3,4}.
  ASSERT_EQ(view.size(), 3u);
  EXPECT_EQ(view[0].first, 3u);
  EXPECT_EQ(view[2].second, 6u);
  EXPECT_EQ(fam.index_of(std::vector<int>{2, 4}), 4u);
  EXPECT_FALSE(fam.index_of(std::vector<int>{2, 2}).has_value());
}

TEST(Monomials, Counts) {
  const auto scheme = three_server_scheme();
  const auto& space = scheme.monomials();
  EXPECT_EQ(space.size(), 6u);
  for (int lambda = 1; lambda <= 3; ++lambda) EXPECT_EQ(space.computable(lambda).size(), 4u);

  const auto big = construct_scheme(2, 5, 1, 2, 2);
  EXPECT_EQ(big.params().l, 6);
  EXPECT_EQ(big.monomials().size(), 150u);
  // A tuple avoids server lambda when both its singletons do: 4^2 per instance.
  for (int lambda = 1; lambda <= 5; ++lambda) {
    EXPECT_EQ(big.monomials().computable(lambda).size(), 6u * 16u);
  }
}

TEST(Monomials, EncodeDecode) {
  const auto big = construct_scheme(2, 5, 1, 2, 2);
  const auto& space = big.monomials();
  for (std::uint64_t id = 0; id < space.size(); ++id) {
    const Monomial mono = space.decode(id);
    ASSERT_EQ(space.encode(mono), id);
    std::uint32_t u = 0;
    for (auto k : mono.subsets) u |= big.family().mask(k);
    ASSERT_EQ(space.union_mask(id), u);
  }
  // Position 0 is the most significant digit.
  EXPECT_EQ(space.encode({0, {1, 0}}), 5u);
  EXPECT_EQ(space.encode({1, {0, 0}}), 25u);
  EXPECT_ERRC(space.encode({6, {0, 0}}), Errc::kMalformedInput);
  EXPECT_ERRC(space.encode({0, {0}}), Errc::kMalformedInput);
}

// The dense system for the three-server scheme, entry by entry.
TEST(EvalSystem, ThreeServerLayout) {
  const auto scheme = three_server_scheme();
  const auto sys = build_eval_system(scheme.code(), scheme.monomials());
  ASSERT_EQ(sys.s.rows(), 12u);
  ASSERT_EQ(sys.s.cols(), 12u);

  // Monomial ids: a1 a2 a3 b1 b2 b3 = 0..5. Column c is (server, monomial).
  const std::vector<std::pair<std::size_t, std::uint64_t>> cols{
      {0, 1}, {0, 2}, {0, 4}, {0, 5}, {1, 0}, {1, 2},
      {1, 3}, {1, 5}, {2, 0}, {2, 1}, {2, 3}, {2, 4}};
  EXPECT_EQ(sys.col_keys, cols);

  // Nonzero columns per row, 1-based, rows (1,a1) .. (1,b3), (2,a1) .. (2,b3).
  const std::vector<std::set<std::size_t>> support{
      {9}, {1, 10}, {2}, {11}, {3, 12}, {4},
      {5, 9}, {10}, {6}, {7, 11}, {12}, {8}};
  for (std::size_t r = 0; r < 12; ++r) {
    std::set<std::size_t> got;
    for (std::size_t c = 0; c < 12; ++c) {
      if (sys.s(r, c) != 0) {
        EXPECT_EQ(sys.s(r, c), 1u);
        got.insert(c + 1);
      }
    }
    EXPECT_EQ(got, support[r]) << "row " << r;
  }
  EXPECT_EQ(sys.g, (Vector{1, 1, 1, 0, 0, 0, 0, 0, 0, 1, 1, 1}));
}

TEST(EvalSystem, PerMonomialBlocks) {
  const auto scheme = three_server_scheme();
  const auto& code = scheme.code();
  auto gf2 = code.field();
  // Monomial a_T is computable by the servers outside T.
  EXPECT_EQ(column_block(code, {2, 3}), Matrix::from_rows(gf2, {{0, 1}, {1, 1}}));
  EXPECT_EQ(column_block(code, {1, 3}), Matrix::from_rows(gf2, {{1, 1}, {0, 1}}));
  EXPECT_EQ(column_block(code, {1, 2}), Matrix::identity(gf2, 2));

  // Solving each block for the unit vector of its instance gives the table.
  const auto& table = scheme.eval_table();
  EXPECT_EQ(table.size(), 8u);
  const auto sys = build_eval_system(code, scheme.monomials());
  const Vector e = eval_vector(sys, table);
  EXPECT_EQ(sys.s.apply(e), sys.g);
}

TEST(EvalSystem, BlockwiseEqualsDenseCanonical) {
  for (auto scheme : {three_server_scheme(), construct_scheme(3, 4, 1, 1, 1),
                      construct_scheme(4, 4, 1, 2, 2), construct_scheme(2, 5, 1, 2, 2)}) {
    const auto sys = build_eval_system(scheme.code(), scheme.monomials());
    const auto dense = solve(sys.s, sys.g);
    ASSERT_TRUE(dense.has_value());
    EXPECT_EQ(*dense, eval_vector(sys, scheme.eval_table()));
    EXPECT_FALSE(first_identity_violation(scheme.code(), scheme.monomials(), scheme.eval_table()));
  }
}

TEST(EvalSystem, DegreeTwoFullRank) {
  const auto scheme = construct_scheme(2, 5, 1, 2, 2);
  const auto sys = build_eval_system(scheme.code(), scheme.monomials());
  EXPECT_EQ(sys.s.rows(), 900u);
  EXPECT_EQ(rank(sys.s), 900u);
}

TEST(EvalSystem, InfeasibleForWeakCode) {
  auto gf2 = FieldSpec::of_order(2);
  // Labelweight 1: a message lands on server 1 alone.
  const LabeledCode weak(Matrix::from_rows(gf2, {{1, 0, 0}, {0, 1, 1}}), Labeling({1, 2, 3}, 3));
  auto params = SchemeParams::make(gf2, 3, 1, 1, 1, 1);
  EXPECT_ERRC(HssScheme::synthesize(params, weak), Errc::kSystemInfeasible);
}

TEST(Eval, ZeroSharesGiveZero) {
  const auto scheme = construct_scheme(2, 5, 1, 2, 2);
  ShareBundle zero(scheme.params().l, scheme.params().shared_secrets(), scheme.family().size());
  for (const auto& z : run_all(scheme, zero)) {
    for (auto v : z) EXPECT_EQ(v, 0u);
  }
}

TEST(Eval, TwoServerForwarding) {
  auto gf3 = FieldSpec::of_order(3);
  const LabeledCode code(Matrix::from_rows(gf3, {{1, 1}}), Labeling({1, 2}, 2));
  const auto scheme = HssScheme::synthesize(SchemeParams::make(gf3, 2, 1, 1, 1, 1), code);
  // Every secret and every choice of randomness.
  for (Elem x = 0; x < 3; ++x) {
    for (Elem rx = 0; rx < 3; ++rx) {
      for (Elem rd = 0; rd < 3; ++rd) {
        ShareBundle b(1, 2, 2);
        const std::vector<Elem> r1{rx}, r2{rd};
        const Vector y = cnf_share_from_randomness(*gf3, x, r1, 2);
        const Vector one = cnf_share_from_randomness(*gf3, 1, r2, 2);
        for (std::size_t T = 0; T < 2; ++T) {
          b.at(0, 0, T) = y[T];
          b.at(0, 1, T) = one[T];
        }
        const Vector z = assemble_outputs(scheme, run_all(scheme, b));
        EXPECT_EQ(reconstruct(scheme, z), (Vector{x}));
      }
    }
  }
}

TEST(Eval, ThreeServerReconstruct) {
  const auto scheme = three_server_scheme();
  for (Elem a = 0; a < 2; ++a) {
    for (Elem b = 0; b < 2; ++b) {
      for (std::uint64_t seed = 0; seed < 8; ++seed) {
        const auto bundle = share_secrets(scheme, {{a}, {b}}, seed);
        const Vector z = assemble_outputs(scheme, run_all(scheme, bundle));
        ASSERT_EQ(z.size(), 3u);
        EXPECT_EQ(reconstruct(scheme, z), (Vector{a, b}));
      }
    }
  }
  EXPECT_EQ(download_cost(scheme).symbols, 3u);
  EXPECT_DOUBLE_EQ(download_cost(scheme).bits, 3.0);
}

TEST(Eval, GeneralPolynomials) {
  // x1 x2 + x1 with d = 2 over five servers.
  const auto scheme = construct_scheme(2, 5, 1, 2, 2);
  const auto& f = *scheme.field();
  const Polynomial poly{{1, {0, 1}}, {1, {0}}};
  EXPECT_EQ(degree(poly), 2);
  std::vector<Polynomial> polys(static_cast<std::size_t>(scheme.params().l), poly);
  for (std::uint64_t seed = 0; seed < 16; ++seed) {
    std::vector<Vector> secrets;
    for (int i = 0; i < scheme.params().l; ++i) {
      secrets.push_back({static_cast<Elem>((seed >> (i % 4)) & 1u), static_cast<Elem>((seed + i) & 1u)});
    }
    const auto bundle = share_secrets(scheme, secrets, seed);
    std::vector<Vector> outs;
    for (int lambda = 1; lambda <= 5; ++lambda) {
      outs.push_back(eval_general(scheme, lambda, ServerShares::view(bundle, scheme.family(), lambda), polys));
    }
    const Vector got = reconstruct(scheme, assemble_outputs(scheme, outs));
    for (int i = 0; i < scheme.params().l; ++i) {
      EXPECT_EQ(got[static_cast<std::size_t>(i)], evaluate(f, poly, secrets[static_cast<std::size_t>(i)]));
    }
  }
}

TEST(Eval, ScaledLinearOverGf4) {
  const auto scheme = construct_scheme(4, 3, 1, 1, 1);
  ASSERT_EQ(scheme.params().l, 2);
  const Polynomial poly{{2, {0}}};  // omega * x1
  std::vector<Polynomial> polys(2, poly);
  const auto& f = *scheme.field();
  for (Elem a = 0; a < 4; ++a) {
    for (Elem b = 0; b < 4; ++b) {
      for (std::uint64_t seed = 0; seed < 4; ++seed) {
        const auto bundle = share_secrets(scheme, {{a}, {b}}, seed);
        std::vector<Vector> outs;
        for (int lambda = 1; lambda <= 3; ++lambda) {
          outs.push_back(eval_general(scheme, lambda, ServerShares::view(bundle, scheme.family(), lambda), polys));
        }
        EXPECT_EQ(reconstruct(scheme, assemble_outputs(scheme, outs)),
                  (Vector{f.mul(2, a), f.mul(2, b)}));
      }
    }
  }
}

TEST(Eval, Errors) {
  const auto scheme = three_server_scheme();
  const auto bundle = share_secrets(scheme, {{1}, {0}}, 7);
  const auto v1 = ServerShares::view(bundle, scheme.family(), 1);
  EXPECT_ERRC(eval_shares(scheme, 2, v1), Errc::kWrongServer);
  EXPECT_ERRC(eval_shares(scheme, 4, v1), Errc::kWrongServer);

  const std::vector<Polynomial> quad(2, Polynomial{{1, {0, 0}}});
  EXPECT_ERRC(eval_general(scheme, 1, v1, quad), Errc::kDegreeTooHigh);

  // Server 1 never holds the share for subset {1}.
  EXPECT_ERRC(v1.get(0, 0, 0), Errc::kMissingShares);
  ServerShares partial(1, 2, 2, 3);
  EXPECT_ERRC(eval_shares(scheme, 1, partial), Errc::kMissingShares);

  std::vector<Vector> two{eval_shares(scheme, 1, v1),
                          eval_shares(scheme, 2, ServerShares::view(bundle, scheme.family(), 2))};
  EXPECT_ERRC(assemble_outputs(scheme, two), Errc::kMissingShares);
  EXPECT_ERRC(reconstruct(scheme, Vector{1, 0}), Errc::kLengthMismatch);
  EXPECT_ERRC(share_secrets(scheme, {{1}}, 0), Errc::kLengthMismatch);
  EXPECT_ERRC(construct_scheme(2, 3, 1, 3, 3), Errc::kInfeasibleParams);
}

TEST(Eval, ServersOnlyTouchVisibleShares) {
  // Every table entry of a coordinate avoids the subsets containing its server.
  const auto scheme = construct_scheme(3, 5, 2, 1, 1);
  const auto& space = scheme.monomials();
  for (const auto& e : scheme.eval_table()) {
    const int lambda = scheme.code().labeling()[e.r];
    for (auto k : space.subsets_of(e.monomial)) EXPECT_FALSE(scheme.family().contains(k, lambda));
  }
}

TEST(Scheme, CopyKeepsMonomialSpace) {
  auto a = construct_scheme(2, 5, 1, 2, 2);
  const HssScheme b = a;
  a = three_server_scheme();
  EXPECT_EQ(b.monomials().size(), 150u);
  EXPECT_EQ(&b.monomials().family(), &b.family());
}

}  // namespace
}  // namespace lwhss
