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

#include <vector>

#include "lwhss/io.hpp"
#include "lwhss/verify.hpp"
#include "expect_error.hpp"

namespace lwhss {
namespace {

using io::json;

TEST(Io, Sha256KnownVectors) {
  EXPECT_EQ(io::sha256_hex("abc"), "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
  EXPECT_EQ(io::sha256_hex(""), "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
}

TEST(Io, FieldAndMatrixRoundTrip) {
  auto gf9 = FieldSpec::of_order(9);
  const auto back = io::field_from_json(io::to_json(*gf9));
  EXPECT_EQ(*back, *gf9);
  const Matrix m = Matrix::from_rows(gf9, {{0, 8, 3}, {4, 1, 7}});
  EXPECT_EQ(io::matrix_from_json(io::to_json(m), gf9), m);
  json bad = io::to_json(m);
  bad["entries"][0][0] = 9;
  EXPECT_ERRC(io::matrix_from_json(bad, gf9), Errc::kMalformedInput);
}

TEST(Io, CodeAndBlockRoundTrip) {
  const auto oc = optimal_code(2, 5, 2, 1);
  const LabeledCode back = io::code_from_json(io::to_json(oc.code));
  EXPECT_EQ(back.generator(), oc.code.generator());
  EXPECT_EQ(back.labeling().labels(), oc.code.labeling().labels());

  const BlockMatrix a = code_to_block_tn(oc.code, 2);
  EXPECT_EQ(io::block_matrix_from_json(io::to_json(a)), a);
}

TEST(Io, SchemeRoundTripAndHash) {
  for (auto scheme : {construct_scheme(2, 3, 1, 1, 1), construct_scheme(2, 5, 1, 2, 2),
                      construct_scheme(3, 4, 1, 1, 2)}) {
    const json j = io::to_json(scheme);
    const HssScheme back = io::scheme_from_json(json::parse(j.dump()));
    EXPECT_EQ(back.eval_table(), scheme.eval_table());
    EXPECT_EQ(back.code().generator(), scheme.code().generator());
    EXPECT_EQ(io::scheme_hash(back), io::scheme_hash(scheme));
    EXPECT_EQ(io::to_json(back).dump(), j.dump());
  }
  // Rebuilding gives the same bytes.
  EXPECT_EQ(io::scheme_hash(construct_scheme(2, 3, 1, 1, 1)),
            io::scheme_hash(construct_scheme(2, 3, 1, 1, 1)));
  EXPECT_NE(io::scheme_hash(construct_scheme(2, 3, 1, 1, 1)),
            io::scheme_hash(construct_scheme(3, 3, 1, 1, 1)));
}

TEST(Io, TamperedSchemeRejected) {
  const auto scheme = construct_scheme(3, 3, 1, 1, 1);
  json j = io::to_json(scheme);
  j["eval"][0]["coeff"] = (j["eval"][0]["coeff"].get<int>() % 2) + 1;
  EXPECT_ERRC(io::scheme_from_json(j), Errc::kSystemInfeasible);
  // Without validation it loads and the verifier catches it.
  const auto loaded = io::scheme_from_json(j, false);
  EXPECT_FALSE(check_correctness(loaded, CorrectnessMode::Exhaustive()).passed);

  json missing = io::to_json(scheme);
  missing.erase("params");
  EXPECT_ERRC(io::scheme_from_json(missing), Errc::kMalformedInput);
}

TEST(Io, SharesAndOutputsRoundTrip) {
  const auto scheme = construct_scheme(2, 3, 1, 1, 1);
  const auto bundle = share_secrets(scheme, {{1}, {0}}, 7);
  std::vector<Vector> outs;
  for (int lambda = 1; lambda <= 3; ++lambda) {
    const json sj = json::parse(io::shares_to_json(scheme, bundle, lambda, 7).dump());
    const ServerShares got = io::shares_from_json(scheme, sj);
    EXPECT_EQ(got.server(), lambda);
    const auto direct = ServerShares::view(bundle, scheme.family(), lambda);
    const Vector z = eval_shares(scheme, lambda, got);
    EXPECT_EQ(z, eval_shares(scheme, lambda, direct));
    const auto o = io::output_from_json(scheme, json::parse(io::output_to_json(scheme, lambda, z).dump()));
    EXPECT_EQ(o.server, lambda);
    outs.push_back(o.z);
  }
  EXPECT_EQ(reconstruct(scheme, assemble_outputs(scheme, outs)), (Vector{1, 0}));
}

TEST(Io, HashMismatchAndWrongServer) {
  const auto a = construct_scheme(2, 3, 1, 1, 1);
  const auto b = construct_scheme(3, 3, 1, 1, 1);
  const auto bundle = share_secrets(a, {{1}, {1}}, 1);
  const json sj = io::shares_to_json(a, bundle, 1, 1);
  EXPECT_ERRC(io::shares_from_json(b, sj), Errc::kSchemeHashMismatch);
  EXPECT_ERRC(io::output_from_json(b, io::output_to_json(a, 1, {0})), Errc::kSchemeHashMismatch);

  json wrong = sj;
  wrong["server"] = 2;  // the file lists shares for subset {2}
  EXPECT_ERRC(io::shares_from_json(a, wrong), Errc::kWrongServer);
  wrong["server"] = 9;
  EXPECT_ERRC(io::shares_from_json(a, wrong), Errc::kWrongServer);
}

TEST(Io, SecretsAndPolys) {
  EXPECT_EQ(io::secrets_from_json(json::parse("[[1],[0]]")), (std::vector<Vector>{{1}, {0}}));
  EXPECT_EQ(io::secrets_from_json(json::parse(R"({"secrets": [[2, 3]]})")), (std::vector<Vector>{{2, 3}}));
  EXPECT_ERRC(io::secrets_from_json(json::parse(R"({"x": 1})")), Errc::kMalformedInput);

  const auto polys = io::polys_from_json(json::parse(R"([[{"coeff": 2, "vars": [0, 1]}, {"vars": [0]}]])"));
  ASSERT_EQ(polys.size(), 1u);
  ASSERT_EQ(polys[0].size(), 2u);
  EXPECT_EQ(polys[0][0].coeff, 2u);
  EXPECT_EQ(polys[0][1].coeff, 1u);
  EXPECT_EQ(polys[0][0].vars, (std::vector<int>{0, 1}));
  EXPECT_ERRC(io::polys_from_json(json::parse("[1]")), Errc::kMalformedInput);
}

TEST(Io, ReportJson) {
  const auto rep = verify_scheme(construct_scheme(2, 3, 1, 1, 1), CorrectnessMode::Exhaustive());
  const json j = io::to_json(rep);
  EXPECT_TRUE(j["pass"].get<bool>());
  EXPECT_EQ(j["checks"].size(), rep.checks.size());
  EXPECT_EQ(j["checks"][1]["work"].get<int>(), 64);
}

}  // namespace
}  // namespace lwhss
