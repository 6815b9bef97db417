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

// Products x*y over GF(2) on five servers with threshold 1, six instances at
// once, followed by the verifier's report.

#include <cstdio>

#include "lwhss/lwhss.hpp"

int main() {
  using namespace lwhss;
  const HssScheme scheme = construct_scheme(2, 5, 1, 2, 2);
  const auto& p = scheme.params();
  std::printf("j=%d l=%d n=%d rate=%s eval terms=%zu\n", p.j, p.l, p.n(),
              extract_code(scheme).rate.str().c_str(), scheme.eval_table().size());

  std::vector<Vector> secrets;
  for (int i = 0; i < p.l; ++i) secrets.push_back({static_cast<Elem>(i & 1), static_cast<Elem>((i >> 1) & 1)});
  const ShareBundle bundle = share_secrets(scheme, secrets, 11);
  std::vector<Vector> outs;
  for (int server = 1; server <= p.s; ++server) {
    outs.push_back(eval_shares(scheme, server, ServerShares::view(bundle, scheme.family(), server)));
  }
  const Vector got = reconstruct(scheme, assemble_outputs(scheme, outs));
  for (int i = 0; i < p.l; ++i) {
    const auto& x = secrets[static_cast<std::size_t>(i)];
    std::printf("instance %d: %u * %u = %u\n", i, x[0], x[1], got[static_cast<std::size_t>(i)]);
  }

  const auto report = verify_scheme(scheme, CorrectnessMode::Sampled(2000, 1));
  std::printf("\n%s", report.table().c_str());
  return report.passed() ? 0 : 1;
}
