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

// Three servers, one of which may be curious, jointly hold two bits a and b.
// Each server sends back one bit and the client recovers both.

#include <cstdio>

#include "lwhss/lwhss.hpp"

int main() {
  using namespace lwhss;
  const HssScheme scheme = construct_scheme(2, 3, 1, 1, 1);
  const auto& code = scheme.code();
  std::printf("G =\n");
  for (const auto& row : code.generator().to_rows()) {
    std::printf(" ");
    for (auto v : row) std::printf(" %u", v);
    std::printf("\n");
  }

  for (Elem a = 0; a < 2; ++a) {
    for (Elem b = 0; b < 2; ++b) {
      const ShareBundle bundle = share_secrets(scheme, {{a}, {b}}, 2026);
      std::vector<Vector> outs;
      for (int server = 1; server <= 3; ++server) {
        outs.push_back(eval_shares(scheme, server, ServerShares::view(bundle, scheme.family(), server)));
      }
      const Vector z = assemble_outputs(scheme, outs);
      const Vector got = reconstruct(scheme, z);
      std::printf("a=%u b=%u  z=(%u,%u,%u)  recovered (%u,%u)\n", a, b, z[0], z[1], z[2], got[0], got[1]);
    }
  }
  const auto cost = download_cost(scheme);
  std::printf("download: %zu symbols for %d outputs\n", cost.symbols, scheme.params().l);
  return 0;
}
