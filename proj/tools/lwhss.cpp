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

// lwhss: construct schemes, run the three protocol phases over JSON files,
// verify, and print bounds.

#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <iomanip>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "lwhss/lwhss.hpp"

namespace {

using lwhss::Elem;
using lwhss::Errc;
using lwhss::HssScheme;
using lwhss::Vector;
namespace io = lwhss::io;

std::string vec_str(const Vector& v) {
  std::string out = "(";
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (k) out += ", ";
    out += std::to_string(v[k]);
  }
  return out + ")";
}

std::string rate_str(std::uint64_t num, std::uint64_t den) {
  return lwhss::Rate{num, den}.str();
}

void print_matrix(std::ostream& os, const lwhss::Matrix& m, const std::string& indent = "  ") {
  for (std::size_t r = 0; r < m.rows(); ++r) {
    os << indent;
    for (std::size_t c = 0; c < m.cols(); ++c) os << (c ? " " : "") << m(r, c);
    os << '\n';
  }
}

std::uint64_t effective_seed(std::uint64_t flag) {
  if (const char* env = std::getenv("HSS_SEED")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      lwhss::fail(Errc::kMalformedInput, "HSS_SEED is not an unsigned integer");
    }
  }
  return flag;
}

struct ConstructArgs {
  std::uint64_t q = 2;
  int s = 0, t = 1, d = 1, m = 0;
  std::optional<int> j;
  std::string out;
};

int cmd_construct(const ConstructArgs& a) {
  const int m = a.m == 0 ? a.d : a.m;
  lwhss::require(a.s - a.d * a.t > 0, Errc::kInfeasibleParams,
                 "s - dt = " + std::to_string(a.s) + " - " + std::to_string(a.d * a.t) +
                     " must be positive");
  lwhss::require(m >= a.d, Errc::kInfeasibleParams, "m >= d violated");
  const HssScheme scheme = lwhss::construct_scheme(a.q, a.s, a.t, a.d, m, a.j);
  const auto& p = scheme.params();
  std::cout << "j = " << p.j << " (lower bound " << lwhss::j_lower_bound(a.q, a.s, a.d, a.t)
            << ")\n"
            << "l = " << p.l << "\n"
            << "n = " << scheme.code().length() << "\n"
            << "rate = " << rate_str(static_cast<std::uint64_t>(p.l), scheme.code().length()) << "\n"
            << "eval terms = " << scheme.eval_table().size() << "\n";
  if (!a.out.empty()) {
    io::write_file(a.out, io::to_json(scheme));
    std::cout << "scheme hash = " << io::scheme_hash(scheme) << "\n";
  }
  return 0;
}

int cmd_share(const std::string& scheme_path, const std::string& secrets_path,
              std::uint64_t seed_flag, const std::string& out_dir) {
  const HssScheme scheme = io::scheme_from_json(io::read_file(scheme_path));
  const auto secrets = io::secrets_from_json(io::read_file(secrets_path));
  for (const auto& row : secrets) {
    for (auto x : row) {
      lwhss::require(scheme.field()->contains(x), Errc::kMalformedInput,
                     "secret " + std::to_string(x) + " is not a field element");
    }
  }
  const std::uint64_t seed = effective_seed(seed_flag);
  const auto bundle = lwhss::share_secrets(scheme, secrets, seed);
  std::filesystem::create_directories(out_dir);
  for (int lambda = 1; lambda <= scheme.params().s; ++lambda) {
    const auto path = std::filesystem::path(out_dir) / ("share_" + std::to_string(lambda) + ".json");
    io::write_file(path.string(), io::shares_to_json(scheme, bundle, lambda, seed));
    std::cout << path.string() << "\n";
  }
  return 0;
}

int cmd_eval(const std::string& scheme_path, const std::string& share_path,
             const std::string& polys_path, const std::string& out) {
  const HssScheme scheme = io::scheme_from_json(io::read_file(scheme_path));
  const auto shares = io::shares_from_json(scheme, io::read_file(share_path));
  Vector z;
  if (polys_path.empty()) {
    z = lwhss::eval_shares(scheme, shares.server(), shares);
  } else {
    z = lwhss::eval_general(scheme, shares.server(), shares,
                            io::polys_from_json(io::read_file(polys_path)));
  }
  const auto j = io::output_to_json(scheme, shares.server(), z);
  if (out.empty()) {
    std::cout << j.dump(2) << "\n";
  } else {
    io::write_file(out, j);
  }
  return 0;
}

int cmd_rec(const std::string& scheme_path, const std::vector<std::string>& outputs) {
  const HssScheme scheme = io::scheme_from_json(io::read_file(scheme_path));
  const int s = scheme.params().s;
  std::vector<std::optional<Vector>> per(static_cast<std::size_t>(s));
  for (const auto& path : outputs) {
    auto o = io::output_from_json(scheme, io::read_file(path));
    lwhss::require(o.server >= 1 && o.server <= s, Errc::kWrongServer,
                   path + ": server out of range");
    lwhss::require(!per[static_cast<std::size_t>(o.server - 1)], Errc::kMalformedInput,
                   "two output shares for server " + std::to_string(o.server));
    per[static_cast<std::size_t>(o.server - 1)] = std::move(o.z);
  }
  std::vector<Vector> all;
  for (int lambda = 1; lambda <= s; ++lambda) {
    lwhss::require(per[static_cast<std::size_t>(lambda - 1)].has_value(), Errc::kMissingShares,
                   "no output share from server " + std::to_string(lambda));
    all.push_back(*per[static_cast<std::size_t>(lambda - 1)]);
  }
  const Vector z = lwhss::assemble_outputs(scheme, all);
  const Vector f = lwhss::reconstruct(scheme, z);
  const auto cost = lwhss::download_cost(scheme);
  std::cout << vec_str(f) << "\n";
  std::cout << "download: " << cost.symbols << " symbols, " << std::setprecision(6) << cost.bits
            << " bits for " << scheme.params().l << " outputs\n";
  return 0;
}

int cmd_verify(const std::string& scheme_path, const std::string& mode, std::uint64_t trials,
               std::uint64_t seed_flag, unsigned threads, bool as_json, bool no_rank) {
  const HssScheme scheme = io::scheme_from_json(io::read_file(scheme_path), false);
  lwhss::CorrectnessMode cm = mode == "exhaustive"
                                  ? lwhss::CorrectnessMode::Exhaustive()
                                  : lwhss::CorrectnessMode::Sampled(trials, effective_seed(seed_flag),
                                                                    threads);
  const auto report = lwhss::verify_scheme(scheme, cm, !no_rank);
  if (as_json) {
    std::cout << io::to_json(report).dump(2) << "\n";
  } else {
    std::cout << report.table();
  }
  return report.passed() ? 0 : 1;
}

std::string monomial_label(const HssScheme& scheme, std::uint64_t id) {
  const auto& space = scheme.monomials();
  const auto& family = scheme.family();
  std::string out(1, static_cast<char>('a' + space.instance(id) % 26));
  for (auto k : space.subsets_of(id)) {
    for (int x : family.members(k)) out += std::to_string(x);
  }
  return out;
}

int cmd_demo() {
  const HssScheme scheme = lwhss::construct_scheme(2, 3, 1, 1, 1);
  const auto& code = scheme.code();
  std::cout << "q = 2, s = 3, t = d = m = 1, j = " << scheme.params().j
            << ", l = " << scheme.params().l << ", n = " << code.length() << "\n\nG =\n";
  print_matrix(std::cout, code.generator());
  std::cout << "L = ";
  for (auto l : code.labeling().labels()) std::cout << l << ' ';
  std::cout << "\nlabelweight = " << lwhss::labelweight_code(code) << "\n\n";

  const auto sys = lwhss::build_eval_system(code, scheme.monomials());
  std::cout << "S (" << sys.s.rows() << " x " << sys.s.cols() << "), columns:\n ";
  for (const auto& [r, id] : sys.col_keys) std::cout << " (" << r + 1 << "," << monomial_label(scheme, id) << ")";
  std::cout << "\n";
  for (std::size_t row = 0; row < sys.s.rows(); ++row) {
    const auto& [i, id] = sys.row_keys[row];
    std::cout << "  " << i + 1 << "," << monomial_label(scheme, id) << " |";
    for (std::size_t c = 0; c < sys.s.cols(); ++c) std::cout << ' ' << (sys.s(row, c) ? '1' : '.');
    std::cout << " | " << sys.g[row] << "\n";
  }
  std::cout << "\ng = " << vec_str(sys.g) << "\n";
  const Vector e = lwhss::eval_vector(sys, scheme.eval_table());
  std::cout << "e = " << vec_str(e) << "\n\n";
  for (int lambda = 1; lambda <= 3; ++lambda) {
    for (auto r : scheme.coordinates_of(lambda)) {
      std::cout << "z_" << r + 1 << " =";
      bool first = true;
      for (const auto& t : scheme.coordinate_terms(r)) {
        std::cout << (first ? " " : " + ") << monomial_label(scheme, t.monomial);
        first = false;
      }
      if (first) std::cout << " 0";
      std::cout << "\n";
    }
  }
  const auto res = lwhss::check_correctness(scheme, lwhss::CorrectnessMode::Exhaustive());
  std::cout << "\nexhaustive correctness: " << (res.passed ? "pass" : "FAIL") << " over " << res.work
            << " assignments\n";
  return res.passed ? 0 : 1;
}

int cmd_bounds(std::uint64_t q, int s, int d, int t, int max_j) {
  const int r = s - d * t;
  lwhss::require(r > 0, Errc::kInfeasibleParams, "s - dt must be positive");
  const int lower = lwhss::j_lower_bound(q, s, d, t);
  const int built = lwhss::construction_min_j(q, s, d, t);
  if (max_j <= 0) max_j = built + 1;
  std::cout << "q = " << q << ", s = " << s << ", d = " << d << ", t = " << t << ", s - dt = " << r
            << "\nlower bound j >= " << lower << ", construction from j = " << built << "\n\n";
  std::cout << "  j     l  verdict\n";
  for (int j = 1; j <= max_j; ++j) {
    const auto v = lwhss::check_amortization_bound(q, s, d, t, j * r);
    std::cout << std::setw(3) << j << std::setw(6) << j * r << "  " << lwhss::admissibility_name(v.verdict)
              << "\n";
  }
  std::cout << "other l (not a multiple of " << r << "): inadmissible\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Labelweight-code HSS toolkit"};
  app.require_subcommand(1);

  ConstructArgs ca;
  auto* construct = app.add_subcommand("construct", "Build a scheme with optimal download rate");
  construct->add_option("--q", ca.q, "Field order")->required();
  construct->add_option("--s", ca.s, "Servers")->required();
  construct->add_option("--t", ca.t, "Privacy threshold")->required();
  construct->add_option("--d", ca.d, "Degree")->required();
  construct->add_option("--m", ca.m, "Variables per instance (default d)");
  construct->add_option("--j", ca.j, "Block size override (at least the construction's j)");
  construct->add_option("--out", ca.out, "Scheme file to write");

  std::string scheme_path, secrets_path, out_dir = ".", share_path, polys_path, out_path;
  std::uint64_t seed = 0;
  auto* share = app.add_subcommand("share", "CNF-share secrets, one file per server");
  share->add_option("--scheme", scheme_path)->required();
  share->add_option("--secrets", secrets_path, "JSON array of per-instance secret vectors")->required();
  share->add_option("--seed", seed, "Randomness seed (HSS_SEED overrides)");
  share->add_option("--out-dir", out_dir);

  auto* eval = app.add_subcommand("eval", "Compute one server's output share");
  eval->add_option("--scheme", scheme_path)->required();
  eval->add_option("--shares", share_path)->required();
  eval->add_option("--polys", polys_path, "Target polynomials (default: x_0 ... x_{d-1})");
  eval->add_option("--out", out_path);

  std::vector<std::string> outputs;
  auto* rec = app.add_subcommand("rec", "Reconstruct from all output shares");
  rec->add_option("--scheme", scheme_path)->required();
  rec->add_option("--outputs", outputs)->required();

  std::string mode = "sampled";
  std::uint64_t trials = 1000;
  unsigned threads = 1;
  bool as_json = false, no_rank = false;
  auto* verify = app.add_subcommand("verify", "Run every check on a scheme file");
  verify->add_option("--scheme", scheme_path)->required();
  verify->add_option("--mode", mode)->check(CLI::IsMember({"exhaustive", "sampled"}));
  verify->add_option("--trials", trials);
  verify->add_option("--seed", seed);
  verify->add_option("--threads", threads);
  verify->add_flag("--json", as_json);
  verify->add_flag("--no-rank", no_rank, "Skip the dense rank of S");

  bool appendix_b = false;
  auto* demo = app.add_subcommand("demo", "Walk through the three-server example");
  demo->add_flag("--appendix-b", appendix_b, "The q=2, s=3, t=d=m=1 example")->required();

  std::uint64_t bq = 2;
  int bs = 0, bd = 1, bt = 1, max_j = 0;
  auto* bounds = app.add_subcommand("bounds", "Classify amortization parameters");
  bounds->add_option("--q", bq)->required();
  bounds->add_option("--s", bs)->required();
  bounds->add_option("--d", bd)->required();
  bounds->add_option("--t", bt)->required();
  bounds->add_option("--max-j", max_j);

  CLI11_PARSE(app, argc, argv);

  try {
    if (*construct) return cmd_construct(ca);
    if (*share) return cmd_share(scheme_path, secrets_path, seed, out_dir);
    if (*eval) return cmd_eval(scheme_path, share_path, polys_path, out_path);
    if (*rec) return cmd_rec(scheme_path, outputs);
    if (*verify) return cmd_verify(scheme_path, mode, trials, seed, threads, as_json, no_rank);
    if (*demo) return cmd_demo();
    if (*bounds) return cmd_bounds(bq, bs, bd, bt, max_j);
  } catch (const lwhss::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
