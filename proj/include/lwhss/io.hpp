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

// JSON wire formats. Field elements travel as their integer encoding.

#ifndef LWHSS_IO_HPP_
#define LWHSS_IO_HPP_

#include <openssl/evp.h>

#include <array>
#include <cstdint>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "lwhss/codes.hpp"
#include "lwhss/error.hpp"
#include "lwhss/field.hpp"
#include "lwhss/hss.hpp"
#include "lwhss/linalg.hpp"
#include "lwhss/verify.hpp"

namespace lwhss::io {

using json = nlohmann::json;

namespace detail {

template <typename T>
T get(const json& j, const char* key) {
  require(j.is_object() && j.contains(key), Errc::kMalformedInput,
          std::string("missing key \"") + key + "\"");
  try {
    return j.at(key).get<T>();
  } catch (const json::exception& e) {
    fail(Errc::kMalformedInput, std::string("bad value for \"") + key + "\": " + e.what());
  }
}

}  // namespace detail

inline json to_json(const FieldSpec& f) {
  return {{"p", f.characteristic()}, {"e", f.degree()}, {"modulus", f.modulus()}};
}

inline FieldPtr field_from_json(const json& j) {
  const auto p = detail::get<std::uint32_t>(j, "p");
  const auto e = detail::get<int>(j, "e");
  if (j.contains("modulus")) {
    return FieldSpec::create(p, e, detail::get<std::vector<std::uint32_t>>(j, "modulus"));
  }
  return FieldSpec::create(p, e);
}

inline json to_json(const Matrix& m) {
  return {{"rows", m.rows()}, {"cols", m.cols()}, {"entries", m.to_rows()}};
}

inline Matrix matrix_from_json(const json& j, const FieldPtr& field) {
  const auto rows = detail::get<std::size_t>(j, "rows");
  const auto cols = detail::get<std::size_t>(j, "cols");
  const auto entries = detail::get<std::vector<std::vector<Elem>>>(j, "entries");
  require(entries.size() == rows, Errc::kMalformedInput, "entries row count mismatch");
  Matrix m(field, rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    require(entries[r].size() == cols, Errc::kMalformedInput, "entries column count mismatch");
    for (std::size_t c = 0; c < cols; ++c) {
      require(field->contains(entries[r][c]), Errc::kMalformedInput, "entry not in field");
      m(r, c) = entries[r][c];
    }
  }
  return m;
}

inline json to_json(const LabeledCode& code) {
  return {{"field", to_json(*code.field())},
          {"G", to_json(code.generator())},
          {"labels", code.labeling().labels()},
          {"s", code.servers()},
          {"j", code.block_size()}};
}

inline LabeledCode code_from_json(const json& j) {
  auto field = field_from_json(detail::get<json>(j, "field"));
  Matrix g = matrix_from_json(detail::get<json>(j, "G"), field);
  return LabeledCode(std::move(g), Labeling(detail::get<std::vector<int>>(j, "labels"),
                                            detail::get<int>(j, "s")));
}

inline json to_json(const BlockMatrix& a) {
  json blocks = json::array();
  for (int i = 0; i < a.r(); ++i) {
    json row = json::array();
    for (int k = 0; k < a.u(); ++k) row.push_back(to_json(a.block(i, k)));
    blocks.push_back(std::move(row));
  }
  return {{"field", to_json(*a.field())}, {"j", a.j()}, {"r", a.r()}, {"u", a.u()},
          {"blocks", std::move(blocks)}};
}

inline BlockMatrix block_matrix_from_json(const json& j) {
  auto field = field_from_json(detail::get<json>(j, "field"));
  const int bj = detail::get<int>(j, "j"), r = detail::get<int>(j, "r"), u = detail::get<int>(j, "u");
  const auto& rows = j.at("blocks");
  require(rows.is_array() && rows.size() == static_cast<std::size_t>(r), Errc::kMalformedInput,
          "blocks must have r rows");
  std::vector<Matrix> blocks;
  for (const auto& row : rows) {
    require(row.is_array() && row.size() == static_cast<std::size_t>(u), Errc::kMalformedInput,
            "block rows must have u entries");
    for (const auto& b : row) blocks.push_back(matrix_from_json(b, field));
  }
  return BlockMatrix(field, bj, r, u, std::move(blocks));
}

inline json to_json(const SchemeParams& p) {
  return {{"q", p.q()}, {"s", p.s}, {"t", p.t}, {"d", p.d}, {"m", p.m}, {"l", p.l}, {"j", p.j}};
}

inline json to_json(const HssScheme& scheme) {
  const auto& space = scheme.monomials();
  const auto& family = scheme.family();
  json eval = json::array();
  for (const auto& e : scheme.eval_table()) {
    json subsets = json::array();
    for (auto k : space.subsets_of(e.monomial)) subsets.push_back(family.members(k));
    eval.push_back({{"r", e.r},
                    {"monomial", {{"instance", space.instance(e.monomial)}, {"subsets", subsets}}},
                    {"coeff", e.coeff}});
  }
  return {{"params", to_json(scheme.params())},
          {"code", to_json(scheme.code())},
          {"eval", std::move(eval)},
          {"seed_required", true}};
}

inline HssScheme scheme_from_json(const json& j, bool validate = true) {
  const json& pj = detail::get<json>(j, "params");
  LabeledCode code = code_from_json(detail::get<json>(j, "code"));
  require(code.field()->order() == detail::get<std::uint64_t>(pj, "q"), Errc::kMalformedInput,
          "params.q does not match the code field");
  SchemeParams p{code.field(),
                 detail::get<int>(pj, "s"),
                 detail::get<int>(pj, "t"),
                 detail::get<int>(pj, "d"),
                 detail::get<int>(pj, "m"),
                 detail::get<int>(pj, "l"),
                 detail::get<int>(pj, "j")};
  SubsetFamily family(p.s, p.t);
  MonomialSpace space(p, family);
  EvalTable table;
  for (const auto& e : detail::get<json>(j, "eval")) {
    const auto& mj = detail::get<json>(e, "monomial");
    Monomial mono{detail::get<int>(mj, "instance"), {}};
    for (const auto& members : detail::get<std::vector<std::vector<int>>>(mj, "subsets")) {
      auto idx = family.index_of(members);
      require(idx.has_value(), Errc::kMalformedInput, "unknown subset in monomial");
      mono.subsets.push_back(*idx);
    }
    table.push_back({detail::get<std::size_t>(e, "r"), space.encode(mono), detail::get<Elem>(e, "coeff")});
  }
  return HssScheme::from_parts(std::move(p), std::move(code), std::move(table), validate);
}

inline std::string sha256_hex(const std::string& data) {
  std::array<unsigned char, EVP_MAX_MD_SIZE> digest{};
  unsigned int len = 0;
  require(EVP_Digest(data.data(), data.size(), digest.data(), &len, EVP_sha256(), nullptr) == 1,
          Errc::kMalformedInput, "SHA-256 failed");
  static constexpr char kHex[] = "0123456789abcdef";
  std::string out;
  for (unsigned int k = 0; k < len; ++k) {
    out += kHex[digest[k] >> 4];
    out += kHex[digest[k] & 15];
  }
  return out;
}

// Hash of the canonical serialization: sorted keys, no whitespace.
inline std::string scheme_hash(const HssScheme& scheme) { return sha256_hex(to_json(scheme).dump()); }

inline json shares_to_json(const HssScheme& scheme, const ShareBundle& bundle, int server,
                           std::uint64_t seed) {
  const auto& family = scheme.family();
  json shares = json::array();
  for (int i = 0; i < bundle.instances(); ++i) {
    for (int k = 0; k < bundle.secrets(); ++k) {
      for (std::size_t T = 0; T < bundle.subsets(); ++T) {
        if (family.contains(T, server)) continue;
        shares.push_back({{"instance", i}, {"secret", k}, {"T", family.members(T)},
                          {"value", bundle.at(i, k, T)}});
      }
    }
  }
  return {{"server", server}, {"scheme_hash", scheme_hash(scheme)}, {"seed", seed},
          {"shares", std::move(shares)}};
}

inline ServerShares shares_from_json(const HssScheme& scheme, const json& j) {
  const auto& p = scheme.params();
  require(detail::get<std::string>(j, "scheme_hash") == scheme_hash(scheme),
          Errc::kSchemeHashMismatch, "share file was made for a different scheme");
  const int server = detail::get<int>(j, "server");
  require(server >= 1 && server <= p.s, Errc::kWrongServer, "server out of range");
  ServerShares out(server, p.l, p.shared_secrets(), scheme.family().size());
  for (const auto& e : detail::get<json>(j, "shares")) {
    auto idx = scheme.family().index_of(detail::get<std::vector<int>>(e, "T"));
    require(idx.has_value(), Errc::kMalformedInput, "unknown subset in share file");
    require(!scheme.family().contains(*idx, server), Errc::kWrongServer,
            "share for a subset containing the server");
    const auto v = detail::get<Elem>(e, "value");
    require(p.field->contains(v), Errc::kMalformedInput, "share value not in field");
    out.set(detail::get<int>(e, "instance"), detail::get<int>(e, "secret"), *idx, v);
  }
  return out;
}

inline json output_to_json(const HssScheme& scheme, int server, const Vector& z) {
  return {{"server", server}, {"scheme_hash", scheme_hash(scheme)}, {"z", z}};
}

struct OutputShare {
  int server;
  Vector z;
};

inline OutputShare output_from_json(const HssScheme& scheme, const json& j) {
  if (j.contains("scheme_hash")) {
    require(detail::get<std::string>(j, "scheme_hash") == scheme_hash(scheme),
            Errc::kSchemeHashMismatch, "output share was made for a different scheme");
  }
  return {detail::get<int>(j, "server"), detail::get<Vector>(j, "z")};
}

// [[x_0, ..., x_{m-1}], ...] with one row per instance, or {"secrets": ...}.
inline std::vector<Vector> secrets_from_json(const json& j) {
  const json& body = j.is_object() ? detail::get<json>(j, "secrets") : j;
  try {
    return body.get<std::vector<Vector>>();
  } catch (const json::exception& e) {
    fail(Errc::kMalformedInput, std::string("secrets: ") + e.what());
  }
}

// [[{"coeff": c, "vars": [k, ...]}, ...], ...], one polynomial per instance,
// or {"polys": ...}.
inline std::vector<Polynomial> polys_from_json(const json& j) {
  const json& body = j.is_object() ? detail::get<json>(j, "polys") : j;
  require(body.is_array(), Errc::kMalformedInput, "polys must be an array");
  std::vector<Polynomial> out;
  for (const auto& pj : body) {
    require(pj.is_array(), Errc::kMalformedInput, "each polynomial is an array of terms");
    Polynomial poly;
    for (const auto& tj : pj) {
      poly.push_back({tj.contains("coeff") ? detail::get<Elem>(tj, "coeff") : 1,
                      detail::get<std::vector<int>>(tj, "vars")});
    }
    out.push_back(std::move(poly));
  }
  return out;
}

inline json to_json(const CheckResult& c) {
  return {{"name", c.name}, {"pass", c.passed}, {"witness", c.witness}, {"work", c.work}};
}

inline json to_json(const VerificationReport& r) {
  json checks = json::array();
  for (const auto& c : r.checks) checks.push_back(to_json(c));
  return {{"pass", r.passed()}, {"checks", std::move(checks)}};
}

inline json read_file(const std::string& path) {
  std::ifstream in(path);
  require(in.good(), Errc::kMalformedInput, "cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    fail(Errc::kMalformedInput, path + ": " + e.what());
  }
}

inline void write_file(const std::string& path, const json& j) {
  std::ofstream out(path);
  require(out.good(), Errc::kMalformedInput, "cannot write " + path);
  out << j.dump(2) << '\n';
}

}  // namespace lwhss::io

#endif  // LWHSS_IO_HPP_
