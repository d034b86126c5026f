/*
 *   Copyright 2026 The twoside Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "twoside/serialize.hpp"

#include <stdexcept>
#include <string>

namespace twoside {

namespace {

const json& require(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key))
    throw std::invalid_argument(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

template <class T>
T require_as(const json& j, const char* key) {
  const json& v = require(j, key);
  try {
    return v.get<T>();
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("field \"") + key + "\": " + e.what());
  }
}

std::vector<FpWord> words_from_json(const json& j) {
  if (!j.is_array()) throw std::invalid_argument("expected an array of coefficients");
  std::vector<FpWord> out;
  for (const auto& w : j) {
    if (!w.is_number_integer() || w.get<std::int64_t>() < 0) throw std::invalid_argument("coefficients must be non-negative integers");
    out.push_back(w.get<FpWord>());
  }
  return out;
}

json secrets_block(const DigitalSecrets& s) {
  auto pair = [](const DigitalKeyPair& kp) { return json{{"a1", to_json(kp.a1)}, {"a2", to_json(kp.a2)}}; };
  return json{{"alice", pair(s.alice)}, {"bob", pair(s.bob)}, {"shared_key", to_json(s.shared_key)}};
}

json secrets_block(const TwistedRing& r, const TwistedSecrets& s) {
  auto pair = [&r](const TwistedKeyPair& kp) {
    return json{{"g", to_json(r, kp.g)}, {"k", to_json(r, kp.k)}};
  };
  return json{{"alice", pair(s.alice)}, {"bob", pair(s.bob)}, {"shared_key", to_json(r, s.shared_key)}};
}

void require_scheme(const json& j, const char* scheme) {
  if (require_as<std::string>(j, "scheme") != scheme)
    throw std::invalid_argument(std::string("transcript is not a ") + scheme + " transcript");
}

}  // namespace

json to_json(DigitalValue v) {
  if (v.is_infinite()) return "inf";
  return v.value();
}

DigitalValue digital_from_json(const json& j) {
  if (j.is_number_unsigned()) return DigitalValue{j.get<std::uint64_t>()};
  if (j.is_number_integer()) {
    if (j.get<std::int64_t>() < 0) throw std::invalid_argument("digital values must be non-negative");
    return DigitalValue{j.get<std::uint64_t>()};
  }
  if (j.is_string()) {
    try {
      return parse_digital(j.get<std::string>());
    } catch (const std::out_of_range& e) {
      throw std::invalid_argument(e.what());
    }
  }
  throw std::invalid_argument("digital value must be a number or \"inf\"");
}

json to_json(const DigitalMatrix& m) {
  json rows = json::array();
  for (const auto& row : m.rows()) {
    json r = json::array();
    for (const auto& v : row) r.push_back(to_json(v));
    rows.push_back(std::move(r));
  }
  return json{{"n", m.n()}, {"rows", std::move(rows)}};
}

DigitalMatrix digital_matrix_from_json(const json& j) {
  const auto n = require_as<std::size_t>(j, "n");
  const json& rows = require(j, "rows");
  if (!rows.is_array() || rows.size() != n) throw std::invalid_argument("matrix must have n rows");
  std::vector<std::vector<DigitalValue>> values;
  for (const auto& row : rows) {
    if (!row.is_array() || row.size() != n) throw std::invalid_argument("matrix rows must have n entries");
    auto& out = values.emplace_back();
    for (const auto& v : row) out.push_back(digital_from_json(v));
  }
  return DigitalMatrix::from_rows(values);
}

json to_json(const DigitalCirculant& c) {
  json col = json::array();
  for (const auto& v : c.first_column) col.push_back(to_json(v));
  return json{{"n", c.n()}, {"c", std::move(col)}};
}

DigitalCirculant digital_circulant_from_json(const json& j) {
  const auto n = require_as<std::size_t>(j, "n");
  const json& c = require(j, "c");
  if (!c.is_array() || c.size() != n) throw std::invalid_argument("circulant must list n entries");
  DigitalCirculant out;
  for (const auto& v : c) out.first_column.push_back(digital_from_json(v));
  return out;
}

json to_json(const DigitalSystem& sys) {
  json cols = json::array();
  for (const auto& col : sys.columns) {
    json c = json::array();
    for (const auto& v : col) c.push_back(to_json(v));
    cols.push_back(std::move(c));
  }
  json target = json::array();
  for (const auto& v : sys.target) target.push_back(to_json(v));
  return json{{"columns", std::move(cols)}, {"target", std::move(target)}};
}

DigitalSystem digital_system_from_json(const json& j) {
  DigitalSystem sys;
  const json& cols = require(j, "columns");
  const json& target = require(j, "target");
  if (!cols.is_array() || !target.is_array()) throw std::invalid_argument("columns and target must be arrays");
  for (const auto& col : cols) {
    if (!col.is_array()) throw std::invalid_argument("each column must be an array");
    auto& out = sys.columns.emplace_back();
    for (const auto& v : col) out.push_back(digital_from_json(v));
  }
  for (const auto& v : target) sys.target.push_back(digital_from_json(v));
  sys.validate();
  return sys;
}

json to_json(const FieldCtx& field) {
  return json{{"p", field.p()}, {"n", field.n()}, {"modulus", field.modulus()}, {"t", field.t().coeffs}};
}

FieldCtx field_from_json(const json& j) {
  const auto p = require_as<std::uint32_t>(j, "p");
  const auto n = require_as<std::size_t>(j, "n");
  Poly modulus = words_from_json(require(j, "modulus"));
  if (modulus.size() != n + 1) throw std::invalid_argument("modulus must have n + 1 coefficients");
  FieldElement t{words_from_json(require(j, "t"))};
  return FieldCtx::with_generator(p, std::move(modulus), std::move(t));
}

json to_json(const TwistedRing& ring, const TwistedElement& a) {
  ring.check(a);
  json coeffs = json::array();
  for (std::size_t g = 0; g < ring.size(); ++g) {
    if (ring.field().is_zero(a.coeffs[g])) continue;
    const DihedralElement e = ring.group_element(g);
    coeffs.push_back(json::array({e.i, e.k, a.coeffs[g].coeffs}));
  }
  return json{{"m", ring.m()}, {"field", to_json(ring.field())}, {"coeffs", std::move(coeffs)}};
}

TwistedElement twisted_element_from_json(const TwistedRing& ring, const json& j) {
  if (require_as<std::uint32_t>(j, "m") != ring.m()) throw std::invalid_argument("element has a different m");
  if (!(field_from_json(require(j, "field")) == ring.field()))
    throw std::invalid_argument("element lives in a different field");
  const json& coeffs = require(j, "coeffs");
  if (!coeffs.is_array()) throw std::invalid_argument("coeffs must be an array");
  TwistedElement out = ring.zero();
  for (const auto& entry : coeffs) {
    if (!entry.is_array() || entry.size() != 3 || !entry[0].is_number_integer() || !entry[1].is_number_integer())
      throw std::invalid_argument("coefficient entries are [i, k, [...]]");
    const auto i = entry[0].get<std::int64_t>();
    const auto k = entry[1].get<std::int64_t>();
    if (i < 0 || i >= static_cast<std::int64_t>(ring.m()) || k < 0 || k > 1)
      throw std::invalid_argument("group element out of range");
    auto words = words_from_json(entry[2]);
    for (auto w : words)
      if (w >= ring.field().p()) throw std::invalid_argument("coefficient not reduced mod p");
    out.coeffs[ring.index({static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(k)})] = ring.field().element(std::move(words));
  }
  return out;
}

json to_json(const DigitalTranscript& t, std::uint64_t seed, bool include_secrets) {
  json j{{"scheme", "digital"},
         {"seed", seed},
         {"params", {{"n", t.params.n}, {"entry_bound", t.params.entry_bound}, {"M", to_json(t.params.m)}}},
         {"alice_pk", to_json(t.alice_pk)},
         {"bob_pk", to_json(t.bob_pk)},
         {"keys_agree", t.keys_agree}};
  if (include_secrets && t.secrets) j["private"] = secrets_block(*t.secrets);
  return j;
}

json to_json(const TwistedTranscript& t, std::uint64_t seed, bool include_secrets) {
  const TwistedRing& r = t.params.ring;
  const FieldCtx& f = r.field();
  json j{{"scheme", "twisted"},
         {"seed", seed},
         {"params",
          {{"p", f.p()},
           {"n", f.n()},
           {"m", r.m()},
           {"modulus", f.modulus()},
           {"t", f.t().coeffs},
           {"h", to_json(r, t.params.h)}}},
         {"alice_pk", to_json(r, t.alice_pk)},
         {"bob_pk", to_json(r, t.bob_pk)},
         {"keys_agree", t.keys_agree}};
  if (include_secrets && t.secrets) j["private"] = secrets_block(r, *t.secrets);
  return j;
}

DigitalPublicView digital_public_from_json(const json& j) {
  require_scheme(j, "digital");
  const json& params = require(j, "params");
  DigitalPublicView view;
  view.params.n = require_as<std::size_t>(params, "n");
  if (params.contains("entry_bound")) view.params.entry_bound = require_as<std::uint64_t>(params, "entry_bound");
  view.params.m = digital_matrix_from_json(require(params, "M"));
  view.params.validate();
  view.alice_pk = digital_matrix_from_json(require(j, "alice_pk"));
  view.bob_pk = digital_matrix_from_json(require(j, "bob_pk"));
  if (view.alice_pk.n() != view.params.n || view.bob_pk.n() != view.params.n)
    throw std::invalid_argument("public keys must be n x n");
  return view;
}

TwistedPublicView twisted_public_from_json(const json& j) {
  require_scheme(j, "twisted");
  const json& params = require(j, "params");
  FieldCtx field = field_from_json(params);
  const auto m = require_as<std::uint32_t>(params, "m");
  TwistedRing ring(std::move(field), m);
  TwistedElement h = twisted_element_from_json(ring, require(params, "h"));
  TwistedElement alice_pk = twisted_element_from_json(ring, require(j, "alice_pk"));
  TwistedElement bob_pk = twisted_element_from_json(ring, require(j, "bob_pk"));
  return TwistedPublicView{TwistedParams{std::move(ring), std::move(h)}, std::move(alice_pk), std::move(bob_pk)};
}

std::optional<DigitalMatrix> digital_stored_key(const json& j) {
  if (!j.contains("private") || !j.at("private").contains("shared_key")) return std::nullopt;
  return digital_matrix_from_json(j.at("private").at("shared_key"));
}

std::optional<TwistedElement> twisted_stored_key(const TwistedRing& ring, const json& j) {
  if (!j.contains("private") || !j.at("private").contains("shared_key")) return std::nullopt;
  return twisted_element_from_json(ring, j.at("private").at("shared_key"));
}

}  // namespace twoside
