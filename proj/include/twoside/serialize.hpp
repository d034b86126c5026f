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

#ifndef TWOSIDE_SERIALIZE_HPP
#define TWOSIDE_SERIALIZE_HPP

#include <cstdint>
#include <optional>

#include <json.hpp>

#include "twoside/digital_kex.hpp"
#include "twoside/twisted_kex.hpp"

namespace twoside {

using json = nlohmann::json;

// All *_from_json functions throw std::invalid_argument on malformed input.

json to_json(DigitalValue v);
DigitalValue digital_from_json(const json& j);

json to_json(const DigitalMatrix& m);
DigitalMatrix digital_matrix_from_json(const json& j);

json to_json(const DigitalCirculant& c);
DigitalCirculant digital_circulant_from_json(const json& j);

json to_json(const DigitalSystem& sys);
DigitalSystem digital_system_from_json(const json& j);

json to_json(const FieldCtx& field);
FieldCtx field_from_json(const json& j);

json to_json(const TwistedRing& ring, const TwistedElement& a);
/// Checks that the embedded m and field match `ring`.
TwistedElement twisted_element_from_json(const TwistedRing& ring, const json& j);

/// Transcript with public fields; the "private" block only when requested.
json to_json(const DigitalTranscript& t, std::uint64_t seed, bool include_secrets);
json to_json(const TwistedTranscript& t, std::uint64_t seed, bool include_secrets);

/// Public view of a digital transcript: params, alice_pk, bob_pk.
struct DigitalPublicView {
  DigitalParams params;
  DigitalMatrix alice_pk;
  DigitalMatrix bob_pk;
};

struct TwistedPublicView {
  TwistedParams params;
  TwistedElement alice_pk;
  TwistedElement bob_pk;
};

DigitalPublicView digital_public_from_json(const json& j);
TwistedPublicView twisted_public_from_json(const json& j);

/// private.shared_key, if the transcript carries it.
std::optional<DigitalMatrix> digital_stored_key(const json& j);
std::optional<TwistedElement> twisted_stored_key(const TwistedRing& ring, const json& j);

}  // namespace twoside

#endif  // TWOSIDE_SERIALIZE_HPP
