/*
 * Copyright 2026 The hsagg Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *      http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef HSAGG_SERIALIZE_HPP_
#define HSAGG_SERIALIZE_HPP_

#include <cstdint>
#include <span>
#include <string>
#include <string_view>

#include "hsagg/audit.hpp"
#include "hsagg/protocol.hpp"
#include "hsagg/scheme.hpp"
#include "json.hpp"

namespace hsagg {

using Json = nlohmann::ordered_json;

inline constexpr int kFormatVersion = 1;

// Integers at or above 2^53 are written as decimal strings.
Json encode_uint(uint64_t v);
// Accepts either encoding. Throws ParseError.
uint64_t decode_uint(const Json& j, std::string_view what);

// Deterministic layout: objects one member per line, arrays with only
// scalar or inline-array elements on a single line. Ends with a newline.
std::string to_canonical_text(const Json& j);
// Throws ParseError with the parser diagnostic.
Json parse_json_text(std::string_view text);

Json scheme_to_json(const PrecodingScheme& s);
// Validates modulus, dims, the group order against the canonical
// enumeration, and every block's shape and entries. Throws ParseError.
PrecodingScheme scheme_from_json(const Json& j);

std::string save_scheme(const PrecodingScheme& s);
PrecodingScheme load_scheme(std::string_view text);

Json key_material_to_json(const KeyMaterial& k);
Json transcript_to_json(const Transcript& t, uint64_t round);
// A simulation session: the seed, prng id and one entry per round.
Json transcripts_to_json(std::span<const Transcript> rounds, uint64_t seed);

Json audit_report_to_json(const AuditReport& r, const AuditOptions& options);

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view contents);

}  // namespace hsagg

#endif  // HSAGG_SERIALIZE_HPP_
