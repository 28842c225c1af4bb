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

#include "hsagg/serialize.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <set>
#include <sstream>
#include <utility>

#include "hsagg/errors.hpp"
#include "hsagg/prng.hpp"

namespace hsagg {
namespace {

constexpr uint64_t kMaxExactDouble = uint64_t{1} << 53;

bool is_inline(const Json& j) {
  if (j.is_object()) return j.empty();
  if (!j.is_array()) return true;
  return std::all_of(j.begin(), j.end(),
                     [](const Json& e) { return !e.is_object() && is_inline(e); });
}

void write_inline(const Json& j, std::string& out) {
  if (j.is_array()) {
    out += '[';
    bool first = true;
    for (const Json& e : j) {
      if (!first) out += ", ";
      first = false;
      write_inline(e, out);
    }
    out += ']';
    return;
  }
  out += j.dump();
}

void write(const Json& j, int indent, std::string& out) {
  if (is_inline(j)) {
    write_inline(j, out);
    return;
  }
  const std::string pad(indent + 2, ' ');
  if (j.is_object()) {
    out += "{\n";
    bool first = true;
    for (auto it = j.begin(); it != j.end(); ++it) {
      if (!first) out += ",\n";
      first = false;
      out += pad;
      out += Json(it.key()).dump();
      out += ": ";
      write(it.value(), indent + 2, out);
    }
    out += '\n' + std::string(indent, ' ') + '}';
    return;
  }
  out += "[\n";
  bool first = true;
  for (const Json& e : j) {
    if (!first) out += ",\n";
    first = false;
    out += pad;
    write(e, indent + 2, out);
  }
  out += '\n' + std::string(indent, ' ') + ']';
}

const Json& member(const Json& j, std::string_view key) {
  if (!j.is_object()) throw ParseError("expected an object around '" + std::string(key) + "'");
  auto it = j.find(key);
  if (it == j.end()) throw ParseError("missing field '" + std::string(key) + "'");
  return *it;
}

uint32_t decode_u32(const Json& j, std::string_view what) {
  uint64_t v = decode_uint(j, what);
  if (v > UINT32_MAX) throw ParseError(std::string(what) + " is too large");
  return static_cast<uint32_t>(v);
}

std::string decode_string(const Json& j, std::string_view what) {
  if (!j.is_string()) throw ParseError(std::string(what) + " must be a string");
  return j.get<std::string>();
}

Json user_to_json(UserId u) { return Json::array({u.u, u.v}); }

UserId user_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 2) {
    throw ParseError("user must be a [u, v] pair");
  }
  return UserId{decode_u32(j[0], "u"), decode_u32(j[1], "v")};
}

Json values_to_json(const Mat& m) {
  Json arr = Json::array();
  for (Felt e : m.entries()) arr.push_back(encode_uint(e.value));
  return arr;
}

Json vectors_to_json(std::span<const Mat> vs) {
  Json arr = Json::array();
  for (const Mat& v : vs) arr.push_back(values_to_json(v));
  return arr;
}

Json rational_to_json(const Rational& r) { return r.to_string(); }

Json rates_to_json(const RateTuple& r) {
  Json j = Json::object();
  j["r_x"] = rational_to_json(r.r_x);
  j["r_y"] = rational_to_json(r.r_y);
  j["r_s"] = rational_to_json(r.r_s);
  return j;
}

Json rank_to_json(const RankCheck& r) {
  Json j = Json::object();
  j["expected"] = r.expected;
  j["computed"] = r.computed;
  j["pass"] = r.pass();
  return j;
}

std::string_view oracle_status_name(OracleStatus s) {
  switch (s) {
    case OracleStatus::kComputed:
      return "computed";
    case OracleStatus::kSkippedOverCap:
      return "skipped-infeasible";
    case OracleStatus::kNotRun:
      return "not-run";
  }
  return "not-run";
}

Json oracle_to_json(const OracleCheck& o) {
  Json j = Json::object();
  j["status"] = oracle_status_name(o.status);
  j["expected_entropy"] = o.expected;
  j["state_exponent"] = o.required_exponent;
  if (o.distribution) {
    const MaskDistribution& d = *o.distribution;
    j["states"] = encode_uint(d.states);
    j["support"] = encode_uint(d.support);
    j["uniform"] = d.uniform();
    j["entropy"] = d.entropy;
  }
  j["pass"] = o.pass();
  return j;
}

}  // namespace

Json encode_uint(uint64_t v) {
  if (v >= kMaxExactDouble) return std::to_string(v);
  return v;
}

uint64_t decode_uint(const Json& j, std::string_view what) {
  if (j.is_number_unsigned()) return j.get<uint64_t>();
  if (j.is_number_integer()) {
    int64_t v = j.get<int64_t>();
    if (v < 0) throw ParseError(std::string(what) + " must be non-negative");
    return static_cast<uint64_t>(v);
  }
  if (j.is_string()) {
    const std::string& s = j.get_ref<const std::string&>();
    uint64_t v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) {
      throw ParseError(std::string(what) + ": '" + s + "' is not an integer");
    }
    return v;
  }
  throw ParseError(std::string(what) + " must be an integer");
}

std::string to_canonical_text(const Json& j) {
  std::string out;
  write(j, 0, out);
  out += '\n';
  return out;
}

Json parse_json_text(std::string_view text) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const Json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
}

Json scheme_to_json(const PrecodingScheme& s) {
  const Topology& t = s.topo();
  Json j = Json::object();
  j["format_version"] = kFormatVersion;
  j["prng_id"] = s.provenance().prng_id.empty() ? std::string(kPrngId)
                                                : s.provenance().prng_id;
  j["cfg"] = Json::object();
  j["cfg"]["U"] = t.U;
  j["cfg"]["V"] = t.V;
  j["cfg"]["G"] = t.G;
  j["cfg"]["q"] = encode_uint(s.field().modulus());
  j["dims"] = Json::object();
  j["dims"]["regime"] = regime_name(s.dims().regime);
  j["dims"]["L"] = s.dims().L;
  j["dims"]["L_S"] = s.dims().L_S;
  Json order = Json::array();
  for (const Group& g : s.groups()) {
    Json members = Json::array();
    for (UserId m : g.members) members.push_back(user_to_json(m));
    order.push_back(std::move(members));
  }
  j["group_order"] = std::move(order);
  Json blocks = Json::array();
  for (size_t g = 0; g < s.groups().size(); ++g) {
    const Group& group = s.groups()[g];
    for (size_t p = 0; p < group.size(); ++p) {
      const Mat& m = s.group_blocks(g)[p];
      Json b = Json::object();
      b["group_index"] = g;
      b["user"] = user_to_json(group.members[p]);
      b["rows"] = m.rows();
      b["cols"] = m.cols();
      b["matrix"] = values_to_json(m);
      blocks.push_back(std::move(b));
    }
  }
  j["blocks"] = std::move(blocks);
  j["provenance"] = Json::object();
  j["provenance"]["construction"] = construction_name(s.provenance().kind);
  j["provenance"]["seed"] = encode_uint(s.provenance().seed);
  j["provenance"]["retries_used"] = s.provenance().retries_used;
  return j;
}

PrecodingScheme scheme_from_json(const Json& j) {
  if (decode_uint(member(j, "format_version"), "format_version") !=
      static_cast<uint64_t>(kFormatVersion)) {
    throw ParseError("unsupported format_version");
  }
  const std::string prng_id = decode_string(member(j, "prng_id"), "prng_id");
  const Json& cfg_j = member(j, "cfg");
  ProblemConfig cfg = [&] {
    const Topology t{decode_u32(member(cfg_j, "U"), "U"),
                     decode_u32(member(cfg_j, "V"), "V"),
                     decode_u32(member(cfg_j, "G"), "G")};
    try {
      t.validate();
      return ProblemConfig{t, PrimeField(decode_uint(member(cfg_j, "q"), "q"))};
    } catch (const ParseError&) {
      throw;
    } catch (const Error& e) {
      throw ParseError(std::string("invalid cfg: ") + e.what());
    }
  }();
  const Json& dims_j = member(j, "dims");
  SchemeDims dims{parse_regime(decode_string(member(dims_j, "regime"), "regime")),
                  decode_uint(member(dims_j, "L"), "L"),
                  decode_uint(member(dims_j, "L_S"), "L_S")};
  if (dims.L < 1 || dims.L_S < 1) throw ParseError("L and L_S must be >= 1");

  const auto groups = enumerate_groups(cfg.topo.U, cfg.topo.V, cfg.topo.G);
  const Json& order = member(j, "group_order");
  if (!order.is_array() || order.size() != groups.size()) {
    throw ParseError("group_order does not list the canonical groups");
  }
  for (size_t g = 0; g < groups.size(); ++g) {
    const Json& members = order[g];
    if (!members.is_array() || members.size() != groups[g].size()) {
      throw ParseError("group_order entry " + std::to_string(g) +
                       " has the wrong size");
    }
    for (size_t p = 0; p < members.size(); ++p) {
      if (user_from_json(members[p]) != groups[g].members[p]) {
        throw ParseError("group_order entry " + std::to_string(g) +
                         " differs from the canonical enumeration");
      }
    }
  }

  std::vector<std::vector<std::optional<Mat>>> slots(groups.size());
  for (size_t g = 0; g < groups.size(); ++g) slots[g].resize(groups[g].size());
  const Json& blocks_j = member(j, "blocks");
  if (!blocks_j.is_array()) throw ParseError("blocks must be an array");
  for (const Json& b : blocks_j) {
    const uint64_t g = decode_uint(member(b, "group_index"), "group_index");
    if (g >= groups.size()) throw ParseError("group_index out of range");
    const UserId user = user_from_json(member(b, "user"));
    const size_t pos = groups[g].position_of(user);
    if (pos == groups[g].size()) {
      throw ParseError("block for a user outside group " + std::to_string(g));
    }
    if (slots[g][pos]) throw ParseError("duplicate block");
    const uint64_t rows = decode_uint(member(b, "rows"), "rows");
    const uint64_t cols = decode_uint(member(b, "cols"), "cols");
    if (rows != dims.L || cols != dims.L_S) {
      throw ParseError("block shape differs from L x L_S");
    }
    const Json& values_j = member(b, "matrix");
    if (!values_j.is_array()) throw ParseError("matrix must be an array");
    std::vector<uint64_t> values;
    values.reserve(values_j.size());
    for (const Json& v : values_j) values.push_back(decode_uint(v, "entry"));
    try {
      slots[g][pos] = Mat::from_values(rows, cols, cfg.field, values);
    } catch (const std::exception& e) {
      throw ParseError(std::string("bad matrix in group ") +
                       std::to_string(g) + ": " + e.what());
    }
  }
  std::vector<std::vector<Mat>> blocks(groups.size());
  for (size_t g = 0; g < groups.size(); ++g) {
    for (auto& slot : slots[g]) {
      if (!slot) throw ParseError("missing block in group " + std::to_string(g));
      blocks[g].push_back(std::move(*slot));
    }
  }

  const Json& prov_j = member(j, "provenance");
  Provenance prov;
  prov.kind = parse_construction(
      decode_string(member(prov_j, "construction"), "construction"));
  prov.seed = decode_uint(member(prov_j, "seed"), "seed");
  prov.retries_used = decode_uint(member(prov_j, "retries_used"), "retries_used");
  if (prov.kind == ConstructionKind::kRandom) prov.prng_id = prng_id;
  return PrecodingScheme(std::move(cfg), dims, std::move(blocks),
                         std::move(prov));
}

std::string save_scheme(const PrecodingScheme& s) {
  return to_canonical_text(scheme_to_json(s));
}

PrecodingScheme load_scheme(std::string_view text) {
  return scheme_from_json(parse_json_text(text));
}

Json key_material_to_json(const KeyMaterial& k) {
  Json j = Json::object();
  j["format_version"] = kFormatVersion;
  j["prng_id"] = k.prng_id;
  j["seed"] = encode_uint(k.seed);
  j["keys"] = vectors_to_json(k.keys);
  return j;
}

Json transcript_to_json(const Transcript& t, uint64_t round) {
  Json j = Json::object();
  j["round"] = round;
  j["input_seed"] = encode_uint(t.input_seed);
  j["key_seed"] = encode_uint(t.key_seed);
  j["W"] = vectors_to_json(t.inputs);
  j["X"] = vectors_to_json(t.user_messages);
  j["Y"] = vectors_to_json(t.relay_messages);
  j["decoded_sum"] = values_to_json(t.decoded_sum);
  j["correct"] = t.correct();
  return j;
}

Json transcripts_to_json(std::span<const Transcript> rounds, uint64_t seed) {
  Json j = Json::object();
  j["format_version"] = kFormatVersion;
  j["prng_id"] = std::string(kPrngId);
  j["seed"] = encode_uint(seed);
  Json arr = Json::array();
  for (size_t r = 0; r < rounds.size(); ++r) {
    arr.push_back(transcript_to_json(rounds[r], r));
  }
  j["rounds"] = std::move(arr);
  return j;
}

Json audit_report_to_json(const AuditReport& r, const AuditOptions& options) {
  Json j = Json::object();
  j["format_version"] = kFormatVersion;
  j["prng_id"] = std::string(kPrngId);
  j["passed"] = r.passed();
  j["options"] = Json::object();
  j["options"]["fuzz_rounds"] = options.fuzz_rounds;
  j["options"]["oracle_cap"] = encode_uint(options.oracle_cap);
  j["options"]["seed"] = encode_uint(options.seed);
  j["options"]["oracle"] = options.run_oracle;
  j["zero_sum"] = r.zero_sum;
  Json relays = Json::array();
  for (const RankCheck& c : r.relay_ranks) relays.push_back(rank_to_json(c));
  j["relay_ranks"] = std::move(relays);
  j["server_rank"] = rank_to_json(r.server_rank);
  j["fuzz"] = Json::object();
  j["fuzz"]["rounds"] = r.fuzz_rounds;
  j["fuzz"]["passed"] = r.fuzz_passed;
  Json oracles = Json::array();
  for (const OracleCheck& o : r.relay_oracles) oracles.push_back(oracle_to_json(o));
  j["relay_oracles"] = std::move(oracles);
  j["server_oracle"] = oracle_to_json(r.server_oracle);
  if (r.rates) {
    j["rates"] = Json::object();
    j["rates"]["achieved"] = rates_to_json(r.rates->achieved);
    j["rates"]["optimal"] = rates_to_json(r.rates->optimal);
    j["rates"]["pass"] = r.rates->pass;
  } else {
    j["rates"] = nullptr;
  }
  return j;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error("cannot write '" + path + "'");
  out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
  if (!out) throw Error("write to '" + path + "' failed");
}

}  // namespace hsagg
