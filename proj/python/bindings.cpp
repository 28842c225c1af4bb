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

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "hsagg/audit.hpp"
#include "hsagg/combi.hpp"
#include "hsagg/errors.hpp"
#include "hsagg/gf.hpp"
#include "hsagg/linalg.hpp"
#include "hsagg/protocol.hpp"
#include "hsagg/rates.hpp"
#include "hsagg/scheme.hpp"
#include "hsagg/serialize.hpp"

namespace py = pybind11;
using namespace hsagg;

namespace {

using Rows = std::vector<std::vector<uint64_t>>;

Rows to_rows(const Mat& m) {
  Rows out(m.rows(), std::vector<uint64_t>(m.cols()));
  for (size_t r = 0; r < m.rows(); ++r) {
    for (size_t c = 0; c < m.cols(); ++c) out[r][c] = m.at(r, c).value;
  }
  return out;
}

Mat from_rows(const Rows& rows, uint64_t q) {
  const size_t cols = rows.empty() ? 0 : rows.front().size();
  std::vector<uint64_t> flat;
  for (const auto& r : rows) {
    if (r.size() != cols) throw DimensionMismatch("ragged rows");
    flat.insert(flat.end(), r.begin(), r.end());
  }
  return Mat::from_values(rows.size(), cols, PrimeField(q), flat);
}

std::vector<uint64_t> to_vector(const Mat& v) { return v.values(); }

std::vector<std::vector<uint64_t>> to_vectors(const std::vector<Mat>& vs) {
  std::vector<std::vector<uint64_t>> out;
  for (const Mat& v : vs) out.push_back(v.values());
  return out;
}

py::tuple rational(const Rational& r) { return py::make_tuple(r.num(), r.den()); }

py::tuple rate_tuple(const RateTuple& r) {
  return py::make_tuple(rational(r.r_x), rational(r.r_y), rational(r.r_s));
}

py::dict distribution(const MaskDistribution& d) {
  py::dict out;
  out["modulus"] = d.modulus;
  out["dimension"] = d.dimension;
  out["states"] = d.states;
  out["support"] = d.support;
  out["uniform"] = d.uniform();
  out["full_uniform"] = d.full_uniform();
  out["entropy"] = d.entropy;
  return out;
}

std::vector<std::vector<std::pair<uint32_t, uint32_t>>> groups_list(
    const std::vector<Group>& groups) {
  std::vector<std::vector<std::pair<uint32_t, uint32_t>>> out;
  for (const Group& g : groups) {
    auto& row = out.emplace_back();
    for (UserId m : g.members) row.emplace_back(m.u, m.v);
  }
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Hierarchical secure aggregation with groupwise keys (C++ core)";

  auto error = py::register_exception<Error>(m, "Error");
  py::register_exception<NotPrime>(m, "NotPrime", error.ptr());
  py::register_exception<DivisionByZero>(m, "DivisionByZero", error.ptr());
  py::register_exception<DimensionMismatch>(m, "DimensionMismatch", error.ptr());
  py::register_exception<BadGroupSize>(m, "BadGroupSize", error.ptr());
  py::register_exception<Infeasible>(m, "Infeasible", error.ptr());
  py::register_exception<InvalidConfig>(m, "InvalidConfig", error.ptr());
  py::register_exception<ConstructionFailed>(m, "ConstructionFailed", error.ptr());
  py::register_exception<StateSpaceTooLarge>(m, "StateSpaceTooLarge", error.ptr());
  py::register_exception<ParseError>(m, "ParseError", error.ptr());
  py::register_exception<Overflow>(m, "Overflow", error.ptr());

  py::class_<PrimeField>(m, "PrimeField")
      .def(py::init<uint64_t>(), py::arg("q"))
      .def_property_readonly("modulus", &PrimeField::modulus)
      .def("add", [](const PrimeField& f, uint64_t a, uint64_t b) {
        return f.add(f.element(a), f.element(b)).value;
      })
      .def("mul", [](const PrimeField& f, uint64_t a, uint64_t b) {
        return f.mul(f.element(a), f.element(b)).value;
      })
      .def("inv", [](const PrimeField& f, uint64_t a) {
        return f.inv(f.element(a)).value;
      })
      .def("pow", [](const PrimeField& f, uint64_t b, uint64_t e) {
        return f.pow(f.element(b), e).value;
      });
  m.def("make_field", &make_field, py::arg("q"));
  m.def("is_prime", &is_prime, py::arg("n"));

  m.def("rank", [](const Rows& rows, uint64_t q) { return rank(from_rows(rows, q)); },
        py::arg("rows"), py::arg("q"), "Rank over GF(q) of a list-of-rows matrix.");

  m.def("binom_sat", &binom_sat, py::arg("n"), py::arg("k"));
  m.def("enumerate_groups", [](uint32_t U, uint32_t V, uint32_t G) {
    return groups_list(enumerate_groups(U, V, G));
  }, py::arg("U"), py::arg("V"), py::arg("G"));

  m.def("check_feasible", [](uint32_t U, uint32_t V, uint32_t G) {
    return check_feasible(Topology{U, V, G});
  }, py::arg("U"), py::arg("V"), py::arg("G"));
  m.def("optimal_rates_raw", [](uint32_t U, uint32_t V, uint32_t G) {
    return rate_tuple(optimal_rates(Topology{U, V, G}));
  }, py::arg("U"), py::arg("V"), py::arg("G"));
  m.def("classify_regime", [](uint32_t U, uint32_t V, uint32_t G) {
    const SchemeDims d = classify_regime(Topology{U, V, G});
    py::dict out;
    out["regime"] = std::string(regime_name(d.regime));
    out["L"] = d.L;
    out["L_S"] = d.L_S;
    return out;
  }, py::arg("U"), py::arg("V"), py::arg("G"));

  py::class_<PrecodingScheme>(m, "PrecodingScheme")
      .def_property_readonly("U", [](const PrecodingScheme& s) { return s.topo().U; })
      .def_property_readonly("V", [](const PrecodingScheme& s) { return s.topo().V; })
      .def_property_readonly("G", [](const PrecodingScheme& s) { return s.topo().G; })
      .def_property_readonly("q", [](const PrecodingScheme& s) { return s.field().modulus(); })
      .def_property_readonly("L", [](const PrecodingScheme& s) { return s.dims().L; })
      .def_property_readonly("L_S", [](const PrecodingScheme& s) { return s.dims().L_S; })
      .def_property_readonly("regime", [](const PrecodingScheme& s) {
        return std::string(regime_name(s.dims().regime));
      })
      .def_property_readonly("retries_used", [](const PrecodingScheme& s) {
        return s.provenance().retries_used;
      })
      .def_property_readonly("groups", [](const PrecodingScheme& s) {
        return groups_list(s.groups());
      })
      .def("block", [](const PrecodingScheme& s, size_t g, std::pair<uint32_t, uint32_t> user) {
        return to_rows(s.block(g, UserId{user.first, user.second}));
      }, py::arg("group_index"), py::arg("user"))
      .def("zero_sum_holds", &PrecodingScheme::zero_sum_holds)
      .def("to_json", &save_scheme)
      .def_static("from_json", [](const std::string& text) { return load_scheme(text); })
      .def("__eq__", [](const PrecodingScheme& a, const PrecodingScheme& b) { return a == b; });

  m.def("build_example1", &build_example1);
  m.def("build_example2", &build_example2);
  m.def("build_random", [](uint32_t U, uint32_t V, uint32_t G, uint64_t q, uint64_t seed,
                           uint64_t max_retries) {
    return build_random(ProblemConfig::make(U, V, G, q), seed, max_retries);
  }, py::arg("U"), py::arg("V"), py::arg("G"), py::arg("q") = kDefaultRandomModulus,
     py::arg("seed") = 0, py::arg("max_retries") = 16);

  m.def("assemble_relay_matrix", [](const PrecodingScheme& s, uint32_t u) {
    return to_rows(assemble_relay_matrix(s, u));
  }, py::arg("scheme"), py::arg("u"));
  m.def("assemble_server_matrix", [](const PrecodingScheme& s) {
    return to_rows(assemble_server_matrix(s));
  }, py::arg("scheme"));

  m.def("verify_relay_rank", [](const PrecodingScheme& s, uint32_t u) {
    const RankCheck r = verify_relay_rank(s, u);
    return py::make_tuple(r.pass(), r.computed, r.expected);
  }, py::arg("scheme"), py::arg("u"));
  m.def("verify_server_rank", [](const PrecodingScheme& s) {
    const RankCheck r = verify_server_rank(s);
    return py::make_tuple(r.pass(), r.computed, r.expected);
  }, py::arg("scheme"));
  m.def("entropy_oracle_relay", [](const PrecodingScheme& s, uint32_t u, uint64_t cap) {
    MaskDistribution d;
    {
      py::gil_scoped_release release;
      d = entropy_oracle_relay(s, u, cap);
    }
    return distribution(d);
  }, py::arg("scheme"), py::arg("u"), py::arg("cap") = kDefaultOracleCap);
  m.def("entropy_oracle_server", [](const PrecodingScheme& s, uint64_t cap) {
    MaskDistribution d;
    {
      py::gil_scoped_release release;
      d = entropy_oracle_server(s, cap);
    }
    return distribution(d);
  }, py::arg("scheme"), py::arg("cap") = kDefaultOracleCap);
  m.def("rate_audit_raw", [](const PrecodingScheme& s) {
    const RateAudit a = rate_audit(s);
    return py::make_tuple(a.pass, rate_tuple(a.achieved), rate_tuple(a.optimal));
  }, py::arg("scheme"));
  m.def("full_audit_json", [](const PrecodingScheme& s, uint64_t fuzz_rounds,
                              uint64_t cap, uint64_t seed, bool oracle) {
    AuditOptions o;
    o.fuzz_rounds = fuzz_rounds;
    o.oracle_cap = cap;
    o.seed = seed;
    o.run_oracle = oracle;
    return audit_report_to_json(full_audit(s, o), o).dump();
  }, py::arg("scheme"), py::arg("fuzz_rounds") = kDefaultFuzzRounds,
     py::arg("cap") = kDefaultOracleCap, py::arg("seed") = 0, py::arg("oracle") = true);

  py::class_<KeyMaterial>(m, "KeyMaterial")
      .def_readonly("seed", &KeyMaterial::seed)
      .def_property_readonly("keys", [](const KeyMaterial& k) { return to_vectors(k.keys); });
  m.def("keygen", &keygen, py::arg("scheme"), py::arg("seed"));

  py::class_<Transcript>(m, "Transcript")
      .def_readonly("input_seed", &Transcript::input_seed)
      .def_readonly("key_seed", &Transcript::key_seed)
      .def_property_readonly("inputs", [](const Transcript& t) { return to_vectors(t.inputs); })
      .def_property_readonly("user_messages",
                             [](const Transcript& t) { return to_vectors(t.user_messages); })
      .def_property_readonly("relay_messages",
                             [](const Transcript& t) { return to_vectors(t.relay_messages); })
      .def_property_readonly("decoded_sum",
                             [](const Transcript& t) { return to_vector(t.decoded_sum); })
      .def("correct", &Transcript::correct);
  m.def("run_round", &run_round, py::arg("scheme"), py::arg("input_seed"),
        py::arg("key_seed"));
}
