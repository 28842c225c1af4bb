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

#include "hsagg/cli.hpp"

#include <cstdint>
#include <optional>
#include <utility>

#include "CLI11.hpp"
#include "hsagg/audit.hpp"
#include "hsagg/errors.hpp"
#include "hsagg/prng.hpp"
#include "hsagg/protocol.hpp"
#include "hsagg/rates.hpp"
#include "hsagg/scheme.hpp"
#include "hsagg/serialize.hpp"

namespace hsagg::cli {
namespace {

struct TopologyFlags {
  uint32_t U = 0;
  uint32_t V = 0;
  uint32_t G = 0;
};

void add_topology(CLI::App* cmd, TopologyFlags& t) {
  cmd->add_option("--U", t.U, "number of relays (>= 2)")->required();
  cmd->add_option("--V", t.V, "users per relay (>= 1)")->required();
  cmd->add_option("--G", t.G, "group size (1..UV)")->required();
}

std::string rate_tuple_text(const RateTuple& r) {
  return "(" + r.r_x.to_string() + ", " + r.r_y.to_string() + ", " +
         r.r_s.to_string() + ")";
}

// Writes the scheme, then reloads the bytes and checks they describe the
// same scheme and re-serialize identically.
void write_validated_scheme(const PrecodingScheme& s, const std::string& path,
                            std::ostream& out) {
  const std::string text = save_scheme(s);
  const PrecodingScheme reloaded = load_scheme(text);
  if (!(reloaded == s) || save_scheme(reloaded) != text) {
    throw Error("scheme serialization did not round-trip");
  }
  if (path.empty()) {
    out << text;
  } else {
    write_file(path, text);
  }
}

void print_scheme_summary(const PrecodingScheme& s, std::ostream& out) {
  const Topology& t = s.topo();
  out << "scheme U=" << t.U << " V=" << t.V << " G=" << t.G
      << " q=" << s.field().modulus() << " regime "
      << regime_name(s.dims().regime) << " L=" << s.dims().L
      << " L_S=" << s.dims().L_S << "\n";
  out << "retries used: " << s.provenance().retries_used << "\n";
  out << "achieved rates: " << rate_tuple_text(rate_audit(s).achieved) << "\n";
}

int cmd_rates(const TopologyFlags& f, std::ostream& out, std::ostream& err) {
  const Topology t{f.U, f.V, f.G};
  t.validate();
  if (!check_feasible(t)) {
    out << "feasible: false\n";
    err << "infeasible: G=1\n";
    return kExitFailed;
  }
  const KeyRateBounds b = key_rate_bounds(t);
  const RateTuple r = optimal_rates(t);
  const SchemeDims d = classify_regime(t);
  out << "feasible: true\n";
  out << "relay bound: " << t.V << "/" << b.relay_keys << " = "
      << b.relay.to_string() << "\n";
  out << "server bound: " << (t.U - 1) << "/" << b.server_keys << " = "
      << b.server.to_string() << "\n";
  out << "r_x = " << r.r_x.to_string() << "\n";
  out << "r_y = " << r.r_y.to_string() << "\n";
  out << "r_s = " << r.r_s.to_string() << "\n";
  out << "regime " << regime_name(d.regime) << ", L=" << d.L
      << ", L_S=" << d.L_S << "\n";
  return kExitOk;
}

void print_oracle(const char* label, const OracleCheck& o, std::ostream& out) {
  out << label << ": ";
  switch (o.status) {
    case OracleStatus::kNotRun:
      out << "not run\n";
      return;
    case OracleStatus::kSkippedOverCap:
      out << "skipped (q^" << o.required_exponent << " states over cap)\n";
      return;
    case OracleStatus::kComputed:
      break;
  }
  const MaskDistribution& d = *o.distribution;
  out << "entropy " << d.entropy << " (target " << o.expected << ") over "
      << d.states << " states, " << (d.uniform() ? "uniform" : "non-uniform")
      << (o.pass() ? " PASS" : " FAIL") << "\n";
}

int cmd_verify(const std::string& path, const AuditOptions& options,
               const std::string& report_path, std::ostream& out) {
  const PrecodingScheme s = load_scheme(read_file(path));
  const AuditReport r = full_audit(s, options);
  print_scheme_summary(s, out);
  out << "zero-sum: " << (r.zero_sum ? "PASS" : "FAIL") << "\n";
  for (size_t u = 0; u < r.relay_ranks.size(); ++u) {
    out << "relay " << u + 1 << " rank " << r.relay_ranks[u].computed << "/"
        << r.relay_ranks[u].expected
        << (r.relay_ranks[u].pass() ? " PASS" : " FAIL") << "\n";
  }
  out << "server rank " << r.server_rank.computed << "/"
      << r.server_rank.expected << (r.server_rank.pass() ? " PASS" : " FAIL")
      << "\n";
  out << "correctness fuzz: " << r.fuzz_passed << "/" << r.fuzz_rounds << "\n";
  for (size_t u = 0; u < r.relay_oracles.size(); ++u) {
    const std::string label = "relay " + std::to_string(u + 1) + " oracle";
    print_oracle(label.c_str(), r.relay_oracles[u], out);
  }
  print_oracle("server oracle", r.server_oracle, out);
  if (r.rates) {
    out << "rates: achieved " << rate_tuple_text(r.rates->achieved)
        << " optimal " << rate_tuple_text(r.rates->optimal)
        << (r.rates->pass ? " PASS" : " FAIL") << "\n";
  }
  out << (r.passed() ? "audit PASSED" : "audit FAILED") << "\n";
  if (!report_path.empty()) {
    write_file(report_path, to_canonical_text(audit_report_to_json(r, options)));
  }
  return r.passed() ? kExitOk : kExitFailed;
}

int cmd_simulate(const std::string& path, uint64_t rounds, uint64_t seed,
                 const std::string& out_path, std::ostream& out) {
  const PrecodingScheme s = load_scheme(read_file(path));
  std::vector<Transcript> transcripts;
  uint64_t correct = 0;
  for (uint64_t r = 0; r < rounds; ++r) {
    const RoundSeeds seeds = round_seeds(seed, r);
    Transcript t = run_round(s, seeds.input_seed, seeds.key_seed);
    if (t.correct()) ++correct;
    if (!out_path.empty()) transcripts.push_back(std::move(t));
  }
  out << "correct: " << correct << "/" << rounds << "\n";
  if (!out_path.empty()) {
    write_file(out_path, to_canonical_text(transcripts_to_json(transcripts, seed)));
  }
  return correct == rounds ? kExitOk : kExitFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Hierarchical secure aggregation with groupwise keys"};
  app.require_subcommand(1);

  TopologyFlags rates_flags;
  auto* rates = app.add_subcommand("rates", "print the optimal rate region");
  add_topology(rates, rates_flags);

  TopologyFlags build_flags;
  uint64_t build_q = kDefaultRandomModulus;
  uint64_t build_seed = 0;
  uint64_t build_retries = 16;
  std::string build_out;
  auto* build = app.add_subcommand("build", "seeded random construction");
  add_topology(build, build_flags);
  build->add_option("--q", build_q, "prime field modulus")->capture_default_str();
  build->add_option("--seed", build_seed, "construction seed")->capture_default_str();
  build->add_option("--max-retries", build_retries, "resampling attempts after the first")
      ->capture_default_str();
  build->add_option("--out", build_out, "scheme file (stdout if omitted)");

  int example_id = 0;
  std::string example_out;
  auto* example = app.add_subcommand("example", "write a worked-example scheme");
  example->add_option("--id", example_id, "1 or 2")->required()->check(CLI::IsMember({1, 2}));
  example->add_option("--out", example_out, "scheme file (stdout if omitted)");

  std::string verify_path;
  std::string verify_out;
  AuditOptions audit;
  audit.run_oracle = false;
  auto* verify = app.add_subcommand("verify", "audit a scheme file");
  verify->add_option("scheme", verify_path, "scheme file")->required();
  verify->add_flag("--oracle", audit.run_oracle, "run the exhaustive entropy oracles");
  verify->add_option("--fuzz-rounds", audit.fuzz_rounds, "correctness rounds")
      ->capture_default_str();
  verify->add_option("--cap", audit.oracle_cap, "oracle state cap")->capture_default_str();
  verify->add_option("--seed", audit.seed, "fuzzing seed")->capture_default_str();
  verify->add_option("--workers", audit.workers, "oracle threads")->capture_default_str();
  verify->add_option("--out", verify_out, "audit report file");

  std::string sim_path;
  std::string sim_out;
  uint64_t sim_rounds = 100;
  uint64_t sim_seed = 0;
  auto* simulate = app.add_subcommand("simulate", "run aggregation rounds");
  simulate->add_option("scheme", sim_path, "scheme file")->required();
  simulate->add_option("--rounds", sim_rounds, "number of rounds")->capture_default_str();
  simulate->add_option("--seed", sim_seed, "session seed")->capture_default_str();
  simulate->add_option("--out", sim_out, "transcript file");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (rates->parsed()) return cmd_rates(rates_flags, out, err);
    if (build->parsed()) {
      const Topology t{build_flags.U, build_flags.V, build_flags.G};
      t.validate();
      if (!check_feasible(t)) {
        err << "infeasible: G=1\n";
        return kExitFailed;
      }
      const ProblemConfig cfg{t, PrimeField(build_q)};
      const PrecodingScheme s = build_random(cfg, build_seed, build_retries);
      write_validated_scheme(s, build_out, out);
      if (!build_out.empty()) print_scheme_summary(s, out);
      return kExitOk;
    }
    if (example->parsed()) {
      const PrecodingScheme s =
          example_id == 1 ? build_example1() : build_example2();
      write_validated_scheme(s, example_out, out);
      if (!example_out.empty()) print_scheme_summary(s, out);
      return kExitOk;
    }
    if (verify->parsed()) return cmd_verify(verify_path, audit, verify_out, out);
    if (simulate->parsed()) {
      return cmd_simulate(sim_path, sim_rounds, sim_seed, sim_out, out);
    }
  } catch (const ConstructionFailed& e) {
    err << "error: " << e.what() << "\n";
    return kExitFailed;
  } catch (const Infeasible& e) {
    err << e.what() << "\n";
    return kExitFailed;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace hsagg::cli
