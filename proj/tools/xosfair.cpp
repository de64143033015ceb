// Copyright 2026 The xosfair Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command-line front end: maximin shares, the two allocation algorithms,
// verification, instance generation and sampling.

#include <gmpxx.h>

#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "xosfair/algorithms.hpp"
#include "xosfair/errors.hpp"
#include "xosfair/generators.hpp"
#include "xosfair/io.hpp"
#include "xosfair/mms.hpp"
#include "xosfair/verify.hpp"

namespace {

using Json = nlohmann::ordered_json;
using namespace xosfair;

constexpr int kExitFailedVerification = 1;
constexpr int kExitBadInput = 2;
constexpr int kExitCapacity = 3;

std::string set_str(const ItemSet& items) {
  std::string out = "{";
  for (std::size_t k = 0; k < items.size(); ++k) out += (k ? "," : "") + ("b" + std::to_string(items[k] + 1));
  return out + "}";
}

Json set_json(const ItemSet& items) { return Json(items); }

void print_allocation(std::ostream& os, const Allocation& a, const std::string& indent) {
  for (std::size_t i = 0; i < a.agent_count(); ++i) {
    os << indent << "agent " << i << ": " << set_str(a.bundle(i)) << "\n";
  }
}

Json trace_json(const PhaseTrace& trace) {
  Json removals = Json::array();
  for (const auto& e : trace.removals) {
    removals.push_back(Json{{"step", e.step}, {"agent", e.agent}, {"items", set_json(e.items)}, {"value", e.value.str()}});
  }
  Json doc{{"removals", std::move(removals)}, {"leftovers", set_json(trace.leftovers)}};
  if (trace.welfare) {
    doc["welfare"] = Json{{"agents", trace.welfare->agents},
                          {"items", trace.welfare->items},
                          {"value", trace.welfare->welfare.str()}};
  }
  return doc;
}

void print_trace(std::ostream& os, const PhaseTrace& trace) {
  for (const auto& e : trace.removals) {
    os << "  step " << e.step << ": agent " << e.agent << " takes " << set_str(e.items) << " (normalized value "
       << e.value << ")\n";
  }
  if (trace.welfare) {
    os << "  welfare step: " << trace.welfare->agents << " agents, " << trace.welfare->items
       << " items, capped welfare " << trace.welfare->welfare << "\n";
  }
  if (!trace.leftovers.empty()) os << "  leftovers to agent 0: " << set_str(trace.leftovers) << "\n";
}

Rational parse_alpha(const std::string& text, const char* flag) {
  try {
    return Rational::parse(text);
  } catch (const std::exception& e) {
    throw InputError(std::string(flag) + ": " + e.what());
  }
}

int cmd_mms(const std::string& path, bool json, const EnumerationLimits& limits) {
  const InstanceFile file = parse_instance(read_file(path));
  const Instance& inst = file.instance;
  Json rows = Json::array();
  for (std::size_t i = 0; i < inst.agent_count(); ++i) {
    const MmsCertificate cert = mms(inst, i, limits);
    const Rational prop = proportional_share(inst, i);
    if (json) {
      Json parts = Json::array();
      for (const auto& b : cert.partition) parts.push_back(set_json(b));
      rows.push_back(Json{{"agent", i}, {"mms", cert.value.str()}, {"proportional", prop.str()}, {"partition", parts}});
    } else {
      std::cout << "agent " << i << ": MMS " << cert.value << " (proportional share " << prop << ")\n    witness:";
      for (const auto& b : cert.partition) std::cout << " " << set_str(b);
      std::cout << "\n";
    }
  }
  if (json) std::cout << Json{{"agents", rows}}.dump(2) << "\n";
  return 0;
}

int cmd_solve(const std::string& algorithm, const std::string& path, const std::string& out, bool json,
              const EnumerationLimits& limits) {
  const InstanceFile file = parse_instance(read_file(path));
  const Instance& inst = file.instance;
  Result result = Allocation(0, {});
  PhaseTrace trace;
  std::vector<Rational> factors;
  VerificationReport report;
  if (algorithm == "det") {
    DetRun run = run_deterministic(inst, limits);
    trace = run.trace;
    factors = run.normalization.factors;
    result = run.allocation;
    report = verify(inst, result, targets::kDetThreshold, std::nullopt, limits);
  } else {
    RandRun run = run_randomized(inst, limits);
    trace = run.trace;
    factors = run.normalization.factors;
    result = run.allocation;
    report = verify(inst, result, targets::kRandExPost, targets::kRandThreshold, limits);
  }
  report.normalization_factors = factors;
  if (!out.empty()) write_file(out, serialize_result(result));

  if (json) {
    Json doc{{"algorithm", algorithm},
             {"result", Json::parse(serialize_result(result))},
             {"trace", trace_json(trace)},
             {"report", Json::parse(report.to_json())}};
    std::cout << doc.dump(2) << "\n";
  } else {
    std::cout << "algorithm: " << algorithm << "\n";
    std::cout << "normalization factors (MMS, 1 for zero-MMS agents):";
    for (const auto& f : factors) std::cout << " " << f;
    std::cout << "\ntrace:\n";
    print_trace(std::cout, trace);
    if (const auto* a = std::get_if<Allocation>(&result)) {
      std::cout << "allocation:\n";
      print_allocation(std::cout, *a, "  ");
    } else {
      for (const auto& o : std::get<RandomizedAllocation>(result).support()) {
        std::cout << "outcome with probability " << o.probability << ":\n";
        print_allocation(std::cout, o.allocation, "  ");
      }
    }
    std::cout << report.to_text();
  }
  return report.passed() ? 0 : kExitFailedVerification;
}

int cmd_verify(const std::string& path, const std::string& result_path, const std::string& alpha,
               const std::string& ex_ante, bool json, const EnumerationLimits& limits) {
  const InstanceFile file = parse_instance(read_file(path));
  const Result result = parse_result(read_file(result_path));
  std::optional<Rational> ante;
  if (!ex_ante.empty()) ante = parse_alpha(ex_ante, "--ex-ante");
  const VerificationReport report = verify(file.instance, result, parse_alpha(alpha, "--alpha"), ante, limits);
  std::cout << (json ? report.to_json() : report.to_text());
  return report.passed() ? 0 : kExitFailedVerification;
}

int cmd_gen(const std::string& family, const GeneratorParams& params, const std::string& out) {
  const std::string text = serialize_instance(generate(family, params));
  if (out.empty()) {
    std::cout << text;
  } else {
    write_file(out, text);
  }
  return 0;
}

int cmd_bound2(const std::string& path, bool json, const EnumerationLimits& limits) {
  const InstanceFile file = parse_instance(read_file(path));
  const TwoAgentSplit split = best_two_agent_split(file.instance, limits);
  if (json) {
    std::cout << Json{{"value", split.value.str()}, {"first_bundle", set_json(split.first_bundle)}}.dump(2) << "\n";
  } else {
    std::cout << "max_S v_1(S) + v_2(M \\ S) = " << split.value << " at S = " << set_str(split.first_bundle)
              << "\nbest guarantee for both agents in expectation <= " << split.value / Rational(2) << "\n";
  }
  return 0;
}

int cmd_sample(const std::string& path, std::uint64_t seed, bool json, const EnumerationLimits& limits) {
  const InstanceFile file = parse_instance(read_file(path));
  const RandomizedAllocation r = alg_rand(file.instance, limits);

  // Exact draw: uniform integer below the common denominator, walked along the CDF.
  mpz_class denom = 1;
  for (const auto& o : r.support()) mpz_lcm(denom.get_mpz_t(), denom.get_mpz_t(), o.probability.get().get_den_mpz_t());
  gmp_randclass rng(gmp_randinit_mt);
  rng.seed(static_cast<unsigned long>(seed));
  const mpz_class ticket = rng.get_z_range(denom);
  mpz_class cumulative = 0;
  std::size_t pick = 0;
  for (; pick < r.size(); ++pick) {
    const auto& p = r.support()[pick].probability.get();
    cumulative += p.get_num() * (denom / p.get_den());
    if (ticket < cumulative) break;
  }
  const Outcome& o = r.support()[pick];
  if (json) {
    std::cout << Json{{"seed", seed},
                      {"outcome", pick},
                      {"probability", o.probability.str()},
                      {"owner", o.allocation.owners()}}
                     .dump(2)
              << "\n";
  } else {
    std::cout << "seed " << seed << " drew outcome " << pick << " (probability " << o.probability << "):\n";
    print_allocation(std::cout, o.allocation, "  ");
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Maximin-share allocations for XOS valuations with exact verification"};
  app.require_subcommand(1);

  bool json = false;
  std::uint64_t max_enum = EnumerationLimits{}.max_enum;
  std::string path;
  auto common = [&](CLI::App* sub, bool needs_instance = true) {
    sub->add_flag("--json", json, "Structured JSON output");
    sub->add_option("--max-enum", max_enum, "Budget for exhaustive enumerations");
    if (needs_instance) sub->add_option("instance", path, "Instance file")->required()->check(CLI::ExistingFile);
  };

  auto* mms_cmd = app.add_subcommand("mms", "Maximin share and witness partition of every agent");
  common(mms_cmd);

  std::string algorithm = "det";
  std::string out;
  auto* solve_cmd = app.add_subcommand("solve", "Run an allocation algorithm and verify its guarantee");
  common(solve_cmd);
  solve_cmd->add_option("--algorithm", algorithm, "det (3/13-MMS) or rand (1/4 ex-ante, 1/8 ex-post)")
      ->check(CLI::IsMember({"det", "rand"}));
  solve_cmd->add_option("--out", out, "Write the result document here");

  std::string result_path;
  std::string alpha;
  std::string ex_ante;
  auto* verify_cmd = app.add_subcommand("verify", "Check a result document against alpha-MMS targets");
  common(verify_cmd);
  verify_cmd->add_option("result", result_path, "Result file")->required()->check(CLI::ExistingFile);
  verify_cmd->add_option("--alpha", alpha, "Ex-post target P/Q")->required();
  verify_cmd->add_option("--ex-ante", ex_ante, "Ex-ante target P/Q (randomized results)");

  std::string family;
  GeneratorParams params;
  auto* gen_cmd = app.add_subcommand("gen", "Generate an instance file");
  gen_cmd->add_option("--family", family, "lemma1 | grid | random-xos | additive")
      ->required()
      ->check(CLI::IsMember({"lemma1", "grid", "random-xos", "additive"}));
  gen_cmd->add_option("--n", params.n, "Agents (grid: blocks)");
  gen_cmd->add_option("--m", params.m, "Items");
  gen_cmd->add_option("--l", params.l, "Additive functions per agent");
  gen_cmd->add_option("--maxval", params.maxval, "Largest integer value");
  gen_cmd->add_option("--seed", params.seed, "Generator seed");
  gen_cmd->add_option("--out", out, "Output file (stdout when omitted)");

  auto* bound_cmd = app.add_subcommand("bound2", "Best two-agent split max_S v_1(S) + v_2(M \\ S)");
  common(bound_cmd);

  std::uint64_t seed = 0;
  auto* sample_cmd = app.add_subcommand("sample", "Run the randomized algorithm and draw one outcome");
  common(sample_cmd);
  sample_cmd->add_option("--seed", seed, "Sampling seed")->required();

  CLI11_PARSE(app, argc, argv);
  const EnumerationLimits limits{max_enum};

  try {
    if (*mms_cmd) return cmd_mms(path, json, limits);
    if (*solve_cmd) return cmd_solve(algorithm, path, out, json, limits);
    if (*verify_cmd) return cmd_verify(path, result_path, alpha, ex_ante, json, limits);
    if (*gen_cmd) return cmd_gen(family, params, out);
    if (*bound_cmd) return cmd_bound2(path, json, limits);
    if (*sample_cmd) return cmd_sample(path, seed, json, limits);
  } catch (const CapacityError& e) {
    std::cerr << "capacity: " << e.what() << "\n";
    return kExitCapacity;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadInput;
  }
  return kExitBadInput;
}
