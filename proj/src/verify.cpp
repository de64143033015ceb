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

#include "xosfair/verify.hpp"

#include <sstream>

#include "json.hpp"
#include "xosfair/errors.hpp"
#include "xosfair/fractional.hpp"
#include "xosfair/mms.hpp"

namespace xosfair {
namespace {

using Json = nlohmann::ordered_json;

Json opt_str(const std::optional<Rational>& r) { return r ? Json(r->str()) : Json(nullptr); }

}  // namespace

bool VerificationReport::passed() const { return failing_agents().empty(); }

std::vector<std::size_t> VerificationReport::failing_agents() const {
  std::vector<std::size_t> out;
  for (const auto& a : agents) {
    if (!a.ex_post_pass || !a.ex_ante_pass) out.push_back(a.agent);
  }
  return out;
}

std::string VerificationReport::to_text() const {
  std::ostringstream os;
  os << "verification: ex-post alpha " << ex_post_alpha;
  if (ex_ante_alpha) os << ", ex-ante alpha " << *ex_ante_alpha;
  os << ", support " << support_size << "\n";
  for (const auto& a : agents) {
    os << "  agent " << a.agent << ": mms " << a.mms << ", ex-post min " << a.ex_post_min;
    if (a.ex_post_ratio) os << " (ratio " << *a.ex_post_ratio << " ~ " << a.ex_post_ratio->to_double() << ")";
    if (ex_ante_alpha) {
      os << ", ex-ante " << a.ex_ante;
      if (a.ex_ante_ratio) os << " (ratio " << *a.ex_ante_ratio << " ~ " << a.ex_ante_ratio->to_double() << ")";
    }
    os << (a.ex_post_pass && a.ex_ante_pass ? "  ok" : "  FAIL") << "\n";
  }
  os << (passed() ? "PASS" : "FAIL") << "\n";
  return os.str();
}

std::string VerificationReport::to_json() const {
  Json doc = Json::object();
  doc["passed"] = passed();
  doc["ex_post_alpha"] = ex_post_alpha.str();
  doc["ex_ante_alpha"] = opt_str(ex_ante_alpha);
  doc["support_size"] = support_size;
  Json rows = Json::array();
  for (const auto& a : agents) {
    rows.push_back(Json{{"agent", a.agent},
                        {"mms", a.mms.str()},
                        {"ex_post_min", a.ex_post_min.str()},
                        {"ex_ante", a.ex_ante.str()},
                        {"ex_post_ratio", opt_str(a.ex_post_ratio)},
                        {"ex_ante_ratio", opt_str(a.ex_ante_ratio)},
                        {"ex_post_pass", a.ex_post_pass},
                        {"ex_ante_pass", a.ex_ante_pass}});
  }
  doc["agents"] = std::move(rows);
  if (!normalization_factors.empty()) {
    Json factors = Json::array();
    for (const auto& f : normalization_factors) factors.push_back(f.str());
    doc["normalization_factors"] = std::move(factors);
  }
  if (!passed()) {
    Json failures = Json::array();
    for (const auto& a : agents) {
      if (!a.ex_post_pass) {
        failures.push_back(Json{{"agent", a.agent},
                                {"kind", "ex-post"},
                                {"value", a.ex_post_min.str()},
                                {"target", (ex_post_alpha * a.mms).str()}});
      }
      if (!a.ex_ante_pass) {
        failures.push_back(Json{{"agent", a.agent},
                                {"kind", "ex-ante"},
                                {"value", a.ex_ante.str()},
                                {"target", (*ex_ante_alpha * a.mms).str()}});
      }
    }
    doc["failures"] = std::move(failures);
  }
  return doc.dump(2) + "\n";
}

VerificationReport verify(const Instance& instance, const Result& result, const Rational& ex_post_alpha,
                          const std::optional<Rational>& ex_ante_alpha, const EnumerationLimits& limits) {
  const RandomizedAllocation r = std::holds_alternative<Allocation>(result)
                                     ? RandomizedAllocation::certain(std::get<Allocation>(result))
                                     : std::get<RandomizedAllocation>(result);
  const Allocation& shape = r.support().front().allocation;
  if (shape.agent_count() != instance.agent_count() || shape.item_count() != instance.item_count()) {
    throw InputError("result shape does not match the instance");
  }

  VerificationReport report;
  report.ex_post_alpha = ex_post_alpha;
  report.ex_ante_alpha = ex_ante_alpha;
  report.support_size = r.size();
  for (std::size_t i = 0; i < instance.agent_count(); ++i) {
    const XosValuation& v = instance.valuation(i);
    AgentReport a{i, mms(instance, i, limits).value, ex_post_min(r, v, i), expected_value(r, v, i),
                  std::nullopt, std::nullopt, true, true};
    if (!a.mms.is_zero()) {
      a.ex_post_ratio = a.ex_post_min / a.mms;
      a.ex_ante_ratio = a.ex_ante / a.mms;
    }
    a.ex_post_pass = a.ex_post_min >= ex_post_alpha * a.mms;
    if (ex_ante_alpha) a.ex_ante_pass = a.ex_ante >= *ex_ante_alpha * a.mms;
    report.agents.push_back(std::move(a));
  }
  return report;
}

TwoAgentSplit best_two_agent_split(const Instance& instance, const EnumerationLimits& limits) {
  if (instance.agent_count() != 2) throw InputError("two-agent split needs exactly two agents");
  const std::size_t m = instance.item_count();
  if (!labeling::labeling_count(2, m, limits.max_enum) || m >= 63) {
    throw CapacityError("2^" + std::to_string(m) + " subsets exceed the budget");
  }
  std::optional<TwoAgentSplit> best;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
    ItemSet mine;
    ItemSet theirs;
    for (std::size_t j = 0; j < m; ++j) ((mask >> j) & 1U ? mine : theirs).push_back(j);
    Rational value = instance.valuation(0).value(mine) + instance.valuation(1).value(theirs);
    if (!best || value > best->value) best = TwoAgentSplit{std::move(value), std::move(mine)};
  }
  return *best;
}

}  // namespace xosfair
