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

#include "xosfair/algorithms.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <string>

#include "xosfair/errors.hpp"
#include "xosfair/rounding.hpp"

namespace xosfair {
namespace {

labeling::Problem welfare_problem(const Instance& instance, std::span<const Rational> caps, bool half_integral) {
  if (caps.size() != instance.agent_count()) throw InputError("one cap per agent required");
  labeling::Problem problem;
  problem.valuations = instance.valuations();
  problem.party_valuation.resize(instance.agent_count());
  std::iota(problem.party_valuation.begin(), problem.party_valuation.end(), 0);
  problem.caps.assign(caps.begin(), caps.end());
  problem.objective = labeling::Objective::kCappedWelfare;
  problem.half_integral = half_integral;
  return problem;
}

// Shared body of the single-item, pair and triple phases.
void removal_phase(PartialInstance& state, std::size_t tuple_size, const Thresholds& thresholds, PhaseTrace* trace) {
  if (thresholds.size() != state.base().agent_count()) throw InputError("one threshold per agent required");
  bool changed = true;
  while (changed) {
    changed = false;
    const auto& items = state.items();
    if (items.size() < tuple_size) return;
    for (std::size_t agent : state.agents()) {
      const auto& threshold = thresholds[agent];
      if (!threshold) continue;
      const XosValuation& v = state.base().valuation(agent);
      // Lexicographic walk over increasing position tuples.
      std::vector<std::size_t> pos(tuple_size);
      std::iota(pos.begin(), pos.end(), 0);
      while (true) {
        ItemSet tuple(tuple_size);
        for (std::size_t k = 0; k < tuple_size; ++k) tuple[k] = items[pos[k]];
        Rational value = v.value(tuple);
        if (value >= *threshold) {
          if (trace != nullptr) {
            trace->removals.push_back(RemovalEvent{static_cast<int>(tuple_size), agent, tuple, value});
          }
          state.assign(agent, tuple);
          changed = true;
          break;
        }
        std::size_t k = tuple_size;
        while (k > 0 && pos[k - 1] == items.size() - tuple_size + (k - 1)) --k;
        if (k == 0) break;
        ++pos[k - 1];
        for (std::size_t r = k; r < tuple_size; ++r) pos[r] = pos[r - 1] + 1;
      }
      if (changed) break;
    }
  }
}

Thresholds thresholds_for(const Normalization& norm, const Rational& level) {
  Thresholds out;
  for (bool zero : norm.zero_mms) out.push_back(zero ? std::nullopt : std::optional<Rational>(level));
  return out;
}

std::vector<Rational> caps_for(const Normalization& norm, const std::vector<std::size_t>& agents,
                               const Rational& level) {
  std::vector<Rational> caps;
  for (std::size_t i : agents) caps.push_back(norm.zero_mms[i] ? Rational(0) : level);
  return caps;
}

constexpr std::size_t kNoOwner = std::numeric_limits<std::size_t>::max();

std::vector<std::size_t> fixed_owners(const PartialInstance& state) {
  std::vector<std::size_t> owner(state.base().item_count(), kNoOwner);
  for (const auto& [agent, items] : state.fixed()) {
    for (std::size_t j : items) owner[j] = agent;
  }
  return owner;
}

void check_agents(const Instance& instance) {
  if (instance.agent_count() == 0) throw InputError("allocation algorithms need at least one agent");
}

}  // namespace

PartialInstance::PartialInstance(const Instance& base)
    : base_(&base), agents_(base.agent_count()), items_(base.item_count()) {
  std::iota(agents_.begin(), agents_.end(), 0);
  std::iota(items_.begin(), items_.end(), 0);
}

void PartialInstance::assign(std::size_t agent, const ItemSet& items) {
  auto a = std::find(agents_.begin(), agents_.end(), agent);
  if (a == agents_.end()) throw InputError("agent " + std::to_string(agent) + " is no longer in play");
  for (std::size_t j : items) {
    auto it = std::find(items_.begin(), items_.end(), j);
    if (it == items_.end()) throw InputError("item " + std::to_string(j) + " is no longer in play");
    items_.erase(it);
  }
  agents_.erase(a);
  fixed_.emplace_back(agent, items);
}

Instance PartialInstance::remaining() const { return base_->restricted(agents_, items_); }

void large_item_phase(PartialInstance& state, const Thresholds& thresholds, PhaseTrace* trace) {
  removal_phase(state, 1, thresholds, trace);
}

void tuple_phase(PartialInstance& state, std::size_t tuple_size, const Thresholds& thresholds, PhaseTrace* trace) {
  if (tuple_size != 2 && tuple_size != 3) throw InputError("tuple phase handles pairs and triples only");
  removal_phase(state, tuple_size, thresholds, trace);
}

Allocation max_welfare_integral(const Instance& instance, std::span<const Rational> caps,
                                const EnumerationLimits& limits) {
  if (instance.agent_count() == 0) {
    if (instance.item_count() != 0) throw InputError("items but no agents to give them to");
    return Allocation(0, {});
  }
  const auto result = labeling::solve(welfare_problem(instance, caps, false), limits);
  return Allocation(instance.agent_count(), result.labels);
}

FractionalAllocation max_welfare_half_integral(const Instance& instance, std::span<const Rational> caps,
                                               const EnumerationLimits& limits) {
  if (instance.agent_count() == 0) {
    if (instance.item_count() != 0) throw InputError("items but no agents to give them to");
    return FractionalAllocation(0, 0, {}, true);
  }
  const auto problem = welfare_problem(instance, caps, true);
  const auto result = labeling::solve(problem, limits);
  std::vector<Rational> shares;
  shares.reserve(instance.agent_count() * instance.item_count());
  for (const auto& row : labeling::shares_of(problem, result.labels)) {
    shares.insert(shares.end(), row.shares().begin(), row.shares().end());
  }
  return FractionalAllocation(instance.agent_count(), instance.item_count(), std::move(shares), true);
}

DetRun run_deterministic(const Instance& instance, const EnumerationLimits& limits) {
  check_agents(instance);
  Normalization norm = normalize(instance, limits);
  PartialInstance state(norm.instance);
  PhaseTrace trace;
  const Thresholds thresholds = thresholds_for(norm, targets::kDetThreshold);

  large_item_phase(state, thresholds, &trace);
  std::vector<std::size_t> agents_after_singles = state.agents();
  std::vector<std::size_t> items_after_singles = state.items();
  tuple_phase(state, 2, thresholds, &trace);
  tuple_phase(state, 3, thresholds, &trace);

  std::vector<std::size_t> owner = fixed_owners(state);
  std::vector<Rational> caps = caps_for(norm, state.agents(), targets::kDetCap);
  std::optional<Allocation> welfare_allocation;
  if (!state.agents().empty()) {
    const Instance sub = state.remaining();
    Allocation a = max_welfare_integral(sub, caps, limits);
    WelfareSummary summary{sub.agent_count(), sub.item_count(), Rational(0)};
    for (std::size_t i = 0; i < sub.agent_count(); ++i) {
      summary.welfare += truncate(sub.valuation(i), caps[i]).value(a.bundle(i));
    }
    trace.welfare = summary;
    for (std::size_t j = 0; j < sub.item_count(); ++j) owner[state.items()[j]] = state.agents()[a.owner(j)];
    welfare_allocation = std::move(a);
  } else {
    for (std::size_t j : state.items()) {
      owner[j] = 0;
      trace.leftovers.push_back(j);
    }
  }

  std::vector<std::size_t> final_agents = state.agents();
  std::vector<std::size_t> final_items = state.items();
  Allocation allocation(instance.agent_count(), std::move(owner));
  return DetRun{std::move(norm),
                std::move(trace),
                std::move(agents_after_singles),
                std::move(items_after_singles),
                std::move(final_agents),
                std::move(final_items),
                std::move(caps),
                std::move(welfare_allocation),
                std::move(allocation)};
}

RandRun run_randomized(const Instance& instance, const EnumerationLimits& limits) {
  check_agents(instance);
  Normalization norm = normalize(instance, limits);
  PartialInstance state(norm.instance);
  PhaseTrace trace;
  large_item_phase(state, thresholds_for(norm, targets::kRandThreshold), &trace);

  const std::vector<std::size_t> base_owner = fixed_owners(state);
  std::vector<Rational> caps = caps_for(norm, state.agents(), targets::kRandCap);
  std::optional<FractionalAllocation> fractional;
  std::vector<Outcome> outcomes;
  if (!state.agents().empty()) {
    const Instance sub = state.remaining();
    FractionalAllocation f = max_welfare_half_integral(sub, caps, limits);
    WelfareSummary summary{sub.agent_count(), sub.item_count(), Rational(0)};
    for (std::size_t i = 0; i < sub.agent_count(); ++i) {
      summary.welfare += truncate(sub.valuation(i), caps[i]).value(f.row(i));
    }
    trace.welfare = summary;
    const RandomizedAllocation rounded = round_half_integral(f, sub);
    for (const auto& o : rounded.support()) {
      std::vector<std::size_t> owner = base_owner;
      for (std::size_t j = 0; j < sub.item_count(); ++j) {
        owner[state.items()[j]] = state.agents()[o.allocation.owner(j)];
      }
      outcomes.push_back(Outcome{Allocation(instance.agent_count(), std::move(owner)), o.probability});
    }
    fractional = std::move(f);
  } else {
    std::vector<std::size_t> owner = base_owner;
    for (std::size_t j : state.items()) {
      owner[j] = 0;
      trace.leftovers.push_back(j);
    }
    outcomes.push_back(Outcome{Allocation(instance.agent_count(), std::move(owner)), Rational(1)});
  }

  std::vector<std::size_t> final_agents = state.agents();
  std::vector<std::size_t> final_items = state.items();
  return RandRun{std::move(norm),         std::move(trace), std::move(final_agents),
                 std::move(final_items),  std::move(caps),  std::move(fractional),
                 RandomizedAllocation(std::move(outcomes))};
}

}  // namespace xosfair
