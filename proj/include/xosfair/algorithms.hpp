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

#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "xosfair/allocation.hpp"
#include "xosfair/instance.hpp"
#include "xosfair/labeling.hpp"
#include "xosfair/mms.hpp"

namespace xosfair {

/// Share targets used by the two algorithms.
namespace targets {
inline const Rational kDetCap{6, 13};         // truncation level of the deterministic welfare step
inline const Rational kDetThreshold{3, 13};   // half the cap: removal threshold and final guarantee
inline const Rational kRandCap{1, 2};
inline const Rational kRandThreshold{1, 4};   // large-item threshold and ex-ante guarantee
inline const Rational kRandExPost{1, 8};
}  // namespace targets

struct RemovalEvent {
  int step;                 // 1: single items, 2: pairs, 3: triples
  std::size_t agent;        // original index
  ItemSet items;            // original indices
  Rational value;           // v_agent(items) in normalized units
};

struct WelfareSummary {
  std::size_t agents = 0;
  std::size_t items = 0;
  Rational welfare;         // capped welfare of the chosen (fractional) allocation
};

struct PhaseTrace {
  std::vector<RemovalEvent> removals;
  std::optional<WelfareSummary> welfare;
  ItemSet leftovers;        // items handed to agent 0 because every agent was removed
};

/// Agents and items still in play, plus the bundles fixed so far. Indices are
/// those of the underlying instance, which must outlive the state.
class PartialInstance {
 public:
  explicit PartialInstance(const Instance& base);

  const Instance& base() const { return *base_; }
  const std::vector<std::size_t>& agents() const { return agents_; }
  const std::vector<std::size_t>& items() const { return items_; }
  const std::vector<std::pair<std::size_t, ItemSet>>& fixed() const { return fixed_; }

  /// Gives `items` to `agent` and removes both from play.
  void assign(std::size_t agent, const ItemSet& items);

  /// Remaining agents over remaining items, re-indexed in ascending order.
  Instance remaining() const;

 private:
  const Instance* base_;
  std::vector<std::size_t> agents_;
  std::vector<std::size_t> items_;
  std::vector<std::pair<std::size_t, ItemSet>> fixed_;
};

/// Per original agent: the removal threshold, or nullopt for agents that never
/// trigger removals (zero maximin share).
using Thresholds = std::vector<std::optional<Rational>>;

/// While some remaining agent values a single remaining item at least her
/// threshold, gives it to her. Scans agents, then items, ascending.
void large_item_phase(PartialInstance& state, const Thresholds& thresholds, PhaseTrace* trace = nullptr);

/// Same with pairs (`tuple_size` 2) or triples (3) in lexicographic order.
void tuple_phase(PartialInstance& state, std::size_t tuple_size, const Thresholds& thresholds,
                 PhaseTrace* trace = nullptr);

/// Integral allocation maximizing sum_i min(cap_i, v_i(A_i)); ties go to the
/// lexicographically smallest owner sequence.
Allocation max_welfare_integral(const Instance& instance, std::span<const Rational> caps,
                                const EnumerationLimits& limits = {});

/// Complete half-integral allocation maximizing sum_i min(cap_i, v_i(F_i));
/// ties go to the lexicographically smallest per-item choice sequence (whole
/// to agent 0..n-1, then half/half splits (a,b) in lexicographic order).
FractionalAllocation max_welfare_half_integral(const Instance& instance, std::span<const Rational> caps,
                                               const EnumerationLimits& limits = {});

/// Everything the deterministic pipeline computed, for inspection and tests.
struct DetRun {
  Normalization normalization;
  PhaseTrace trace;
  std::vector<std::size_t> agents_after_singles;   // remaining after step 1
  std::vector<std::size_t> items_after_singles;
  std::vector<std::size_t> final_agents;           // entering the welfare step
  std::vector<std::size_t> final_items;
  std::vector<Rational> final_caps;
  std::optional<Allocation> welfare_allocation;    // over final_agents x final_items
  Allocation allocation;
};

struct RandRun {
  Normalization normalization;
  PhaseTrace trace;
  std::vector<std::size_t> final_agents;
  std::vector<std::size_t> final_items;
  std::vector<Rational> final_caps;
  std::optional<FractionalAllocation> fractional;  // over final_agents x final_items
  RandomizedAllocation allocation;
};

DetRun run_deterministic(const Instance& instance, const EnumerationLimits& limits = {});
RandRun run_randomized(const Instance& instance, const EnumerationLimits& limits = {});

/// 3/13-MMS allocation.
inline Allocation alg_det(const Instance& instance, const EnumerationLimits& limits = {}) {
  return run_deterministic(instance, limits).allocation;
}

/// At most two allocations: 1/4-MMS in expectation, 1/8-MMS in every outcome.
inline RandomizedAllocation alg_rand(const Instance& instance, const EnumerationLimits& limits = {}) {
  return run_randomized(instance, limits).allocation;
}

}  // namespace xosfair
