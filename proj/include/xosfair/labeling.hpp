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
#include <cstdint>
#include <optional>
#include <vector>

#include "xosfair/rational.hpp"
#include "xosfair/valuation.hpp"

namespace xosfair {

/// Budget for exhaustive enumerations (labelings, support outcomes, subsets).
struct EnumerationLimits {
  std::uint64_t max_enum = 10'000'000;
};

/// Exhaustive search over labelings of items with "parties" (MMS bundles or agents).
///
/// Every item independently takes one choice: whole to one party, or (in
/// half-integral mode) half to each of two distinct parties. Choices are
/// ordered whole-to-0 .. whole-to-(p-1), then splits (a,b), a < b,
/// lexicographically. The search returns the lexicographically first labeling
/// attaining the optimum of the objective.
namespace labeling {

enum class Objective {
  kMaxMin,         // maximize min over parties of v_p(bundle_p)
  kCappedWelfare,  // maximize sum over parties of min(cap_p, v_p(bundle_p))
};

struct Choice {
  std::size_t first;
  std::size_t second;  // == first for a whole assignment
  bool split() const { return first != second; }
};

struct Problem {
  std::vector<XosValuation> valuations;   // distinct valuations, all over the same items
  std::vector<std::size_t> party_valuation;  // index into `valuations` per party
  std::vector<Rational> caps;              // per party; kCappedWelfare only
  Objective objective = Objective::kMaxMin;
  bool half_integral = false;

  std::size_t party_count() const { return party_valuation.size(); }
  std::size_t item_count() const { return valuations.empty() ? 0 : valuations.front().item_count(); }
  const XosValuation& valuation_of(std::size_t party) const { return valuations[party_valuation[party]]; }
};

struct Result {
  Rational objective;
  std::vector<std::size_t> labels;  // choice index per item
};

std::vector<Choice> choices(std::size_t parties, bool half_integral);

/// choices^items, or nullopt when it exceeds `limit`.
std::optional<std::uint64_t> labeling_count(std::size_t choice_count, std::size_t items, std::uint64_t limit);

/// Plain odometer scan in rational arithmetic, one labeling at a time.
Result solve_reference(const Problem& problem, const EnumerationLimits& limits = {});

/// Integer-scaled depth-first search split into lexicographic prefix tasks and
/// run under OpenMP. Returns exactly what solve_reference returns; falls back
/// to it if the common-denominator scaling does not fit in 64 bits.
Result solve_parallel(const Problem& problem, const EnumerationLimits& limits = {});

inline Result solve(const Problem& problem, const EnumerationLimits& limits = {}) {
  return solve_parallel(problem, limits);
}

/// Per-party fractional shares induced by a labeling.
std::vector<FractionalSet> shares_of(const Problem& problem, const std::vector<std::size_t>& labels);

}  // namespace labeling
}  // namespace xosfair
