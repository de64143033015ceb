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

#include <string>

#include "labeling_internal.hpp"
#include "xosfair/errors.hpp"
#include "xosfair/labeling.hpp"

namespace xosfair::labeling {

std::vector<Choice> choices(std::size_t parties, bool half_integral) {
  std::vector<Choice> out;
  for (std::size_t p = 0; p < parties; ++p) out.push_back({p, p});
  if (half_integral) {
    for (std::size_t a = 0; a < parties; ++a) {
      for (std::size_t b = a + 1; b < parties; ++b) out.push_back({a, b});
    }
  }
  return out;
}

std::optional<std::uint64_t> labeling_count(std::size_t choice_count, std::size_t items, std::uint64_t limit) {
  std::uint64_t total = 1;
  for (std::size_t j = 0; j < items; ++j) {
    if (choice_count != 0 && total > limit / choice_count) return std::nullopt;
    total *= choice_count;
  }
  if (total > limit) return std::nullopt;
  return total;
}

namespace detail {

void validate(const Problem& problem, const EnumerationLimits& limits) {
  if (problem.party_count() == 0) throw InputError("labeling search needs at least one party");
  if (problem.valuations.empty()) throw InputError("labeling search needs at least one valuation");
  const std::size_t m = problem.item_count();
  for (const auto& v : problem.valuations) {
    if (v.item_count() != m) throw InputError("labeling valuations disagree on item count");
  }
  for (std::size_t idx : problem.party_valuation) {
    if (idx >= problem.valuations.size()) throw InputError("party refers to an unknown valuation");
  }
  if (problem.objective == Objective::kCappedWelfare) {
    if (problem.caps.size() != problem.party_count()) throw InputError("one cap per party required");
    for (const auto& c : problem.caps) {
      if (c.is_negative()) throw InputError("caps must be non-negative");
    }
  }
  const auto options = choices(problem.party_count(), problem.half_integral).size();
  if (!labeling_count(options, m, limits.max_enum)) {
    throw CapacityError(std::to_string(options) + "^" + std::to_string(m) + " labelings exceed the budget of " +
                        std::to_string(limits.max_enum));
  }
}

}  // namespace detail

std::vector<FractionalSet> shares_of(const Problem& problem, const std::vector<std::size_t>& labels) {
  const std::size_t m = problem.item_count();
  if (labels.size() != m) throw InputError("label count does not match item count");
  const auto options = choices(problem.party_count(), problem.half_integral);
  const Rational half(1, 2);
  std::vector<std::vector<Rational>> rows(problem.party_count(), std::vector<Rational>(m));
  for (std::size_t j = 0; j < m; ++j) {
    const Choice& c = options.at(labels[j]);
    if (c.split()) {
      rows[c.first][j] = half;
      rows[c.second][j] = half;
    } else {
      rows[c.first][j] = 1;
    }
  }
  std::vector<FractionalSet> out;
  out.reserve(rows.size());
  for (auto& r : rows) out.emplace_back(std::move(r));
  return out;
}

Result solve_reference(const Problem& problem, const EnumerationLimits& limits) {
  detail::validate(problem, limits);
  const std::size_t m = problem.item_count();
  const std::size_t options = choices(problem.party_count(), problem.half_integral).size();

  auto evaluate = [&](const std::vector<std::size_t>& labels) {
    const auto rows = shares_of(problem, labels);
    Rational score;
    for (std::size_t p = 0; p < rows.size(); ++p) {
      Rational v = problem.valuation_of(p).value(rows[p]);
      if (problem.objective == Objective::kMaxMin) {
        if (p == 0 || v < score) score = std::move(v);
      } else {
        score += std::min(problem.caps[p], v);
      }
    }
    return score;
  };

  std::vector<std::size_t> labels(m, 0);
  Result best{evaluate(labels), labels};
  while (true) {
    std::size_t pos = m;
    while (pos > 0 && labels[pos - 1] + 1 == options) labels[--pos] = 0;
    if (pos == 0) break;
    ++labels[pos - 1];
    Rational score = evaluate(labels);
    if (score > best.objective) best = Result{std::move(score), labels};
  }
  return best;
}

}  // namespace xosfair::labeling
