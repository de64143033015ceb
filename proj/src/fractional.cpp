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

#include "xosfair/fractional.hpp"

#include <string>

#include "xosfair/errors.hpp"

namespace xosfair {

FractionalAllocation uniform_fractional(const Instance& instance) {
  if (instance.agent_count() == 0) throw InputError("uniform allocation needs at least one agent");
  const Rational share(1, static_cast<long>(instance.agent_count()));
  std::vector<Rational> shares(instance.agent_count() * instance.item_count(), share);
  return FractionalAllocation(instance.agent_count(), instance.item_count(), std::move(shares),
                              instance.agent_count() <= 2);
}

RandomizedAllocation independent_rounding(const FractionalAllocation& f, const EnumerationLimits& limits) {
  if (!f.complete()) throw InputError("independent rounding needs a complete fractional allocation");
  const std::size_t n = f.agent_count();
  const std::size_t m = f.item_count();

  // Candidate owners per item, ascending.
  std::vector<std::vector<std::size_t>> owners(m);
  std::uint64_t support = 1;
  for (std::size_t j = 0; j < m; ++j) {
    for (std::size_t i = 0; i < n; ++i) {
      if (!f.at(i, j).is_zero()) owners[j].push_back(i);
    }
    if (support > limits.max_enum / owners[j].size()) {
      throw CapacityError("product rounding support exceeds the budget of " + std::to_string(limits.max_enum));
    }
    support *= owners[j].size();
  }

  std::vector<Outcome> outcomes;
  outcomes.reserve(support);
  std::vector<std::size_t> pick(m, 0);
  while (true) {
    std::vector<std::size_t> owner(m);
    Rational p(1);
    for (std::size_t j = 0; j < m; ++j) {
      owner[j] = owners[j][pick[j]];
      p *= f.at(owner[j], j);
    }
    outcomes.push_back(Outcome{Allocation(n, std::move(owner)), std::move(p)});

    std::size_t pos = m;
    while (pos > 0 && pick[pos - 1] + 1 == owners[pos - 1].size()) pick[--pos] = 0;
    if (pos == 0) break;
    ++pick[pos - 1];
  }
  return RandomizedAllocation(std::move(outcomes));
}

Rational expected_value(const RandomizedAllocation& r, const XosValuation& v, std::size_t agent) {
  Rational total;
  for (const auto& o : r.support()) total += o.probability * v.value(o.allocation.bundle(agent));
  return total;
}

Rational ex_post_min(const RandomizedAllocation& r, const XosValuation& v, std::size_t agent) {
  bool first = true;
  Rational worst;
  for (const auto& o : r.support()) {
    Rational value = v.value(o.allocation.bundle(agent));
    if (first || value < worst) worst = std::move(value);
    first = false;
  }
  return worst;
}

}  // namespace xosfair
