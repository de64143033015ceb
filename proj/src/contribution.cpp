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

#include "xosfair/contribution.hpp"

#include "xosfair/errors.hpp"

namespace xosfair {
namespace {

void check_shapes(std::span<const XosValuation> valuations, std::size_t agents, std::size_t items) {
  if (valuations.size() != agents) throw InputError("valuation count does not match the allocation");
  for (const auto& v : valuations) {
    if (v.item_count() != items) throw InputError("valuation item count does not match the allocation");
  }
}

std::vector<bool> membership(std::size_t m, std::span<const std::size_t> items) {
  std::vector<bool> in(m, false);
  for (std::size_t j : items) {
    if (j >= m) throw InputError("item index out of range");
    in[j] = true;
  }
  return in;
}

}  // namespace

Rational contribution(std::span<const XosValuation> valuations, const Allocation& a,
                      std::span<const std::size_t> removed) {
  check_shapes(valuations, a.agent_count(), a.item_count());
  const auto in_removed = membership(a.item_count(), removed);
  Rational total;
  for (std::size_t i = 0; i < a.agent_count(); ++i) {
    const ItemSet bundle = a.bundle(i);
    ItemSet kept;
    for (std::size_t j : bundle) {
      if (!in_removed[j]) kept.push_back(j);
    }
    if (kept.size() == bundle.size()) continue;
    total += valuations[i].value(bundle) - valuations[i].value(kept);
  }
  return total;
}

Rational contribution(std::span<const XosValuation> valuations, std::span<const Rational> caps,
                      const Allocation& a, std::span<const std::size_t> removed) {
  check_shapes(valuations, a.agent_count(), a.item_count());
  if (caps.size() != a.agent_count()) throw InputError("cap count does not match the allocation");
  const auto in_removed = membership(a.item_count(), removed);
  Rational total;
  for (std::size_t i = 0; i < a.agent_count(); ++i) {
    const ItemSet bundle = a.bundle(i);
    ItemSet kept;
    for (std::size_t j : bundle) {
      if (!in_removed[j]) kept.push_back(j);
    }
    if (kept.size() == bundle.size()) continue;
    const CappedValuation capped(valuations[i], caps[i]);
    total += capped.value(bundle) - capped.value(kept);
  }
  return total;
}

Rational witness_mass(std::span<const XosValuation> valuations, const FractionalAllocation& f,
                      const FractionalSet& removed) {
  check_shapes(valuations, f.agent_count(), f.item_count());
  if (removed.item_count() != f.item_count()) throw InputError("removed set has the wrong length");
  Rational total;
  for (std::size_t i = 0; i < f.agent_count(); ++i) {
    const AdditiveFunction& u = valuations[i].function(valuations[i].witness(f.row(i)));
    for (std::size_t j = 0; j < f.item_count(); ++j) {
      if (removed[j].is_zero() || f.at(i, j).is_zero()) continue;
      total += u[j] * removed[j] * f.at(i, j);
    }
  }
  return total;
}

}  // namespace xosfair
