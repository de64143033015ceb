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

#include "xosfair/mms.hpp"

#include <numeric>
#include <string>

#include "xosfair/errors.hpp"

namespace xosfair {

MmsCertificate maximin_share(const XosValuation& v, std::size_t bundles, const EnumerationLimits& limits) {
  if (bundles == 0) throw InputError("maximin share needs at least one bundle");
  labeling::Problem problem;
  problem.valuations = {v};
  problem.party_valuation.assign(bundles, 0);
  problem.objective = labeling::Objective::kMaxMin;
  const auto result = labeling::solve(problem, limits);

  MmsCertificate cert{result.objective, std::vector<ItemSet>(bundles)};
  for (std::size_t j = 0; j < result.labels.size(); ++j) cert.partition[result.labels[j]].push_back(j);
  return cert;
}

MmsCertificate mms(const Instance& instance, std::size_t agent, const EnumerationLimits& limits) {
  if (agent >= instance.agent_count()) throw InputError("agent index " + std::to_string(agent) + " out of range");
  return maximin_share(instance.valuation(agent), instance.agent_count(), limits);
}

Rational proportional_share(const Instance& instance, std::size_t agent) {
  if (agent >= instance.agent_count()) throw InputError("agent index " + std::to_string(agent) + " out of range");
  std::vector<std::size_t> all(instance.item_count());
  std::iota(all.begin(), all.end(), 0);
  return instance.valuation(agent).value(all) / Rational(static_cast<long>(instance.agent_count()));
}

Normalization normalize(const Instance& instance, const EnumerationLimits& limits) {
  std::vector<XosValuation> scaled;
  std::vector<Rational> factors;
  std::vector<bool> zero;
  for (std::size_t i = 0; i < instance.agent_count(); ++i) {
    Rational share = mms(instance, i, limits).value;
    if (share.is_zero()) {
      scaled.push_back(instance.valuation(i));
      factors.emplace_back(1);
      zero.push_back(true);
    } else {
      scaled.push_back(instance.valuation(i).divided_by(share));
      factors.push_back(std::move(share));
      zero.push_back(false);
    }
  }
  return Normalization{Instance(instance.item_count(), std::move(scaled), true), std::move(factors),
                       std::move(zero)};
}

Instance reduce(const Instance& instance, std::size_t agent, std::size_t item) {
  if (agent >= instance.agent_count()) throw InputError("agent index " + std::to_string(agent) + " out of range");
  if (item >= instance.item_count()) throw InputError("item index " + std::to_string(item) + " out of range");
  std::vector<std::size_t> agents;
  std::vector<std::size_t> items;
  for (std::size_t i = 0; i < instance.agent_count(); ++i) {
    if (i != agent) agents.push_back(i);
  }
  for (std::size_t j = 0; j < instance.item_count(); ++j) {
    if (j != item) items.push_back(j);
  }
  if (agents.empty()) return Instance(items.size(), {}, instance.normalized());
  return instance.restricted(agents, items);
}

std::vector<FractionalSet> halving_split(const XosValuation& v, const MmsCertificate& certificate) {
  if (certificate.value < Rational(1)) {
    throw InputError("halving split expects a normalized certificate (value >= 1), got " + certificate.value.str());
  }
  const Rational half(1, 2);
  std::vector<FractionalSet> out;
  out.reserve(2 * certificate.partition.size());
  for (const auto& bundle : certificate.partition) {
    std::vector<Rational> shares(v.item_count());
    for (std::size_t j : bundle) {
      if (j >= v.item_count()) throw InputError("certificate item out of range");
      shares[j] = half;
    }
    out.emplace_back(shares);
    out.emplace_back(std::move(shares));
  }
  return out;
}

}  // namespace xosfair
