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
#include <vector>

#include "xosfair/instance.hpp"
#include "xosfair/labeling.hpp"

namespace xosfair {

/// An agent's maximin share with a partition attaining it.
struct MmsCertificate {
  Rational value;
  std::vector<ItemSet> partition;  // exactly `bundles` parts, possibly empty
};

/// Best worst-bundle value of `v` over all partitions of its items into
/// `bundles` possibly-empty parts. The certificate is the lexicographically
/// first optimal label string (item j labelled with its bundle).
MmsCertificate maximin_share(const XosValuation& v, std::size_t bundles, const EnumerationLimits& limits = {});

/// Maximin share of `agent` with n = agent_count() bundles.
MmsCertificate mms(const Instance& instance, std::size_t agent, const EnumerationLimits& limits = {});

/// v_i(M) / n.
Rational proportional_share(const Instance& instance, std::size_t agent);

struct Normalization {
  Instance instance;
  std::vector<Rational> factors;  // each agent's MMS in original units, 1 for zero-MMS agents
  std::vector<bool> zero_mms;
};

/// Divides each positive-MMS agent's valuation by her maximin share, so that
/// share becomes exactly 1. Zero-MMS agents are left as they are and flagged.
Normalization normalize(const Instance& instance, const EnumerationLimits& limits = {});

/// Removes one agent and one item, keeping the order of everything else.
Instance reduce(const Instance& instance, std::size_t agent, std::size_t item);

/// Halves every bundle of a (normalized, value >= 1) certificate into two
/// fractional sets carrying share 1/2 of each of its items: 2n sets in total,
/// bundle b yielding sets 2b and 2b+1.
std::vector<FractionalSet> halving_split(const XosValuation& v, const MmsCertificate& certificate);

}  // namespace xosfair
