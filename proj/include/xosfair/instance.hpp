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

#include "xosfair/valuation.hpp"

namespace xosfair {

/// Agents, items and one XOS valuation per agent over all items.
///
/// `normalized()` records that every agent with positive maximin share has
/// been divided by it. An instance with zero agents only arises as the result
/// of removing the last agent.
class Instance {
 public:
  Instance(std::size_t item_count, std::vector<XosValuation> valuations, bool normalized = false);

  std::size_t agent_count() const { return valuations_.size(); }
  std::size_t item_count() const { return item_count_; }
  const XosValuation& valuation(std::size_t agent) const { return valuations_.at(agent); }
  const std::vector<XosValuation>& valuations() const { return valuations_; }
  bool normalized() const { return normalized_; }

  /// Keeps the listed agents and items, re-indexed in the given order.
  Instance restricted(std::span<const std::size_t> agents, std::span<const std::size_t> items) const;

  friend bool operator==(const Instance&, const Instance&) = default;

 private:
  std::size_t item_count_;
  std::vector<XosValuation> valuations_;
  bool normalized_;
};

}  // namespace xosfair
