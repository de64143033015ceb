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

#include "xosfair/rational.hpp"
#include "xosfair/valuation.hpp"

namespace xosfair {

/// Integral allocation: every item has exactly one owner.
class Allocation {
 public:
  Allocation(std::size_t agent_count, std::vector<std::size_t> owner);

  std::size_t agent_count() const { return agent_count_; }
  std::size_t item_count() const { return owner_.size(); }
  std::size_t owner(std::size_t item) const { return owner_.at(item); }
  const std::vector<std::size_t>& owners() const { return owner_; }

  /// Items owned by `agent`, ascending.
  ItemSet bundle(std::size_t agent) const;

  friend bool operator==(const Allocation&, const Allocation&) = default;
  friend auto operator<=>(const Allocation&, const Allocation&) = default;

 private:
  std::size_t agent_count_;
  std::vector<std::size_t> owner_;
};

/// Agent-by-item matrix of shares in [0,1] with column sums at most 1.
class FractionalAllocation {
 public:
  /// `shares` is row-major, agent_count x item_count. When `half_integral` is
  /// set every entry must be 0, 1/2 or 1.
  FractionalAllocation(std::size_t agent_count, std::size_t item_count, std::vector<Rational> shares,
                       bool half_integral = false);

  static FractionalAllocation from(const Allocation& a);

  std::size_t agent_count() const { return agents_; }
  std::size_t item_count() const { return items_; }
  bool half_integral() const { return half_integral_; }
  const Rational& at(std::size_t agent, std::size_t item) const { return shares_[agent * items_ + item]; }
  FractionalSet row(std::size_t agent) const;

  bool complete() const;
  /// True if every entry is 0, 1/2 or 1, whether or not the flag is set.
  bool has_half_integral_entries() const;

  friend bool operator==(const FractionalAllocation&, const FractionalAllocation&) = default;

 private:
  std::size_t agents_;
  std::size_t items_;
  std::vector<Rational> shares_;
  bool half_integral_;
};

/// One allocation in the support of a distribution.
struct Outcome {
  Allocation allocation;
  Rational probability;
};

/// Explicit finite distribution over distinct integral allocations with exact
/// positive probabilities summing to 1.
class RandomizedAllocation {
 public:
  explicit RandomizedAllocation(std::vector<Outcome> support);

  static RandomizedAllocation certain(Allocation a);

  const std::vector<Outcome>& support() const { return support_; }
  std::size_t size() const { return support_.size(); }

 private:
  std::vector<Outcome> support_;
};

}  // namespace xosfair
