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

#include "xosfair/allocation.hpp"

#include <algorithm>
#include <string>

#include "xosfair/errors.hpp"

namespace xosfair {

Allocation::Allocation(std::size_t agent_count, std::vector<std::size_t> owner)
    : agent_count_(agent_count), owner_(std::move(owner)) {
  if (agent_count_ == 0 && !owner_.empty()) throw InputError("items allocated but there are no agents");
  for (std::size_t j = 0; j < owner_.size(); ++j) {
    if (owner_[j] >= agent_count_) {
      throw InputError("item " + std::to_string(j) + " owned by unknown agent " + std::to_string(owner_[j]));
    }
  }
}

ItemSet Allocation::bundle(std::size_t agent) const {
  ItemSet items;
  for (std::size_t j = 0; j < owner_.size(); ++j) {
    if (owner_[j] == agent) items.push_back(j);
  }
  return items;
}

FractionalAllocation::FractionalAllocation(std::size_t agent_count, std::size_t item_count,
                                           std::vector<Rational> shares, bool half_integral)
    : agents_(agent_count), items_(item_count), shares_(std::move(shares)), half_integral_(half_integral) {
  if (shares_.size() != agents_ * items_) throw InputError("share matrix has the wrong number of entries");
  const Rational one(1);
  for (const auto& s : shares_) {
    if (s.is_negative() || s > one) throw InputError("share outside [0,1]: " + s.str());
  }
  for (std::size_t j = 0; j < items_; ++j) {
    Rational column;
    for (std::size_t i = 0; i < agents_; ++i) column += at(i, j);
    if (column > one) throw InputError("item " + std::to_string(j) + " is over-allocated: " + column.str());
  }
  if (half_integral_ && !has_half_integral_entries()) {
    throw InputError("allocation flagged half-integral has an entry outside {0, 1/2, 1}");
  }
}

FractionalAllocation FractionalAllocation::from(const Allocation& a) {
  std::vector<Rational> shares(a.agent_count() * a.item_count());
  for (std::size_t j = 0; j < a.item_count(); ++j) shares[a.owner(j) * a.item_count() + j] = 1;
  return FractionalAllocation(a.agent_count(), a.item_count(), std::move(shares), true);
}

FractionalSet FractionalAllocation::row(std::size_t agent) const {
  if (agent >= agents_) throw InputError("agent index " + std::to_string(agent) + " out of range");
  const auto first = shares_.begin() + static_cast<std::ptrdiff_t>(agent * items_);
  return FractionalSet(std::vector<Rational>(first, first + static_cast<std::ptrdiff_t>(items_)));
}

bool FractionalAllocation::complete() const {
  for (std::size_t j = 0; j < items_; ++j) {
    Rational column;
    for (std::size_t i = 0; i < agents_; ++i) column += at(i, j);
    if (column != Rational(1)) return false;
  }
  return true;
}

bool FractionalAllocation::has_half_integral_entries() const {
  const Rational half(1, 2);
  return std::all_of(shares_.begin(), shares_.end(),
                     [&](const Rational& s) { return s.is_zero() || s == half || s == Rational(1); });
}

RandomizedAllocation::RandomizedAllocation(std::vector<Outcome> support) : support_(std::move(support)) {
  if (support_.empty()) throw InputError("randomized allocation needs a non-empty support");
  Rational total;
  for (const auto& o : support_) {
    if (o.probability <= Rational(0)) throw InputError("support probability must be positive");
    if (o.allocation.agent_count() != support_.front().allocation.agent_count() ||
        o.allocation.item_count() != support_.front().allocation.item_count()) {
      throw InputError("support allocations disagree on shape");
    }
    total += o.probability;
  }
  if (total != Rational(1)) throw InputError("support probabilities sum to " + total.str() + ", not 1");
  std::vector<const std::vector<std::size_t>*> owners;
  owners.reserve(support_.size());
  for (const auto& o : support_) owners.push_back(&o.allocation.owners());
  std::sort(owners.begin(), owners.end(), [](auto* a, auto* b) { return *a < *b; });
  if (std::adjacent_find(owners.begin(), owners.end(), [](auto* a, auto* b) { return *a == *b; }) !=
      owners.end()) {
    throw InputError("duplicate allocation in support");
  }
}

RandomizedAllocation RandomizedAllocation::certain(Allocation a) {
  return RandomizedAllocation({Outcome{std::move(a), Rational(1)}});
}

}  // namespace xosfair
