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

#include "xosfair/instance.hpp"

#include <string>

#include "xosfair/errors.hpp"

namespace xosfair {

Instance::Instance(std::size_t item_count, std::vector<XosValuation> valuations, bool normalized)
    : item_count_(item_count), valuations_(std::move(valuations)), normalized_(normalized) {
  for (std::size_t i = 0; i < valuations_.size(); ++i) {
    if (valuations_[i].item_count() != item_count_) {
      throw InputError("agent " + std::to_string(i) + " valuation covers " +
                       std::to_string(valuations_[i].item_count()) + " items, expected " +
                       std::to_string(item_count_));
    }
  }
}

Instance Instance::restricted(std::span<const std::size_t> agents, std::span<const std::size_t> items) const {
  std::vector<XosValuation> kept;
  kept.reserve(agents.size());
  for (std::size_t i : agents) {
    if (i >= valuations_.size()) throw InputError("agent index " + std::to_string(i) + " out of range");
    kept.push_back(valuations_[i].restricted(items));
  }
  return Instance(items.size(), std::move(kept), normalized_);
}

}  // namespace xosfair
