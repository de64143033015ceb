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

#include "xosfair/allocation.hpp"
#include "xosfair/instance.hpp"
#include "xosfair/labeling.hpp"

namespace xosfair {

/// Every agent gets share 1/n of every item.
FractionalAllocation uniform_fractional(const Instance& instance);

/// Product distribution: each item goes to agent i independently with
/// probability f_ij. Outcomes are listed in lexicographic owner order; zero
/// probability outcomes are dropped. Throws CapacityError when the support
/// would exceed `limits.max_enum`.
RandomizedAllocation independent_rounding(const FractionalAllocation& f, const EnumerationLimits& limits = {});

/// Exact expectation of v(bundle of `agent`) over the support.
Rational expected_value(const RandomizedAllocation& r, const XosValuation& v, std::size_t agent);

/// Worst bundle value of `agent` over the support.
Rational ex_post_min(const RandomizedAllocation& r, const XosValuation& v, std::size_t agent);

}  // namespace xosfair
