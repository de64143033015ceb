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

// Test-only generators and brute-force oracles (subset recursion, pairs of
// integral allocations).

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <vector>

#include "xosfair/allocation.hpp"
#include "xosfair/instance.hpp"

namespace xosfair::testing {

inline Rational R(long n, long d = 1) { return Rational(n, d); }

inline std::vector<Rational> row(std::initializer_list<Rational> values) { return {values}; }

inline XosValuation xos(std::initializer_list<std::vector<Rational>> rows) {
  std::vector<AdditiveFunction> family;
  for (const auto& r : rows) family.emplace_back(r);
  return XosValuation(std::move(family));
}

inline std::vector<std::size_t> all_items(std::size_t m) {
  std::vector<std::size_t> out(m);
  for (std::size_t j = 0; j < m; ++j) out[j] = j;
  return out;
}

inline ItemSet from_mask(std::uint64_t mask, std::size_t m) {
  ItemSet s;
  for (std::size_t j = 0; j < m; ++j) {
    if ((mask >> j) & 1U) s.push_back(j);
  }
  return s;
}

/// Values uniform on lo..hi, zeroed with probability zero_percent/100.
Instance random_instance(std::mt19937_64& rng, std::size_t n, std::size_t m, std::size_t l, long lo, long hi,
                         int zero_percent = 0);

/// Random complete half-integral allocation: each item whole to one agent or split between two.
FractionalAllocation random_half_integral(std::mt19937_64& rng, std::size_t n, std::size_t m);

/// Random complete fractional allocation with small-denominator shares (some zero).
FractionalAllocation random_fractional(std::mt19937_64& rng, std::size_t n, std::size_t m);

/// Random fractional partition of m items into t parts (shares per item sum to 1).
std::vector<FractionalSet> random_fractional_partition(std::mt19937_64& rng, std::size_t m, std::size_t t);

Allocation random_allocation(std::mt19937_64& rng, std::size_t n, std::size_t m);

/// MMS by recursive choice of a subset for each bundle in turn.
Rational oracle_mms(const XosValuation& v, std::size_t bundles);

/// max sum_i min(cap_i, v_i(A_i)) over integral allocations, by subset recursion.
Rational oracle_integral_welfare(const Instance& instance, const std::vector<Rational>& caps);

/// max over half-integral allocations, each written as the average of two
/// integral allocations that agree on wholly-owned items.
Rational oracle_half_integral_welfare(const Instance& instance, const std::vector<Rational>& caps);

/// Capped welfare of a fractional allocation.
Rational capped_welfare(const Instance& instance, const std::vector<Rational>& caps, const FractionalAllocation& f);

}  // namespace xosfair::testing
