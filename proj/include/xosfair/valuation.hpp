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
#include <span>
#include <vector>

#include "xosfair/rational.hpp"

namespace xosfair {

/// A set of distinct item indices. Order is irrelevant to every evaluation.
using ItemSet = std::vector<std::size_t>;

/// Per-item shares in [0, 1]; a divisible view of an item set.
class FractionalSet {
 public:
  FractionalSet() = default;
  explicit FractionalSet(std::vector<Rational> shares);

  /// Share 1 on `items`, 0 elsewhere.
  static FractionalSet indicator(std::size_t item_count, std::span<const std::size_t> items);

  std::size_t item_count() const { return shares_.size(); }
  const Rational& operator[](std::size_t j) const { return shares_[j]; }
  const std::vector<Rational>& shares() const { return shares_; }

 private:
  std::vector<Rational> shares_;
};

/// Non-negative per-item values; the value of a set is the sum over its items.
class AdditiveFunction {
 public:
  AdditiveFunction() = default;
  explicit AdditiveFunction(std::vector<Rational> values);

  std::size_t item_count() const { return values_.size(); }
  const Rational& operator[](std::size_t j) const { return values_[j]; }
  const std::vector<Rational>& values() const { return values_; }

  Rational value(std::span<const std::size_t> items) const;
  Rational value(const FractionalSet& set) const;

  friend bool operator==(const AdditiveFunction&, const AdditiveFunction&) = default;

 private:
  std::vector<Rational> values_;
};

/// Fractionally subadditive valuation: the pointwise maximum of a non-empty
/// family of additive functions over the same items.
class XosValuation {
 public:
  explicit XosValuation(std::vector<AdditiveFunction> functions);

  static XosValuation additive(std::vector<Rational> values);

  std::size_t item_count() const { return item_count_; }
  std::size_t function_count() const { return functions_.size(); }
  const AdditiveFunction& function(std::size_t k) const { return functions_[k]; }
  const std::vector<AdditiveFunction>& functions() const { return functions_; }

  Rational value(std::span<const std::size_t> items) const;
  Rational value(const FractionalSet& set) const;

  // Index of the family member attaining the maximum; ties go to the lowest index.
  std::size_t witness(std::span<const std::size_t> items) const;
  std::size_t witness(const FractionalSet& set) const;

  /// Same family restricted to `items`, re-indexed in the given order.
  XosValuation restricted(std::span<const std::size_t> items) const;
  /// Every entry divided by `divisor` (> 0).
  XosValuation divided_by(const Rational& divisor) const;

  friend bool operator==(const XosValuation&, const XosValuation&) = default;

 private:
  std::size_t item_count_ = 0;
  std::vector<AdditiveFunction> functions_;
};

/// min(cap, v(.)) evaluated on the fly. Holds a reference: `v` must outlive the view.
class CappedValuation {
 public:
  CappedValuation(const XosValuation& v, Rational cap);

  const Rational& cap() const { return cap_; }
  const XosValuation& base() const { return *base_; }

  Rational value(std::span<const std::size_t> items) const;
  Rational value(const FractionalSet& set) const;

 private:
  const XosValuation* base_;
  Rational cap_;
};

CappedValuation truncate(const XosValuation& v, Rational cap);

/// v(T) - v(T \ S). Throws InputError unless S is a subset of T.
Rational contribution(const XosValuation& v, std::span<const std::size_t> bundle,
                      std::span<const std::size_t> removed);

}  // namespace xosfair
