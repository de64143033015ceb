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

#include "xosfair/valuation.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "xosfair/errors.hpp"

namespace xosfair {
namespace {

void check_index(std::size_t j, std::size_t m) {
  if (j >= m) {
    throw InputError("item index " + std::to_string(j) + " out of range (m = " + std::to_string(m) + ")");
  }
}

void check_shape(const FractionalSet& set, std::size_t m) {
  if (set.item_count() != m) {
    throw InputError("fractional set has " + std::to_string(set.item_count()) + " shares, expected " +
                     std::to_string(m));
  }
}

}  // namespace

FractionalSet::FractionalSet(std::vector<Rational> shares) : shares_(std::move(shares)) {
  for (std::size_t j = 0; j < shares_.size(); ++j) {
    if (shares_[j].is_negative() || shares_[j] > Rational(1)) {
      throw InputError("share of item " + std::to_string(j) + " outside [0,1]: " + shares_[j].str());
    }
  }
}

FractionalSet FractionalSet::indicator(std::size_t item_count, std::span<const std::size_t> items) {
  std::vector<Rational> shares(item_count);
  for (std::size_t j : items) {
    check_index(j, item_count);
    shares[j] = 1;
  }
  return FractionalSet(std::move(shares));
}

AdditiveFunction::AdditiveFunction(std::vector<Rational> values) : values_(std::move(values)) {
  for (std::size_t j = 0; j < values_.size(); ++j) {
    if (values_[j].is_negative()) {
      throw InputError("negative value for item " + std::to_string(j) + ": " + values_[j].str());
    }
  }
}

Rational AdditiveFunction::value(std::span<const std::size_t> items) const {
  Rational total;
  for (std::size_t j : items) {
    check_index(j, values_.size());
    total += values_[j];
  }
  return total;
}

Rational AdditiveFunction::value(const FractionalSet& set) const {
  check_shape(set, values_.size());
  Rational total;
  for (std::size_t j = 0; j < values_.size(); ++j) {
    if (!set[j].is_zero()) total += values_[j] * set[j];
  }
  return total;
}

XosValuation::XosValuation(std::vector<AdditiveFunction> functions) : functions_(std::move(functions)) {
  if (functions_.empty()) throw InputError("XOS valuation needs at least one additive function");
  item_count_ = functions_.front().item_count();
  for (const auto& f : functions_) {
    if (f.item_count() != item_count_) throw InputError("ragged additive functions in XOS family");
  }
}

XosValuation XosValuation::additive(std::vector<Rational> values) {
  return XosValuation({AdditiveFunction(std::move(values))});
}

Rational XosValuation::value(std::span<const std::size_t> items) const {
  return functions_[witness(items)].value(items);
}

Rational XosValuation::value(const FractionalSet& set) const { return functions_[witness(set)].value(set); }

std::size_t XosValuation::witness(std::span<const std::size_t> items) const {
  std::size_t best = 0;
  Rational best_value = functions_[0].value(items);
  for (std::size_t k = 1; k < functions_.size(); ++k) {
    Rational candidate = functions_[k].value(items);
    if (candidate > best_value) {
      best = k;
      best_value = std::move(candidate);
    }
  }
  return best;
}

std::size_t XosValuation::witness(const FractionalSet& set) const {
  std::size_t best = 0;
  Rational best_value = functions_[0].value(set);
  for (std::size_t k = 1; k < functions_.size(); ++k) {
    Rational candidate = functions_[k].value(set);
    if (candidate > best_value) {
      best = k;
      best_value = std::move(candidate);
    }
  }
  return best;
}

XosValuation XosValuation::restricted(std::span<const std::size_t> items) const {
  std::vector<AdditiveFunction> family;
  family.reserve(functions_.size());
  for (const auto& f : functions_) {
    std::vector<Rational> values;
    values.reserve(items.size());
    for (std::size_t j : items) {
      check_index(j, item_count_);
      values.push_back(f[j]);
    }
    family.emplace_back(std::move(values));
  }
  return XosValuation(std::move(family));
}

XosValuation XosValuation::divided_by(const Rational& divisor) const {
  if (divisor <= Rational(0)) throw InputError("valuation divisor must be positive");
  std::vector<AdditiveFunction> family;
  family.reserve(functions_.size());
  for (const auto& f : functions_) {
    std::vector<Rational> values = f.values();
    for (auto& x : values) x /= divisor;
    family.emplace_back(std::move(values));
  }
  return XosValuation(std::move(family));
}

CappedValuation::CappedValuation(const XosValuation& v, Rational cap) : base_(&v), cap_(std::move(cap)) {
  if (cap_.is_negative()) throw InputError("truncation cap must be non-negative");
}

Rational CappedValuation::value(std::span<const std::size_t> items) const {
  return std::min(cap_, base_->value(items));
}

Rational CappedValuation::value(const FractionalSet& set) const { return std::min(cap_, base_->value(set)); }

CappedValuation truncate(const XosValuation& v, Rational cap) { return CappedValuation(v, std::move(cap)); }

Rational contribution(const XosValuation& v, std::span<const std::size_t> bundle,
                      std::span<const std::size_t> removed) {
  std::vector<bool> in_removed(v.item_count(), false);
  for (std::size_t j : removed) {
    check_index(j, v.item_count());
    in_removed[j] = true;
  }
  std::vector<bool> in_bundle(v.item_count(), false);
  ItemSet rest;
  for (std::size_t j : bundle) {
    check_index(j, v.item_count());
    in_bundle[j] = true;
    if (!in_removed[j]) rest.push_back(j);
  }
  for (std::size_t j : removed) {
    if (!in_bundle[j]) throw InputError("removed set is not a subset of the bundle (item " + std::to_string(j) + ")");
  }
  return v.value(bundle) - v.value(rest);
}

}  // namespace xosfair
