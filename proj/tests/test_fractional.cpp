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

#include <gtest/gtest.h>

#include "support.hpp"
#include "xosfair/contribution.hpp"
#include "xosfair/errors.hpp"
#include "xosfair/fractional.hpp"

namespace xosfair {
namespace {

using testing::R;

TEST(Fractional, ValidatesShares) {
  EXPECT_THROW(FractionalAllocation(2, 1, {R(2, 3), R(2, 3)}), InputError);
  EXPECT_THROW(FractionalAllocation(2, 1, {R(1, 3), R(2, 3)}, true), InputError);
  EXPECT_NO_THROW(FractionalAllocation(2, 1, {R(1, 2), R(1, 2)}, true));
  EXPECT_THROW(Allocation(2, {0, 2}), InputError);
}

TEST(Fractional, RandomizedAllocationValidation) {
  const Allocation a(2, {0, 1});
  const Allocation b(2, {1, 0});
  EXPECT_THROW(RandomizedAllocation({}), InputError);
  EXPECT_THROW(RandomizedAllocation({{a, R(1, 2)}, {b, R(1, 3)}}), InputError);
  EXPECT_THROW(RandomizedAllocation({{a, R(1, 2)}, {a, R(1, 2)}}), InputError);
  EXPECT_THROW(RandomizedAllocation({{a, R(0)}, {b, R(1)}}), InputError);
  EXPECT_NO_THROW(RandomizedAllocation({{a, R(1, 2)}, {b, R(1, 2)}}));
}

TEST(Fractional, UniformIsCompleteAndProportional) {
  std::mt19937_64 rng(4);
  const Instance inst = testing::random_instance(rng, 3, 4, 2, 0, 6);
  const FractionalAllocation f = uniform_fractional(inst);
  EXPECT_TRUE(f.complete());
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 4; ++j) EXPECT_EQ(f.at(i, j), R(1, 3));
  }
}

TEST(Fractional, IndependentRoundingMarginalsAndLowerBound) {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t n = 2 + rng() % 2;
    const std::size_t m = 1 + rng() % 5;
    const Instance inst = testing::random_instance(rng, n, m, 1 + rng() % 3, 0, 7, 20);
    const FractionalAllocation f = testing::random_fractional(rng, n, m);
    const RandomizedAllocation r = independent_rounding(f);
    Rational total(0);
    for (const auto& o : r.support()) total += o.probability;
    EXPECT_EQ(total, R(1));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < m; ++j) {
        Rational p(0);
        for (const auto& o : r.support()) {
          if (o.allocation.owner(j) == i) p += o.probability;
        }
        EXPECT_EQ(p, f.at(i, j));
      }
      EXPECT_GE(expected_value(r, inst.valuation(i), i), inst.valuation(i).value(f.row(i)));
      EXPECT_LE(ex_post_min(r, inst.valuation(i), i), expected_value(r, inst.valuation(i), i));
    }
  }
}

TEST(Fractional, IndependentRoundingCapacity) {
  const FractionalAllocation f(2, 12, std::vector<Rational>(24, R(1, 2)));
  EXPECT_THROW(independent_rounding(f, EnumerationLimits{1000}), CapacityError);
  EXPECT_THROW(independent_rounding(FractionalAllocation(2, 1, {R(1, 2), R(0)})), InputError);
}

// Summing the witness mass over a fractional partition of the items recovers
// sum_i v_i(F_i); on integral sets it bounds the capped contribution.
TEST(WitnessMass, LinearIdentityAndContributionBound) {
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t n = 2 + rng() % 2;
    const std::size_t m = 2 + rng() % 4;
    const Instance inst = testing::random_instance(rng, n, m, 1 + rng() % 3, 0, 8, 20);
    const FractionalAllocation f = testing::random_fractional(rng, n, m);
    Rational total(0);
    for (const auto& part : testing::random_fractional_partition(rng, m, 1 + rng() % 4)) {
      total += witness_mass(inst.valuations(), f, part);
    }
    Rational direct(0);
    for (std::size_t i = 0; i < n; ++i) direct += inst.valuation(i).value(f.row(i));
    EXPECT_EQ(total, direct);

    const Allocation a = testing::random_allocation(rng, n, m);
    for (std::uint64_t s = 0; s < (std::uint64_t{1} << m); ++s) {
      const ItemSet set = testing::from_mask(s, m);
      EXPECT_LE(contribution(inst.valuations(), a, set),
                witness_mass(inst.valuations(), a, FractionalSet::indicator(m, set)));
    }
  }
}

}  // namespace
}  // namespace xosfair
