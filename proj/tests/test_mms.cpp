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
#include "xosfair/errors.hpp"
#include "xosfair/generators.hpp"
#include "xosfair/mms.hpp"

namespace xosfair {
namespace {

using testing::R;

TEST(Mms, AdditiveFrozen) {
  const MmsCertificate c = maximin_share(XosValuation::additive({R(3), R(2), R(1)}), 2);
  EXPECT_EQ(c.value, R(3));
  ASSERT_EQ(c.partition.size(), 2U);
  EXPECT_EQ(c.partition[0], (ItemSet{0}));
  EXPECT_EQ(c.partition[1], (ItemSet{1, 2}));
}

TEST(Mms, SpecialInstances) {
  const Instance lemma = lemma1_instance();
  EXPECT_EQ(mms(lemma, 0).value, R(2));
  EXPECT_EQ(mms(lemma, 1).value, R(2));
  for (std::size_t n : {2U, 3U}) {
    const Instance grid = grid_instance(n);
    for (std::size_t i = 0; i < n; ++i) EXPECT_EQ(mms(grid, i).value, R(1));
  }
}

TEST(Mms, FewerPositiveItemsThanAgentsGivesZero) {
  const Instance inst(3, {XosValuation::additive({R(5), R(5), R(0)}), XosValuation::additive({R(1), R(1), R(1)}),
                          XosValuation::additive({R(1), R(1), R(1)})});
  EXPECT_EQ(mms(inst, 0).value, R(0));
  EXPECT_EQ(mms(inst, 1).value, R(1));
}

TEST(Mms, CertificateAttainsValue) {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 2 + rng() % 2;
    const Instance inst = testing::random_instance(rng, n, 2 + rng() % 5, 1 + rng() % 3, 0, 8, 15);
    for (std::size_t i = 0; i < n; ++i) {
      const MmsCertificate c = mms(inst, i);
      ASSERT_EQ(c.partition.size(), n);
      std::vector<int> seen(inst.item_count(), 0);
      Rational worst = inst.valuation(i).value(c.partition[0]);
      for (const auto& b : c.partition) {
        for (auto j : b) ++seen[j];
        worst = std::min(worst, inst.valuation(i).value(b));
      }
      for (int s : seen) EXPECT_EQ(s, 1);
      EXPECT_EQ(worst, c.value);
      EXPECT_LE(c.value, inst.valuation(i).value(testing::all_items(inst.item_count())));
    }
  }
}

TEST(Mms, AgreesWithSubsetOracle) {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 80; ++trial) {
    const std::size_t bundles = 2 + rng() % 2;
    const Instance inst = testing::random_instance(rng, 1, 2 + rng() % 6, 1 + rng() % 3, 0, 8, 20);
    EXPECT_EQ(maximin_share(inst.valuation(0), bundles).value, testing::oracle_mms(inst.valuation(0), bundles))
        << "trial " << trial;
  }
}

TEST(Mms, NormalizeScalesToOne) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t n = 2 + rng() % 2;
    const Instance inst = testing::random_instance(rng, n, 3 + rng() % 4, 2, 0, 8, 30);
    const Normalization norm = normalize(inst);
    EXPECT_TRUE(norm.instance.normalized());
    for (std::size_t i = 0; i < n; ++i) {
      const Rational original = mms(inst, i).value;
      EXPECT_EQ(norm.zero_mms[i], original.is_zero());
      EXPECT_EQ(mms(norm.instance, i).value, original.is_zero() ? R(0) : R(1));
      EXPECT_EQ(norm.factors[i], original.is_zero() ? R(1) : original);
    }
  }
}

TEST(Mms, ReduceNeverLowersShare) {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t n = 2 + rng() % 2;
    const Instance inst = testing::random_instance(rng, n, 2 + rng() % 5, 2, 0, 8, 20);
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t j = 0; j < inst.item_count(); ++j) {
        const Instance r = reduce(inst, a, j);
        ASSERT_EQ(r.agent_count(), n - 1);
        ASSERT_EQ(r.item_count(), inst.item_count() - 1);
        for (std::size_t k = 0, i = 0; i < n; ++i) {
          if (i == a) continue;
          EXPECT_GE(mms(r, k++).value, mms(inst, i).value);
        }
      }
    }
  }
}

TEST(Mms, HalvingSplitCoversCertificate) {
  const Instance inst = normalize(lemma1_instance()).instance;
  const MmsCertificate c = mms(inst, 0);
  const auto sets = halving_split(inst.valuation(0), c);
  ASSERT_EQ(sets.size(), 4U);
  for (std::size_t j = 0; j < 4; ++j) {
    Rational total(0);
    for (const auto& s : sets) total += s[j];
    EXPECT_EQ(total, R(1));
  }
  for (const auto& s : sets) EXPECT_GE(inst.valuation(0).value(s), R(1, 2));
  EXPECT_THROW(halving_split(inst.valuation(0), MmsCertificate{R(1, 2), c.partition}), InputError);
}

}  // namespace
}  // namespace xosfair
