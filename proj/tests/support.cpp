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

#include "support.hpp"

#include <algorithm>

namespace xosfair::testing {
namespace {

std::uint64_t draw(std::mt19937_64& rng, std::uint64_t bound) { return rng() % bound; }

// Enumerate every owner vector in {0..n-1}^m.
template <typename F>
void for_each_owner(std::size_t n, std::size_t m, F&& f) {
  std::vector<std::size_t> owner(m, 0);
  while (true) {
    f(owner);
    std::size_t j = 0;
    while (j < m && ++owner[j] == n) owner[j++] = 0;
    if (j == m) return;
  }
}

void mms_rec(const XosValuation& v, std::uint64_t left, std::size_t m, std::size_t bundles, Rational current,
             Rational& best) {
  if (current <= best) return;
  if (bundles == 1) {
    const Rational last = v.value(from_mask(left, m));
    const Rational value = std::min(current, last);
    if (value > best) best = value;
    return;
  }
  // Submask enumeration of the remaining items for the next bundle.
  for (std::uint64_t sub = left;; sub = (sub - 1) & left) {
    const Rational here = v.value(from_mask(sub, m));
    mms_rec(v, left & ~sub, m, bundles - 1, std::min(current, here), best);
    if (sub == 0) break;
  }
}

void welfare_rec(const Instance& inst, const std::vector<Rational>& caps, std::size_t agent, std::uint64_t left,
                 Rational acc, Rational& best) {
  const std::size_t m = inst.item_count();
  if (agent + 1 == inst.agent_count()) {
    const Rational total = acc + std::min(caps[agent], inst.valuation(agent).value(from_mask(left, m)));
    if (total > best) best = total;
    return;
  }
  for (std::uint64_t sub = left;; sub = (sub - 1) & left) {
    welfare_rec(inst, caps, agent + 1, left & ~sub,
                acc + std::min(caps[agent], inst.valuation(agent).value(from_mask(sub, m))), best);
    if (sub == 0) break;
  }
}

}  // namespace

Instance random_instance(std::mt19937_64& rng, std::size_t n, std::size_t m, std::size_t l, long lo, long hi,
                         int zero_percent) {
  std::vector<XosValuation> vals;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<AdditiveFunction> family;
    for (std::size_t k = 0; k < l; ++k) {
      std::vector<Rational> values;
      for (std::size_t j = 0; j < m; ++j) {
        const bool zero = static_cast<int>(draw(rng, 100)) < zero_percent;
        values.emplace_back(zero ? 0 : lo + static_cast<long>(draw(rng, static_cast<std::uint64_t>(hi - lo + 1))));
      }
      family.emplace_back(std::move(values));
    }
    vals.emplace_back(std::move(family));
  }
  return Instance(m, std::move(vals));
}

FractionalAllocation random_half_integral(std::mt19937_64& rng, std::size_t n, std::size_t m) {
  std::vector<Rational> shares(n * m, Rational(0));
  for (std::size_t j = 0; j < m; ++j) {
    const std::size_t a = draw(rng, n);
    if (n >= 2 && draw(rng, 2) == 0) {
      std::size_t b = draw(rng, n - 1);
      if (b >= a) ++b;
      shares[a * m + j] = Rational(1, 2);
      shares[b * m + j] = Rational(1, 2);
    } else {
      shares[a * m + j] = Rational(1);
    }
  }
  return FractionalAllocation(n, m, std::move(shares), true);
}

FractionalAllocation random_fractional(std::mt19937_64& rng, std::size_t n, std::size_t m) {
  std::vector<Rational> shares(n * m, Rational(0));
  for (std::size_t j = 0; j < m; ++j) {
    std::vector<long> w(n);
    long total = 0;
    for (auto& x : w) {
      x = draw(rng, 3) == 0 ? 0 : 1 + static_cast<long>(draw(rng, 4));
      total += x;
    }
    if (total == 0) {
      w[draw(rng, n)] = 1;
      total = 1;
    }
    for (std::size_t i = 0; i < n; ++i) shares[i * m + j] = Rational(w[i], total);
  }
  return FractionalAllocation(n, m, std::move(shares));
}

std::vector<FractionalSet> random_fractional_partition(std::mt19937_64& rng, std::size_t m, std::size_t t) {
  std::vector<std::vector<Rational>> parts(t, std::vector<Rational>(m, Rational(0)));
  for (std::size_t j = 0; j < m; ++j) {
    std::vector<long> w(t);
    long total = 0;
    for (auto& x : w) {
      x = static_cast<long>(draw(rng, 4));
      total += x;
    }
    if (total == 0) {
      w[0] = 1;
      total = 1;
    }
    for (std::size_t k = 0; k < t; ++k) parts[k][j] = Rational(w[k], total);
  }
  std::vector<FractionalSet> out;
  for (auto& p : parts) out.emplace_back(std::move(p));
  return out;
}

Allocation random_allocation(std::mt19937_64& rng, std::size_t n, std::size_t m) {
  std::vector<std::size_t> owner(m);
  for (auto& o : owner) o = draw(rng, n);
  return Allocation(n, std::move(owner));
}

Rational oracle_mms(const XosValuation& v, std::size_t bundles) {
  const std::size_t m = v.item_count();
  Rational best(-1);
  mms_rec(v, (std::uint64_t{1} << m) - 1, m, bundles, v.value(all_items(m)) + Rational(1), best);
  return best;
}

Rational oracle_integral_welfare(const Instance& instance, const std::vector<Rational>& caps) {
  if (instance.agent_count() == 0) return Rational(0);
  Rational best(-1);
  welfare_rec(instance, caps, 0, (std::uint64_t{1} << instance.item_count()) - 1, Rational(0), best);
  return best;
}

Rational oracle_half_integral_welfare(const Instance& instance, const std::vector<Rational>& caps) {
  // Any half-integral allocation that leaves no item partly unassigned is
  // (A + B) / 2 for integral A, B. Partial columns never help (monotone).
  const std::size_t n = instance.agent_count();
  const std::size_t m = instance.item_count();
  std::vector<std::vector<std::size_t>> all;
  for_each_owner(n, m, [&](const std::vector<std::size_t>& o) { all.push_back(o); });
  Rational best(-1);
  std::vector<Rational> shares(n * m);
  for (std::size_t a = 0; a < all.size(); ++a) {
    for (std::size_t b = a; b < all.size(); ++b) {
      std::fill(shares.begin(), shares.end(), Rational(0));
      for (std::size_t j = 0; j < m; ++j) {
        shares[all[a][j] * m + j] += Rational(1, 2);
        shares[all[b][j] * m + j] += Rational(1, 2);
      }
      const Rational w = capped_welfare(instance, caps, FractionalAllocation(n, m, shares, true));
      if (w > best) best = w;
    }
  }
  return best;
}

Rational capped_welfare(const Instance& instance, const std::vector<Rational>& caps, const FractionalAllocation& f) {
  Rational total(0);
  for (std::size_t i = 0; i < instance.agent_count(); ++i) {
    total += std::min(caps[i], instance.valuation(i).value(f.row(i)));
  }
  return total;
}

}  // namespace xosfair::testing
