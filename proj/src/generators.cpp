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

#include "xosfair/generators.hpp"

#include <random>

#include "xosfair/errors.hpp"

namespace xosfair {
namespace {

std::vector<Rational> ints(std::initializer_list<long> values) {
  return std::vector<Rational>(values.begin(), values.end());
}

// Raw engine output modulo the range keeps streams identical across standard libraries.
Rational draw(std::mt19937_64& rng, std::uint64_t maxval) {
  return Rational(static_cast<long>(rng() % (maxval + 1)));
}

}  // namespace

Instance lemma1_instance() {
  std::vector<XosValuation> v;
  v.emplace_back(std::vector<AdditiveFunction>{AdditiveFunction(ints({1, 1, 0, 0})),
                                               AdditiveFunction(ints({0, 0, 1, 1}))});
  v.emplace_back(std::vector<AdditiveFunction>{AdditiveFunction(ints({1, 0, 0, 1})),
                                               AdditiveFunction(ints({0, 1, 1, 0}))});
  return Instance(4, std::move(v));
}

Instance grid_instance(std::size_t n) {
  if (n == 0) throw InputError("grid needs n >= 1");
  const std::size_t m = n * n;
  const Rational value(1, static_cast<long>(n));
  std::vector<XosValuation> vals;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<AdditiveFunction> family;
    for (std::size_t k = 0; k < n; ++k) {
      std::vector<Rational> row(m);
      for (std::size_t j = k * n; j < (k + 1) * n; ++j) row[j] = value;
      family.emplace_back(std::move(row));
    }
    vals.emplace_back(std::move(family));
  }
  return Instance(m, std::move(vals));
}

Instance random_xos_instance(std::size_t n, std::size_t m, std::size_t l, std::uint64_t maxval, std::uint64_t seed) {
  if (n == 0 || l == 0) throw InputError("random-xos needs n >= 1 and l >= 1");
  std::mt19937_64 rng(seed);
  std::vector<XosValuation> vals;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<AdditiveFunction> family;
    for (std::size_t k = 0; k < l; ++k) {
      std::vector<Rational> row;
      for (std::size_t j = 0; j < m; ++j) row.push_back(draw(rng, maxval));
      family.emplace_back(std::move(row));
    }
    vals.emplace_back(std::move(family));
  }
  return Instance(m, std::move(vals));
}

Instance random_additive_instance(std::size_t n, std::size_t m, std::uint64_t maxval, std::uint64_t seed) {
  return random_xos_instance(n, m, 1, maxval, seed);
}

InstanceFile generate(const std::string& family, const GeneratorParams& p) {
  if (family == "lemma1") return InstanceFile{lemma1_instance(), "lemma1", family, std::nullopt};
  if (family == "grid") {
    return InstanceFile{grid_instance(p.n), "grid-" + std::to_string(p.n), family, std::nullopt};
  }
  if (family == "random-xos") {
    return InstanceFile{random_xos_instance(p.n, p.m, p.l, p.maxval, p.seed),
                        "random-xos-n" + std::to_string(p.n) + "-m" + std::to_string(p.m) + "-l" +
                            std::to_string(p.l) + "-v" + std::to_string(p.maxval),
                        family, p.seed};
  }
  if (family == "additive") {
    return InstanceFile{random_additive_instance(p.n, p.m, p.maxval, p.seed),
                        "additive-n" + std::to_string(p.n) + "-m" + std::to_string(p.m) + "-v" +
                            std::to_string(p.maxval),
                        family, p.seed};
  }
  throw InputError("unknown instance family '" + family + "'");
}

}  // namespace xosfair
