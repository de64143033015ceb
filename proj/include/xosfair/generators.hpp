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

#include <cstdint>
#include <string>

#include "xosfair/io.hpp"

namespace xosfair {

struct GeneratorParams {
  std::size_t n = 2;
  std::size_t m = 4;
  std::size_t l = 2;        // additive functions per agent (random-xos)
  std::uint64_t maxval = 8;  // integer values are drawn from 0..maxval
  std::uint64_t seed = 0;
};

/// Two agents, four items, two additive functions each: MMS 2 for both agents,
/// no randomized allocation guarantees more than 3/2 to both in expectation.
Instance lemma1_instance();

/// n agents, n*n items in n blocks of n. Agent function k values the items of
/// block k at 1/n and everything else at 0; every agent has MMS 1.
Instance grid_instance(std::size_t n);

/// Integer values uniform on 0..maxval from a seeded 64-bit Mersenne Twister.
Instance random_xos_instance(std::size_t n, std::size_t m, std::size_t l, std::uint64_t maxval, std::uint64_t seed);
Instance random_additive_instance(std::size_t n, std::size_t m, std::uint64_t maxval, std::uint64_t seed);

/// Dispatch by family name: "lemma1", "grid", "random-xos", "additive".
/// Throws InputError for an unknown family.
InstanceFile generate(const std::string& family, const GeneratorParams& params);

}  // namespace xosfair
