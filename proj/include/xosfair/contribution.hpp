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

#include <span>

#include "xosfair/allocation.hpp"
#include "xosfair/valuation.hpp"

namespace xosfair {

/// Loss in total value when the items of `removed` are taken from their owners:
/// sum over agents of v_i(A_i) - v_i(A_i \ removed).
Rational contribution(std::span<const XosValuation> valuations, const Allocation& a,
                      std::span<const std::size_t> removed);

/// Same, under capped valuations min(cap_i, v_i).
Rational contribution(std::span<const XosValuation> valuations, std::span<const Rational> caps,
                      const Allocation& a, std::span<const std::size_t> removed);

/// Witness-function value of the fractional mass `removed` takes out of F:
/// sum_i sum_j u_i(b_j) * s_j * f_ij, where u_i is the witness of row i.
///
/// Upper-bounds the true contribution and is linear in `removed`, so summing
/// it over a fractional partition of the items gives sum_i v_i(F_i) exactly.
Rational witness_mass(std::span<const XosValuation> valuations, const FractionalAllocation& f,
                      const FractionalSet& removed);

inline Rational witness_mass(std::span<const XosValuation> valuations, const Allocation& a,
                             const FractionalSet& removed) {
  return witness_mass(valuations, FractionalAllocation::from(a), removed);
}

}  // namespace xosfair
