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

#include <optional>
#include <string>
#include <vector>

#include "xosfair/io.hpp"
#include "xosfair/labeling.hpp"

namespace xosfair {

struct AgentReport {
  std::size_t agent;
  Rational mms;
  Rational ex_post_min;
  Rational ex_ante;
  std::optional<Rational> ex_post_ratio;  // absent when mms == 0
  std::optional<Rational> ex_ante_ratio;
  bool ex_post_pass;
  bool ex_ante_pass;
};

/// Guarantee check in original (pre-normalization) units.
struct VerificationReport {
  Rational ex_post_alpha;
  std::optional<Rational> ex_ante_alpha;
  std::size_t support_size = 1;
  std::vector<AgentReport> agents;
  std::vector<Rational> normalization_factors;  // filled by callers that normalized

  bool passed() const;
  std::vector<std::size_t> failing_agents() const;
  std::string to_text() const;
  std::string to_json() const;  // includes a "failures" section when !passed()
};

/// Every outcome must give each agent at least ex_post_alpha * MMS_i; for
/// randomized results with an ex_ante_alpha, the expectation must reach
/// ex_ante_alpha * MMS_i too.
VerificationReport verify(const Instance& instance, const Result& result, const Rational& ex_post_alpha,
                          const std::optional<Rational>& ex_ante_alpha = std::nullopt,
                          const EnumerationLimits& limits = {});

struct TwoAgentSplit {
  Rational value;
  ItemSet first_bundle;  // S attaining max v_1(S) + v_2(M \ S); lowest bitmask on ties
};

/// max over S of v_1(S) + v_2(M \ S) on a two-agent instance. Twice this
/// bounds the best ex-ante guarantee achievable for both agents at once.
TwoAgentSplit best_two_agent_split(const Instance& instance, const EnumerationLimits& limits = {});

}  // namespace xosfair
