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
#include "xosfair/algorithms.hpp"
#include "xosfair/errors.hpp"
#include "xosfair/generators.hpp"
#include "xosfair/io.hpp"
#include "xosfair/verify.hpp"

namespace xosfair {
namespace {

using testing::R;

std::string where_of(std::string_view text) {
  try {
    parse_instance(text);
  } catch (const ParseError& e) {
    return e.where();
  }
  return "<none>";
}

TEST(Io, InstanceRoundTrip) {
  for (const auto& family : {"lemma1", "grid", "random-xos", "additive"}) {
    GeneratorParams p;
    p.n = 3;
    p.m = 5;
    p.seed = 9;
    const InstanceFile file = generate(family, p);
    const std::string text = serialize_instance(file);
    const InstanceFile back = parse_instance(text);
    EXPECT_EQ(back.instance, file.instance) << family;
    EXPECT_EQ(back.name, file.name);
    EXPECT_EQ(serialize_instance(back), text);
  }
}

TEST(Io, ShippedFixturesAreCanonical) {
  for (const char* name : {"lemma1.json", "grid2.json", "grid3.json", "random-xos-n3-m7.json"}) {
    const std::string text = read_file(std::string(XOSFAIR_FIXTURES) + "/" + name);
    EXPECT_EQ(serialize_instance(parse_instance(text)), text) << name;
  }
  EXPECT_EQ(parse_instance(read_file(std::string(XOSFAIR_FIXTURES) + "/lemma1.json")).instance, lemma1_instance());
}

TEST(Io, AcceptsFractionsAndIntegers) {
  const InstanceFile f = parse_instance(R"({"items": 2, "agents": [{"functions": [["1/3", 2]]}]})");
  EXPECT_EQ(f.instance.valuation(0).function(0)[0], R(1, 3));
  EXPECT_EQ(f.instance.valuation(0).function(0)[1], R(2));
}

TEST(Io, ParseErrorsNameTheLocation) {
  EXPECT_EQ(where_of(R"({"items": 2, "agents": [{"functions": [["1", "x"]]}]})"), "agents[0].functions[0][1]");
  EXPECT_EQ(where_of(R"({"items": 2, "agents": [{"functions": [["1"]]}]})"), "agents[0].functions[0]");
  EXPECT_EQ(where_of(R"({"items": 1, "agents": [{"functions": [["1"]]}, {"functions": [["-1"]]}]})"),
            "agents[1].functions[0][0]");
  EXPECT_EQ(where_of(R"({"items": 1, "agents": []})"), "agents");
  EXPECT_EQ(where_of(R"({"agents": []})"), "");
  EXPECT_EQ(where_of("{"), "byte 2");
  EXPECT_EQ(where_of(R"({"items": 1, "agents": [{"functions": [["1"]]}], "seed": -1})"), "seed");
}

TEST(Io, ResultRoundTrip) {
  const Result a = Allocation(2, {0, 1, 1});
  EXPECT_EQ(std::get<Allocation>(parse_result(serialize_result(a))), std::get<Allocation>(a));
  const Result r = alg_rand(normalize(lemma1_instance()).instance);
  const auto back = std::get<RandomizedAllocation>(parse_result(serialize_result(r)));
  const auto& orig = std::get<RandomizedAllocation>(r);
  ASSERT_EQ(back.size(), orig.size());
  for (std::size_t k = 0; k < back.size(); ++k) {
    EXPECT_EQ(back.support()[k].allocation, orig.support()[k].allocation);
    EXPECT_EQ(back.support()[k].probability, orig.support()[k].probability);
  }
}

TEST(Io, ResultErrors) {
  EXPECT_THROW(parse_result(R"({"kind": "allocation", "agents": 2, "owner": [0, 2]})"), ParseError);
  EXPECT_THROW(parse_result(R"({"kind": "other", "agents": 2})"), ParseError);
  EXPECT_THROW(parse_result(R"({"kind": "randomized", "agents": 1, "support": [
      {"probability": "1/3", "owner": [0]}]})"),
               ParseError);
}

TEST(Generators, DeterministicAndValid) {
  EXPECT_EQ(random_xos_instance(3, 6, 2, 8, 42), random_xos_instance(3, 6, 2, 8, 42));
  EXPECT_NE(random_xos_instance(3, 6, 2, 8, 42), random_xos_instance(3, 6, 2, 8, 43));
  const Instance inst = random_xos_instance(2, 5, 3, 4, 1);
  for (const auto& v : inst.valuations()) {
    EXPECT_EQ(v.function_count(), 3U);
    for (const auto& u : v.functions()) {
      for (const auto& x : u.values()) {
        EXPECT_TRUE(x.is_integer());
        EXPECT_LE(x, R(4));
      }
    }
  }
  EXPECT_THROW(generate("nope", {}), InputError);
}

TEST(Verify, LemmaBounds) {
  const Instance lemma = lemma1_instance();
  EXPECT_EQ(best_two_agent_split(lemma).value, R(3));
  const Instance same(2, {XosValuation::additive({R(1), R(1)}), XosValuation::additive({R(1), R(1)})});
  EXPECT_EQ(best_two_agent_split(same).value, R(2));
  EXPECT_THROW(best_two_agent_split(grid_instance(3)), InputError);
}

// Handcrafted coin flip: each agent gets 2 in one outcome and 1 in the other.
TEST(Verify, CoinFlipOnLemmaInstance) {
  const Instance lemma = lemma1_instance();
  const RandomizedAllocation coin({{Allocation(2, {0, 0, 1, 0}), R(1, 2)}, {Allocation(2, {0, 1, 1, 1}), R(1, 2)}});
  const VerificationReport rep = verify(lemma, coin, R(1, 2), R(3, 4));
  EXPECT_TRUE(rep.passed());
  EXPECT_EQ(rep.agents[0].ex_ante, R(3, 2));
  EXPECT_EQ(rep.agents[1].ex_ante, R(3, 2));
  const VerificationReport strict = verify(lemma, coin, R(1, 2), R(4, 5));
  EXPECT_FALSE(strict.passed());
  EXPECT_EQ(strict.failing_agents(), (std::vector<std::size_t>{0, 1}));
  EXPECT_NE(strict.to_json().find("\"failures\""), std::string::npos);
}

TEST(Verify, EverythingToFirstAgentFails) {
  const VerificationReport rep = verify(lemma1_instance(), Allocation(2, {0, 0, 0, 0}), R(3, 13));
  EXPECT_EQ(rep.failing_agents(), (std::vector<std::size_t>{1}));
  EXPECT_EQ(rep.agents[1].ex_post_min, R(0));
}

TEST(Verify, ShapeMismatch) {
  EXPECT_THROW(verify(lemma1_instance(), Allocation(2, {0, 1}), R(1, 8)), InputError);
}

}  // namespace
}  // namespace xosfair
