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

#include "xosfair/rounding.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "xosfair/errors.hpp"

namespace xosfair {
namespace {

constexpr std::size_t kUnset = std::numeric_limits<std::size_t>::max();

void attach(std::array<std::size_t, 2>& slots, std::size_t edge, const char* side, std::size_t vertex) {
  if (slots[0] == kUnset) {
    slots[0] = edge;
  } else if (slots[1] == kUnset) {
    slots[1] = edge;
  } else {
    throw StructuralError(std::string(side) + " vertex " + std::to_string(vertex) + " has degree above 2");
  }
}

}  // namespace

RoundingGraph::RoundingGraph(std::size_t x_count, std::size_t y_count, std::vector<Edge> edges)
    : edges_(std::move(edges)),
      at_x_(x_count, {kUnset, kUnset}),
      at_y_(y_count, {kUnset, kUnset}) {
  for (std::size_t e = 0; e < edges_.size(); ++e) {
    const auto [x, y] = edges_[e];
    if (x >= x_count || y >= y_count) throw StructuralError("edge endpoint out of range");
    attach(at_x_[x], e, "X", x);
    attach(at_y_[y], e, "Y", y);
  }
  for (std::size_t x = 0; x < x_count; ++x) {
    auto& s = at_x_[x];
    if (s[1] == kUnset) throw StructuralError("X vertex " + std::to_string(x) + " has degree below 2");
    if (edges_[s[0]].y == edges_[s[1]].y) throw StructuralError("parallel edges at X vertex " + std::to_string(x));
    if (edges_[s[0]].y > edges_[s[1]].y) std::swap(s[0], s[1]);
  }
  for (std::size_t y = 0; y < y_count; ++y) {
    auto& s = at_y_[y];
    if (s[1] == kUnset) throw StructuralError("Y vertex " + std::to_string(y) + " has degree below 2");
    if (edges_[s[0]].x > edges_[s[1]].x) std::swap(s[0], s[1]);
  }
}

MatchingPair decompose_two_regular(const RoundingGraph& graph) {
  MatchingPair out;
  std::vector<bool> visited(graph.x_count(), false);
  const auto& edges = graph.edges();
  for (std::size_t start = 0; start < graph.x_count(); ++start) {
    if (visited[start]) continue;
    std::size_t x = start;
    std::size_t e = graph.edges_at_x(start)[0];
    do {
      visited[x] = true;
      out.first.push_back(e);
      const auto& at_y = graph.edges_at_y(edges[e].y);
      const std::size_t back = at_y[0] == e ? at_y[1] : at_y[0];
      out.second.push_back(back);
      x = edges[back].x;
      const auto& at_x = graph.edges_at_x(x);
      e = at_x[0] == back ? at_x[1] : at_x[0];
    } while (x != start);
  }
  return out;
}

RoundingPlan plan_rounding(const FractionalAllocation& f, const Instance& instance) {
  const std::size_t n = f.agent_count();
  const std::size_t m = f.item_count();
  if (n != instance.agent_count() || m != instance.item_count()) {
    throw InputError("fractional allocation shape does not match the instance");
  }
  if (!f.has_half_integral_entries()) throw InputError("rounding needs entries in {0, 1/2, 1}");
  if (!f.complete()) throw InputError("rounding needs a complete allocation");

  const Rational half(1, 2);
  std::vector<std::size_t> witness(n);
  std::vector<std::vector<std::size_t>> halves(n);
  std::vector<bool> shared(m, false);
  for (std::size_t i = 0; i < n; ++i) {
    witness[i] = instance.valuation(i).witness(f.row(i));
    for (std::size_t j = 0; j < m; ++j) {
      if (f.at(i, j) == half) {
        halves[i].push_back(j);
        shared[j] = true;
      }
    }
  }

  std::vector<std::size_t> odd;
  for (std::size_t i = 0; i < n; ++i) {
    if (halves[i].size() % 2 == 1) odd.push_back(i);
  }
  if (odd.size() % 2 != 0) throw StructuralError("odd number of agents with fractional row sums");
  std::vector<std::pair<std::size_t, std::size_t>> dummy_pairs;
  for (std::size_t k = 0; k + 1 < odd.size(); k += 2) {
    const std::size_t dummy = m + dummy_pairs.size();
    dummy_pairs.emplace_back(odd[k], odd[k + 1]);
    halves[odd[k]].push_back(dummy);
    halves[odd[k + 1]].push_back(dummy);
  }

  std::vector<std::size_t> y_item;
  std::vector<std::size_t> y_of(m + dummy_pairs.size(), kUnset);
  for (std::size_t j = 0; j < m; ++j) {
    if (shared[j]) {
      y_of[j] = y_item.size();
      y_item.push_back(j);
    }
  }
  for (std::size_t d = 0; d < dummy_pairs.size(); ++d) {
    y_of[m + d] = y_item.size();
    y_item.push_back(m + d);
  }

  std::vector<std::size_t> slot_agent;
  std::vector<RoundingGraph::Edge> edges;
  for (std::size_t i = 0; i < n; ++i) {
    const AdditiveFunction& u = instance.valuation(i).function(witness[i]);
    auto worth = [&](std::size_t j) { return j < m ? u[j] : Rational(0); };
    auto& items = halves[i];
    std::stable_sort(items.begin(), items.end(), [&](std::size_t a, std::size_t b) {
      const auto c = worth(a) <=> worth(b);
      return c != 0 ? c > 0 : a < b;
    });
    for (std::size_t k = 0; k + 1 < items.size(); k += 2) {
      const std::size_t x = slot_agent.size();
      slot_agent.push_back(i);
      edges.push_back({x, y_of[items[k]]});
      edges.push_back({x, y_of[items[k + 1]]});
    }
  }

  RoundingGraph graph(slot_agent.size(), y_item.size(), std::move(edges));
  return RoundingPlan{std::move(graph), m,        std::move(slot_agent), std::move(y_item), std::move(witness),
                      std::move(halves), std::move(dummy_pairs)};
}

RandomizedAllocation round_half_integral(const FractionalAllocation& f, const Instance& instance) {
  const RoundingPlan plan = plan_rounding(f, instance);
  const std::size_t n = f.agent_count();
  const std::size_t m = f.item_count();

  std::vector<std::size_t> base(m, kUnset);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      if (f.at(i, j) == Rational(1)) base[j] = i;
    }
  }

  const MatchingPair matchings = decompose_two_regular(plan.graph);
  auto realise = [&](const std::vector<std::size_t>& matching) {
    std::vector<std::size_t> owner = base;
    for (std::size_t e : matching) {
      const auto& edge = plan.graph.edges()[e];
      const std::size_t item = plan.y_item[edge.y];
      if (item < m) owner[item] = plan.slot_agent[edge.x];
    }
    return Allocation(n, std::move(owner));
  };

  Allocation first = realise(matchings.first);
  Allocation second = realise(matchings.second);
  if (first == second) return RandomizedAllocation::certain(std::move(first));
  return RandomizedAllocation({Outcome{std::move(first), Rational(1, 2)}, Outcome{std::move(second), Rational(1, 2)}});
}

}  // namespace xosfair
