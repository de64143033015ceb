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

#include <array>
#include <cstddef>
#include <utility>
#include <vector>

#include "xosfair/allocation.hpp"
#include "xosfair/instance.hpp"

namespace xosfair {

/// Bipartite graph in which every vertex has degree exactly two. X vertices are
/// agent slots, Y vertices half-shared items; Y indices follow item order.
class RoundingGraph {
 public:
  struct Edge {
    std::size_t x;
    std::size_t y;
  };

  /// Throws StructuralError unless the graph is 2-regular without parallel edges.
  RoundingGraph(std::size_t x_count, std::size_t y_count, std::vector<Edge> edges);

  std::size_t x_count() const { return at_x_.size(); }
  std::size_t y_count() const { return at_y_.size(); }
  const std::vector<Edge>& edges() const { return edges_; }
  // Edge indices incident to a vertex, ordered by the opposite endpoint.
  const std::array<std::size_t, 2>& edges_at_x(std::size_t x) const { return at_x_[x]; }
  const std::array<std::size_t, 2>& edges_at_y(std::size_t y) const { return at_y_[y]; }

 private:
  std::vector<Edge> edges_;
  std::vector<std::array<std::size_t, 2>> at_x_;
  std::vector<std::array<std::size_t, 2>> at_y_;
};

/// Edge indices of two disjoint perfect matchings covering every edge.
struct MatchingPair {
  std::vector<std::size_t> first;
  std::vector<std::size_t> second;
};

/// Walks each cycle from its lowest-index unvisited X vertex, putting that
/// vertex's edge to the lower Y index into `first` and alternating from there.
MatchingPair decompose_two_regular(const RoundingGraph& graph);

/// The graph built from a complete half-integral allocation, with the
/// bookkeeping needed to read allocations back out of it.
struct RoundingPlan {
  RoundingGraph graph;
  std::size_t item_count;                                 // real items; Y items >= this are dummies
  std::vector<std::size_t> slot_agent;                    // per X vertex
  std::vector<std::size_t> y_item;                        // per Y vertex
  std::vector<std::size_t> witness;                       // per agent, witness index of her row
  std::vector<std::vector<std::size_t>> sorted_halves;    // per agent, half-owned items in slot order
  std::vector<std::pair<std::size_t, std::size_t>> dummy_pairs;
};

/// Pairs agents with an odd number of half-owned items (ascending) through
/// zero-value dummy items, sorts each agent's half-owned items by witness
/// value descending (ties by index) and joins consecutive pairs to a slot.
RoundingPlan plan_rounding(const FractionalAllocation& f, const Instance& instance);

/// Two allocations, each with probability 1/2 (one with probability 1 if they
/// coincide), that realise the marginals of `f` exactly and lose at most half
/// of the largest half-owned witness value for each agent. Dummy items are
/// stripped from the result.
RandomizedAllocation round_half_integral(const FractionalAllocation& f, const Instance& instance);

}  // namespace xosfair
