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

#include <omp.h>

#include <atomic>
#include <limits>

#include "labeling_internal.hpp"
#include "xosfair/labeling.hpp"

namespace xosfair::labeling {
namespace {

// Values in "half units" of 1/(2D), D the common denominator of every entry
// and cap, so whole and half shares both stay integral.
struct ScaledProblem {
  std::size_t parties = 0;
  std::size_t items = 0;
  std::vector<std::size_t> fn_count;
  std::vector<std::size_t> fn_base;
  std::vector<std::int64_t> table;  // row (fn_base[p] + k), column j: entry * D
  std::vector<std::int64_t> caps2;  // min(2 * D * cap, largest attainable value)
  std::int64_t upper_bound = 0;     // no labeling scores above this
  mpz_class denom2;
};

constexpr long kHeadroom = 1L << 60;

bool fits(const mpz_class& x) { return mpz_fits_slong_p(x.get_mpz_t()) && abs(x) < kHeadroom; }

std::optional<ScaledProblem> scale(const Problem& problem) {
  mpz_class d = 1;
  for (const auto& v : problem.valuations) {
    for (const auto& f : v.functions()) {
      for (const auto& x : f.values()) mpz_lcm(d.get_mpz_t(), d.get_mpz_t(), x.get().get_den_mpz_t());
    }
  }
  for (const auto& c : problem.caps) mpz_lcm(d.get_mpz_t(), d.get_mpz_t(), c.get().get_den_mpz_t());

  ScaledProblem s;
  s.parties = problem.party_count();
  s.items = problem.item_count();
  s.denom2 = 2 * d;
  mpz_class largest_total = 0;
  for (std::size_t p = 0; p < s.parties; ++p) {
    const XosValuation& v = problem.valuation_of(p);
    s.fn_base.push_back(s.fn_count.empty() ? 0 : s.fn_base.back() + s.fn_count.back());
    s.fn_count.push_back(v.function_count());
    for (const auto& f : v.functions()) {
      mpz_class total = 0;
      for (const auto& x : f.values()) {
        mpz_class scaled = x.get().get_num() * (d / x.get().get_den());
        total += 2 * scaled;
        if (!fits(scaled)) return std::nullopt;
        s.table.push_back(scaled.get_si());
      }
      if (!fits(total)) return std::nullopt;
      if (total > largest_total) largest_total = total;
    }
  }
  if (!fits(largest_total * static_cast<long>(s.parties))) return std::nullopt;

  if (problem.objective == Objective::kCappedWelfare) {
    mpz_class bound = 0;
    for (const auto& c : problem.caps) {
      mpz_class c2 = c.get().get_num() * (s.denom2 / c.get().get_den());
      if (c2 > largest_total) c2 = largest_total;
      s.caps2.push_back(c2.get_si());
      bound += c2;
    }
    s.upper_bound = bound.get_si();
  } else {
    s.upper_bound = largest_total.get_si();
  }
  return s;
}

class Searcher {
 public:
  Searcher(const ScaledProblem& s, const std::vector<Choice>& options, Objective objective)
      : s_(s),
        options_(options),
        objective_(objective),
        sums_(s.fn_count.empty() ? 0 : s.fn_base.back() + s.fn_count.back(), 0),
        labels_(s.items, 0) {}

  void set_prefix(std::size_t depth, std::size_t label) {
    labels_[depth] = label;
    apply(depth, options_[label], 1);
  }

  // Lexicographic DFS over items [depth, items); keeps the first strict maximum.
  void search(std::size_t depth) {
    if (done_) return;
    if (depth == s_.items) {
      const std::int64_t score = leaf();
      if (!found_ || score > best_) {
        found_ = true;
        best_ = score;
        best_labels_ = labels_;
        if (best_ >= s_.upper_bound) done_ = true;
      }
      return;
    }
    for (std::size_t c = 0; c < options_.size() && !done_; ++c) {
      labels_[depth] = c;
      apply(depth, options_[c], 1);
      search(depth + 1);
      apply(depth, options_[c], -1);
    }
  }

  bool found() const { return found_; }
  bool hit_bound() const { return done_; }
  std::int64_t best() const { return best_; }
  const std::vector<std::size_t>& best_labels() const { return best_labels_; }

 private:
  void add(std::size_t party, std::size_t item, std::int64_t weight) {
    const std::size_t base = s_.fn_base[party];
    for (std::size_t k = 0; k < s_.fn_count[party]; ++k) {
      sums_[base + k] += weight * s_.table[(base + k) * s_.items + item];
    }
  }

  void apply(std::size_t item, const Choice& c, std::int64_t sign) {
    if (c.split()) {
      add(c.first, item, sign);
      add(c.second, item, sign);
    } else {
      add(c.first, item, 2 * sign);
    }
  }

  std::int64_t party_value(std::size_t p) const {
    const std::size_t base = s_.fn_base[p];
    std::int64_t v = sums_[base];
    for (std::size_t k = 1; k < s_.fn_count[p]; ++k) v = std::max(v, sums_[base + k]);
    return v;
  }

  std::int64_t leaf() const {
    if (objective_ == Objective::kMaxMin) {
      std::int64_t worst = std::numeric_limits<std::int64_t>::max();
      for (std::size_t p = 0; p < s_.parties; ++p) worst = std::min(worst, party_value(p));
      return worst;
    }
    std::int64_t total = 0;
    for (std::size_t p = 0; p < s_.parties; ++p) total += std::min(s_.caps2[p], party_value(p));
    return total;
  }

  const ScaledProblem& s_;
  const std::vector<Choice>& options_;
  Objective objective_;
  std::vector<std::int64_t> sums_;
  std::vector<std::size_t> labels_;
  bool found_ = false;
  bool done_ = false;
  std::int64_t best_ = 0;
  std::vector<std::size_t> best_labels_;
};

struct TaskResult {
  bool found = false;
  std::int64_t best = 0;
  std::vector<std::size_t> labels;
};

}  // namespace

Result solve_parallel(const Problem& problem, const EnumerationLimits& limits) {
  detail::validate(problem, limits);
  const auto scaled = scale(problem);
  if (!scaled) return solve_reference(problem, limits);
  const ScaledProblem& s = *scaled;
  const auto options = choices(s.parties, problem.half_integral);

  // Split on the first `depth` items so there are enough tasks to balance.
  std::size_t depth = 0;
  std::uint64_t tasks = 1;
  while (depth < s.items && tasks < 256) {
    tasks *= options.size();
    ++depth;
  }

  std::vector<TaskResult> results(tasks);
  // Tasks above the first one that reaches the global bound cannot win.
  std::atomic<std::uint64_t> first_at_bound{tasks};

#pragma omp parallel for schedule(dynamic)
  for (std::int64_t t = 0; t < static_cast<std::int64_t>(tasks); ++t) {
    const auto task = static_cast<std::uint64_t>(t);
    if (task > first_at_bound.load(std::memory_order_relaxed)) continue;
    Searcher searcher(s, options, problem.objective);
    std::uint64_t code = task;
    for (std::size_t pos = depth; pos > 0; --pos) {
      searcher.set_prefix(pos - 1, static_cast<std::size_t>(code % options.size()));
      code /= options.size();
    }
    searcher.search(depth);
    results[task] = TaskResult{searcher.found(), searcher.best(), searcher.best_labels()};
    if (searcher.hit_bound()) {
      std::uint64_t seen = first_at_bound.load(std::memory_order_relaxed);
      while (task < seen && !first_at_bound.compare_exchange_weak(seen, task, std::memory_order_relaxed)) {
      }
    }
  }

  const TaskResult* best = nullptr;
  for (const auto& r : results) {
    if (r.found && (best == nullptr || r.best > best->best)) best = &r;
  }
  return Result{Rational(mpq_class(mpz_class(static_cast<long>(best->best)), s.denom2)), best->labels};
}

}  // namespace xosfair::labeling
