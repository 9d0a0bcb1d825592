// Copyright 2026 The Authors.
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

#include "mimo_select/selection.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "mimo_select/errors.hpp"

namespace mimo {

namespace {

void check_sizes(const MimoChannel& ch, int k_t, int k_r) {
  if (k_t < 1 || k_t > ch.n_t()) {
    throw InvalidInput("k_t must lie in [1, " + std::to_string(ch.n_t()) +
                       "], got " + std::to_string(k_t));
  }
  if (k_r < 1 || k_r > ch.n_r()) {
    throw InvalidInput("k_r must lie in [1, " + std::to_string(ch.n_r()) +
                       "], got " + std::to_string(k_r));
  }
}

bool beats(double candidate, double best) {
  return candidate > best + kTieRelTol * std::max(1.0, std::abs(best));
}

}  // namespace

BigInt subchannel_count(int n_t, int n_r, int k_t, int k_r) {
  return binomial(n_t, k_t) * binomial(n_r, k_r);
}

SelectionResult exhaustive_best(const MimoChannel& ch, double power, int k_t,
                                int k_r, std::uint64_t cap) {
  check_sizes(ch, k_t, k_r);
  const BigInt count = subchannel_count(ch.n_t(), ch.n_r(), k_t, k_r);
  if (count > cap) {
    throw BudgetExceeded("exhaustive search needs " + count.str() +
                         " subchannel evaluations, above the cap of " +
                         std::to_string(cap) + "; use the greedy method or raise --cap");
  }
  const auto rx_sets = all_subsets(ch.n_r(), k_r);

  SelectionResult best{Selection{SubsetIndex::full(ch.n_t()), SubsetIndex::full(ch.n_r())},
                       -1.0, Method::kExhaustive, {}};
  for_each_subset(ch.n_t(), k_t, [&](std::span<const int> tx_members) {
    const SubsetIndex tx(ch.n_t(), {tx_members.begin(), tx_members.end()});
    for (const auto& rx : rx_sets) {
      const double c = capacity_bits(subchannel(ch, tx, rx), power);
      if (best.capacity_bits < 0.0 || beats(c, best.capacity_bits)) {
        best.selection = Selection{tx, rx};
        best.capacity_bits = c;
      }
    }
    return true;
  });
  return best;
}

SelectionResult greedy_prune(const MimoChannel& ch, double power, int k_t,
                             int k_r, PruneOrder order) {
  check_sizes(ch, k_t, k_r);
  std::vector<int> tx(static_cast<std::size_t>(ch.n_t()));
  std::vector<int> rx(static_cast<std::size_t>(ch.n_r()));
  std::iota(tx.begin(), tx.end(), 1);
  std::iota(rx.begin(), rx.end(), 1);

  double current = capacity_bits(ch, power);
  std::vector<RemovalStep> trace;

  auto prune_side = [&](Side side, int target) {
    std::vector<int>& cur = side == Side::kTx ? tx : rx;
    while (static_cast<int>(cur.size()) > target) {
      std::size_t best_pos = 0;
      double best_cap = -1.0;
      // Positions are visited in increasing original index, so keeping the
      // first capacity-maximal candidate removes the lowest index on ties.
      for (std::size_t pos = 0; pos < cur.size(); ++pos) {
        std::vector<int> kept;
        kept.reserve(cur.size() - 1);
        for (std::size_t j = 0; j < cur.size(); ++j) {
          if (j != pos) kept.push_back(cur[j]);
        }
        const SubsetIndex tx_set(ch.n_t(), side == Side::kTx ? kept : tx);
        const SubsetIndex rx_set(ch.n_r(), side == Side::kRx ? kept : rx);
        const double c = capacity_bits(subchannel(ch, tx_set, rx_set), power);
        if (best_cap < 0.0 || beats(c, best_cap)) {
          best_cap = c;
          best_pos = pos;
        }
      }
      const int removed = cur[best_pos];
      cur.erase(cur.begin() + static_cast<std::ptrdiff_t>(best_pos));
      trace.push_back(RemovalStep{side, removed, static_cast<int>(cur.size()), best_cap});
      current = best_cap;
    }
  };

  if (order == PruneOrder::kRxFirst) {
    prune_side(Side::kRx, k_r);
    prune_side(Side::kTx, k_t);
  } else {
    prune_side(Side::kTx, k_t);
    prune_side(Side::kRx, k_r);
  }
  return SelectionResult{Selection{SubsetIndex(ch.n_t(), tx), SubsetIndex(ch.n_r(), rx)},
                         current, Method::kGreedy, std::move(trace)};
}

bool per_step_ratio_check(double initial_capacity,
                          std::span<const RemovalStep> trace) {
  double before = initial_capacity;
  for (const auto& step : trace) {
    const double m = step.remaining;
    if (step.capacity_after < m / (m + 1.0) * before - kBoundTol) return false;
    before = step.capacity_after;
  }
  return true;
}

double gap_constant_bits(int n_t, int n_r, int k_t, int k_r) {
  return log2_big(subchannel_count(n_t, n_r, k_t, k_r));
}

namespace {

void check_bound_sizes(const CapacityReport& full, int k_t, int k_r) {
  if (k_t < 1 || k_t > full.n_t || k_r < 1 || k_r > full.n_r) {
    throw InvalidInput("selection sizes inconsistent with the full channel");
  }
}

void finish(BoundReport& r, double achieved_bits) {
  r.achieved_bits = achieved_bits;
  r.slack_bits = achieved_bits - r.bound_bits;
  r.satisfied = r.slack_bits >= -kBoundTol;
}

}  // namespace

BoundReport theorem1_bound(const CapacityReport& full, int k_t, int k_r,
                           double achieved_bits) {
  check_bound_sizes(full, k_t, k_r);
  BoundReport r;
  r.theorem = 1;
  r.full_capacity_bits = full.capacity_bits;
  r.fraction_num = k_t * k_r;
  r.fraction_den = full.n_t * full.n_r;
  r.fraction = static_cast<double>(r.fraction_num) / r.fraction_den;
  r.gap_bits = 0.0;
  r.bound_bits = r.fraction * full.capacity_bits;
  finish(r, achieved_bits);
  return r;
}

BoundReport theorem2_bound(const CapacityReport& full, int k_t, int k_r,
                           double achieved_bits) {
  check_bound_sizes(full, k_t, k_r);
  BoundReport r;
  r.theorem = 2;
  r.full_capacity_bits = full.capacity_bits;
  r.fraction_num = std::min(k_t, k_r);
  r.fraction_den = std::min(full.n_t, full.n_r);
  r.fraction = static_cast<double>(r.fraction_num) / r.fraction_den;
  r.gap_bits = gap_constant_bits(full.n_t, full.n_r, k_t, k_r);
  r.bound_bits = r.fraction * full.capacity_bits - r.gap_bits;
  finish(r, achieved_bits);
  return r;
}

std::string to_string(Method m) {
  return m == Method::kExhaustive ? "exhaustive" : "greedy";
}

std::string to_string(Side s) { return s == Side::kTx ? "tx" : "rx"; }

std::string to_string(PruneOrder o) {
  return o == PruneOrder::kRxFirst ? "rx-first" : "tx-first";
}

}  // namespace mimo
