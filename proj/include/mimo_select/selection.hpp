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

#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "mimo_select/channel.hpp"

namespace mimo {

inline constexpr std::uint64_t kDefaultEnumerationCap = 1'000'000;

// Slack allowed on every bound and per-step check.
inline constexpr double kBoundTol = 1e-9;

// Candidates within this relative distance of the best capacity count as
// tied; ties resolve to the lexicographically first (exhaustive) or lowest
// index (greedy) candidate.
inline constexpr double kTieRelTol = 1e-12;

struct Selection {
  SubsetIndex tx;
  SubsetIndex rx;
};

enum class Method { kExhaustive, kGreedy };
enum class Side { kTx, kRx };
enum class PruneOrder { kRxFirst, kTxFirst };

struct RemovalStep {
  Side side;
  int removed;             // original 1-based antenna index
  int remaining;           // antennas left on `side` after the removal
  double capacity_after;   // bits
};

struct SelectionResult {
  Selection selection;
  double capacity_bits = 0.0;
  Method method = Method::kExhaustive;
  std::vector<RemovalStep> trace;  // empty for exhaustive search
};

// Number of k_t x k_r subchannels, exact.
BigInt subchannel_count(int n_t, int n_r, int k_t, int k_r);

// Best k_t x k_r subchannel by full enumeration, tx subsets outer and rx
// subsets inner, both lexicographic. Throws BudgetExceeded when the number of
// candidates exceeds `cap`.
SelectionResult exhaustive_best(const MimoChannel& ch, double power, int k_t,
                                int k_r,
                                std::uint64_t cap = kDefaultEnumerationCap);

// Removes one antenna at a time, each time the one whose removal leaves the
// largest capacity. kRxFirst prunes receivers down to k_r before touching the
// transmitters.
SelectionResult greedy_prune(const MimoChannel& ch, double power, int k_t,
                             int k_r, PruneOrder order = PruneOrder::kRxFirst);

// True iff every step leaving m antennas on its side keeps at least
// m/(m+1) of the preceding capacity (less kBoundTol).
bool per_step_ratio_check(double initial_capacity,
                          std::span<const RemovalStep> trace);

struct BoundReport {
  int theorem = 1;
  double full_capacity_bits = 0.0;
  int fraction_num = 1;
  int fraction_den = 1;
  double fraction = 1.0;
  double gap_bits = 0.0;
  double bound_bits = 0.0;
  double achieved_bits = 0.0;
  double slack_bits = 0.0;
  bool satisfied = true;
};

// (k_t k_r)/(n_t n_r) * C.
BoundReport theorem1_bound(const CapacityReport& full, int k_t, int k_r,
                           double achieved_bits);
// min(k_t,k_r)/min(n_t,n_r) * C - log2(C(n_t,k_t) C(n_r,k_r)).
BoundReport theorem2_bound(const CapacityReport& full, int k_t, int k_r,
                           double achieved_bits);

// log2(C(n_t,k_t) * C(n_r,k_r)), from exact binomials.
double gap_constant_bits(int n_t, int n_r, int k_t, int k_r);

std::string to_string(Method m);
std::string to_string(Side s);
std::string to_string(PruneOrder o);

}  // namespace mimo
