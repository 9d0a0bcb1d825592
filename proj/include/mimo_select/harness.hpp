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
#include <functional>
#include <string>
#include <vector>

#include "mimo_select/identities.hpp"
#include "mimo_select/selection.hpp"

namespace mimo {

// Independent per-trial stream: a splitmix64 mix of (master_seed, trial).
std::uint64_t trial_seed(std::uint64_t master_seed, std::uint64_t trial);

// Worker threads for trial-parallel runs: MIMO_SELECT_THREADS when set to a
// positive integer, otherwise the hardware concurrency.
int default_thread_count();

// Runs fn(i) for i in [0, count) on up to `threads` workers.
void parallel_for(int count, int threads, const std::function<void(int)>& fn);

struct VerifyConfig {
  int theorem = 1;
  int trials = 1000;
  int min_n = 1;
  int max_n = 6;
  std::vector<double> powers{0.01, 1.0, 100.0};
  std::uint64_t seed = 0;
  Method method = Method::kExhaustive;
  PruneOrder order = PruneOrder::kRxFirst;
  std::uint64_t cap = kDefaultEnumerationCap;
  int threads = 0;  // 0 -> default_thread_count()
};

struct VerifyFailure {
  int trial = 0;
  std::uint64_t channel_seed = 0;
  int n_t = 0;
  int n_r = 0;
  int k_t = 0;
  int k_r = 0;
  double power = 0.0;
  std::string check;  // "bound" or "per_step"
  double slack_bits = 0.0;
};

struct VerificationRun {
  VerifyConfig config;
  std::uint64_t checks = 0;
  std::vector<VerifyFailure> failures;
  double min_slack_bits = 0.0;
  // Theorem 2 with exhaustive search also records, without asserting, how
  // often the rx-first greedy selection meets the same bound.
  std::uint64_t greedy_theorem2_checks = 0;
  std::uint64_t greedy_theorem2_misses = 0;

  bool passed() const { return failures.empty(); }
};

// Draws per-trial dimensions in [min_n, max_n] and a Gaussian channel, then
// sweeps every power and every (k_t, k_r) against the chosen theorem bound.
VerificationRun run_verification(const VerifyConfig& config);

enum class IdentityFixture { kGaussian, kIdentity };

struct IdentityConfig {
  int n = 6;
  int k = 0;  // 0 -> all k
  int trials = 200;
  std::uint64_t seed = 0;
  double tol = 1e-8;
  double power = 1.0;
  IdentityFixture fixture = IdentityFixture::kGaussian;
  int threads = 0;
};

struct IdentityTrialReport {
  int trial = 0;
  IdentityReport report;
};

struct IdentityRun {
  IdentityConfig config;
  std::vector<IdentityTrialReport> reports;
  bool passed() const;
};

// Test forms: I + P H H^H for H = gen_gaussian(n, n, trial stream), or the
// identity matrix.
HermitianForm identity_fixture(const IdentityConfig& config, int trial);

IdentityRun run_identities(const IdentityConfig& config);

enum class TightCase { kAllOnesLowSnr, kParallel };

struct TightnessReport {
  TightCase tight_case = TightCase::kAllOnesLowSnr;
  int n_t = 0;
  int n_r = 0;
  int k_t = 0;
  int k_r = 0;
  double power = 0.0;
  double full_capacity_bits = 0.0;
  double best_capacity_bits = 0.0;
  double ratio_observed = 0.0;
  double ratio_predicted = 0.0;
  double abs_error = 0.0;
  BoundReport theorem1;
  BoundReport theorem2;
};

// ratio_observed is best/full capacity with the best subchannel found by
// exhaustive search; ratio_predicted is k_t k_r/(n_t n_r) for the all-ones
// channel and min(k_t, k_r)/n for the parallel one (which must be square).
TightnessReport run_tight(TightCase tight_case, int n_t, int n_r, int k_t,
                          int k_r, double power);

std::string to_string(TightCase c);
std::string to_string(IdentityFixture f);

}  // namespace mimo
