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

#include "mimo_select/harness.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <limits>
#include <random>
#include <thread>

#include "mimo_select/errors.hpp"

namespace mimo {

std::uint64_t trial_seed(std::uint64_t master_seed, std::uint64_t trial) {
  std::uint64_t z = master_seed + 0x9E3779B97F4A7C15ULL * (trial + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

int default_thread_count() {
  if (const char* env = std::getenv("MIMO_SELECT_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<int>(v);
  }
  return static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
}

void parallel_for(int count, int threads, const std::function<void(int)>& fn) {
  if (threads <= 0) threads = default_thread_count();
  threads = std::min(threads, std::max(count, 1));
  std::vector<std::exception_ptr> errors(static_cast<std::size_t>(std::max(count, 0)));
  std::atomic<int> next{0};
  auto worker = [&] {
    for (int i = next++; i < count; i = next++) {
      try {
        fn(i);
      } catch (...) {
        errors[static_cast<std::size_t>(i)] = std::current_exception();
      }
    }
  };
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(static_cast<std::size_t>(threads));
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
  }
  // Rethrow the lowest-index failure so errors do not depend on scheduling.
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

// ---------------------------------------------------------------------------
// Bound verification

namespace {

struct TrialOutcome {
  std::uint64_t checks = 0;
  std::vector<VerifyFailure> failures;
  double min_slack = std::numeric_limits<double>::infinity();
  std::uint64_t greedy_checks = 0;
  std::uint64_t greedy_misses = 0;
};

BoundReport bound_for(int theorem, const CapacityReport& full, int k_t, int k_r,
                      double achieved) {
  return theorem == 1 ? theorem1_bound(full, k_t, k_r, achieved)
                      : theorem2_bound(full, k_t, k_r, achieved);
}

TrialOutcome run_trial(const VerifyConfig& cfg, int trial) {
  std::mt19937_64 rng(trial_seed(cfg.seed, static_cast<std::uint64_t>(trial)));
  std::uniform_int_distribution<int> dim(cfg.min_n, cfg.max_n);
  const int n_t = dim(rng);
  const int n_r = dim(rng);
  const std::uint64_t channel_seed = rng();
  const MimoChannel ch = gen_gaussian(n_t, n_r, channel_seed);

  TrialOutcome out;
  for (double power : cfg.powers) {
    const CapacityReport full = capacity(ch, power);
    for (int k_t = 1; k_t <= n_t; ++k_t) {
      for (int k_r = 1; k_r <= n_r; ++k_r) {
        auto fail = [&](const char* check, double slack) {
          out.failures.push_back(VerifyFailure{trial, channel_seed, n_t, n_r, k_t,
                                               k_r, power, check, slack});
        };
        const SelectionResult sel =
            cfg.method == Method::kExhaustive
                ? exhaustive_best(ch, power, k_t, k_r, cfg.cap)
                : greedy_prune(ch, power, k_t, k_r, cfg.order);

        if (cfg.method == Method::kGreedy) {
          double before = full.capacity_bits;
          double worst = std::numeric_limits<double>::infinity();
          for (const auto& step : sel.trace) {
            const double m = step.remaining;
            worst = std::min(worst, step.capacity_after - m / (m + 1.0) * before);
            before = step.capacity_after;
          }
          ++out.checks;
          if (!sel.trace.empty()) {
            out.min_slack = std::min(out.min_slack, worst);
            if (!per_step_ratio_check(full.capacity_bits, sel.trace)) {
              fail("per_step", worst);
            }
          }
        }

        const BoundReport b = bound_for(cfg.theorem, full, k_t, k_r, sel.capacity_bits);
        ++out.checks;
        out.min_slack = std::min(out.min_slack, b.slack_bits);
        if (!b.satisfied) fail("bound", b.slack_bits);

        if (cfg.theorem == 2 && cfg.method == Method::kExhaustive) {
          const auto g = greedy_prune(ch, power, k_t, k_r, PruneOrder::kRxFirst);
          ++out.greedy_checks;
          if (!theorem2_bound(full, k_t, k_r, g.capacity_bits).satisfied) {
            ++out.greedy_misses;
          }
        }
      }
    }
  }
  return out;
}

}  // namespace

VerificationRun run_verification(const VerifyConfig& config) {
  if (config.theorem != 1 && config.theorem != 2) {
    throw InvalidInput("theorem must be 1 or 2");
  }
  if (config.trials < 1) throw InvalidInput("trials must be at least 1");
  if (config.min_n < 1 || config.max_n < config.min_n) {
    throw InvalidInput("dimension range must satisfy 1 <= min_n <= max_n");
  }
  if (config.powers.empty()) throw InvalidInput("at least one power is required");
  for (double p : config.powers) {
    if (!(p > 0.0) || !std::isfinite(p)) throw InvalidInput("powers must be positive");
  }

  std::vector<TrialOutcome> outcomes(static_cast<std::size_t>(config.trials));
  parallel_for(config.trials, config.threads, [&](int t) {
    outcomes[static_cast<std::size_t>(t)] = run_trial(config, t);
  });

  VerificationRun run;
  run.config = config;
  run.min_slack_bits = std::numeric_limits<double>::infinity();
  for (auto& o : outcomes) {
    run.checks += o.checks;
    run.min_slack_bits = std::min(run.min_slack_bits, o.min_slack);
    run.greedy_theorem2_checks += o.greedy_checks;
    run.greedy_theorem2_misses += o.greedy_misses;
    for (auto& f : o.failures) run.failures.push_back(std::move(f));
  }
  return run;
}

// ---------------------------------------------------------------------------
// Identities

bool IdentityRun::passed() const {
  return std::all_of(reports.begin(), reports.end(),
                     [](const IdentityTrialReport& r) { return r.report.passed; });
}

HermitianForm identity_fixture(const IdentityConfig& config, int trial) {
  if (config.fixture == IdentityFixture::kIdentity) {
    return HermitianForm::identity(config.n);
  }
  const std::uint64_t s = trial_seed(config.seed, static_cast<std::uint64_t>(trial));
  return gram(gen_gaussian(config.n, config.n, s).matrix(), config.power);
}

IdentityRun run_identities(const IdentityConfig& config) {
  if (config.n < 2) throw InvalidInput("identity checks need n >= 2");
  if (config.trials < 1) throw InvalidInput("trials must be at least 1");
  if (config.k < 0 || config.k > config.n) {
    throw InvalidInput("k must lie in [1, n] (or 0 for all)");
  }
  if (!(config.tol >= 0.0)) throw InvalidInput("tolerance must be nonnegative");

  std::vector<std::vector<IdentityReport>> per_trial(
      static_cast<std::size_t>(config.trials));
  parallel_for(config.trials, config.threads, [&](int t) {
    const HermitianForm a = identity_fixture(config, t);
    const int n = config.n;
    auto& out = per_trial[static_cast<std::size_t>(t)];
    const int k_lo = config.k == 0 ? 1 : config.k;
    const int k_hi = config.k == 0 ? n - 1 : config.k;
    for (int k = k_lo; k <= k_hi; ++k) {
      out.push_back(verify_property1(a, k, config.tol));
      if (k <= n - 1) out.push_back(verify_induction_step(a, k, config.tol));
    }
    const int s_hi = config.k == 0 ? n : config.k;
    for (int k = k_lo; k <= s_hi; ++k) {
      out.push_back(verify_symmetric_coeff(a, k, config.tol));
    }
    out.push_back(verify_avg_det_bound(a, config.tol));
  });

  IdentityRun run;
  run.config = config;
  for (int t = 0; t < config.trials; ++t) {
    for (const auto& r : per_trial[static_cast<std::size_t>(t)]) {
      run.reports.push_back({t, r});
    }
  }
  return run;
}

// ---------------------------------------------------------------------------
// Tight examples

TightnessReport run_tight(TightCase tight_case, int n_t, int n_r, int k_t,
                          int k_r, double power) {
  if (tight_case == TightCase::kParallel && n_t != n_r) {
    throw InvalidInput("the parallel example needs a square channel");
  }
  const MimoChannel ch =
      tight_case == TightCase::kParallel ? gen_parallel(n_t) : gen_all_ones(n_t, n_r);
  const CapacityReport full = capacity(ch, power);
  const SelectionResult best = exhaustive_best(ch, power, k_t, k_r);

  TightnessReport r;
  r.tight_case = tight_case;
  r.n_t = n_t;
  r.n_r = n_r;
  r.k_t = k_t;
  r.k_r = k_r;
  r.power = power;
  r.full_capacity_bits = full.capacity_bits;
  r.best_capacity_bits = best.capacity_bits;
  r.ratio_observed = best.capacity_bits / full.capacity_bits;
  r.ratio_predicted =
      tight_case == TightCase::kParallel
          ? static_cast<double>(std::min(k_t, k_r)) / n_t
          : static_cast<double>(k_t * k_r) / static_cast<double>(n_t * n_r);
  r.abs_error = std::abs(r.ratio_observed - r.ratio_predicted);
  r.theorem1 = theorem1_bound(full, k_t, k_r, best.capacity_bits);
  r.theorem2 = theorem2_bound(full, k_t, k_r, best.capacity_bits);
  return r;
}

std::string to_string(TightCase c) {
  return c == TightCase::kParallel ? "parallel" : "all-ones";
}

std::string to_string(IdentityFixture f) {
  return f == IdentityFixture::kIdentity ? "identity" : "gaussian";
}

}  // namespace mimo
