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

#include <cmath>
#include <cstdlib>
#include <set>

#include "doctest.h"
#include "mimo_select/errors.hpp"
#include "mimo_select/report.hpp"

using namespace mimo;
using nlohmann::json;

TEST_SUITE("harness") {

TEST_CASE("trial streams") {
  CHECK(trial_seed(1, 0) == trial_seed(1, 0));
  std::set<std::uint64_t> seen;
  for (std::uint64_t t = 0; t < 1000; ++t) seen.insert(trial_seed(7, t));
  CHECK(seen.size() == 1000);
  CHECK(trial_seed(7, 3) != trial_seed(8, 3));
}

TEST_CASE("thread count honours the environment") {
  ::setenv("MIMO_SELECT_THREADS", "3", 1);
  CHECK(default_thread_count() == 3);
  ::setenv("MIMO_SELECT_THREADS", "zero", 1);
  CHECK(default_thread_count() >= 1);
  ::unsetenv("MIMO_SELECT_THREADS");
}

TEST_CASE("parallel_for rethrows the lowest failing index") {
  try {
    parallel_for(50, 4, [](int i) {
      if (i == 17 || i == 31) throw InvalidInput("trial " + std::to_string(i));
    });
    FAIL("expected a throw");
  } catch (const InvalidInput& e) {
    CHECK(std::string(e.what()) == "trial 17");
  }
}

TEST_CASE("verification is independent of thread count") {
  VerifyConfig cfg;
  cfg.theorem = 2;
  cfg.trials = 40;
  cfg.max_n = 4;
  cfg.seed = 99;
  cfg.threads = 1;
  const json one = run_verification(cfg);
  cfg.threads = 5;
  const json five = run_verification(cfg);
  CHECK(one.dump() == five.dump());
  CHECK(one.at("passed").get<bool>());
  CHECK(one.at("greedy_theorem2").at("checks").get<int>() > 0);
}

TEST_CASE("verification runs pass for both theorems and methods") {
  for (int theorem : {1, 2}) {
    for (auto method : {Method::kExhaustive, Method::kGreedy}) {
      VerifyConfig cfg;
      cfg.theorem = theorem;
      cfg.trials = 30;
      cfg.max_n = 5;
      cfg.seed = 2024;
      cfg.method = method;
      const auto run = run_verification(cfg);
      if (theorem == 1 || method == Method::kExhaustive) {
        CHECK(run.passed());
        CHECK(run.min_slack_bits >= -1e-9);
      }
      CHECK(run.checks > 0);
    }
  }
}

TEST_CASE("verification input validation") {
  VerifyConfig cfg;
  cfg.trials = 0;
  CHECK_THROWS_AS(run_verification(cfg), InvalidInput);
  cfg.trials = 1;
  cfg.theorem = 3;
  CHECK_THROWS_AS(run_verification(cfg), InvalidInput);
  cfg.theorem = 1;
  cfg.powers = {1.0, -2.0};
  CHECK_THROWS_AS(run_verification(cfg), InvalidInput);
  cfg.powers = {1.0};
  cfg.min_n = 3;
  cfg.max_n = 2;
  CHECK_THROWS_AS(run_verification(cfg), InvalidInput);
}

TEST_CASE("identity runs") {
  IdentityConfig cfg;
  cfg.n = 5;
  cfg.trials = 6;
  cfg.seed = 3;
  const auto run = run_identities(cfg);
  CHECK(run.passed());
  // Per trial: 4 property1 + 4 induction + 5 symmetric + 1 avg-det.
  CHECK(run.reports.size() == 6u * 14u);

  IdentityConfig fixed;
  fixed.n = 2;
  fixed.k = 1;
  fixed.trials = 1;
  fixed.tol = 0.0;
  fixed.fixture = IdentityFixture::kIdentity;
  const auto id = run_identities(fixed);
  CHECK(id.passed());
  for (const auto& r : id.reports) CHECK(r.report.max_abs_error == 0.0);

  cfg.tol = 0.0;
  cfg.n = 7;
  CHECK_FALSE(run_identities(cfg).passed());

  cfg.n = 1;
  CHECK_THROWS_AS(run_identities(cfg), InvalidInput);
}

TEST_CASE("tight examples") {
  const auto a = run_tight(TightCase::kAllOnesLowSnr, 3, 3, 1, 1, 1e-6);
  CHECK(a.ratio_predicted == doctest::Approx(1.0 / 9.0));
  CHECK(a.abs_error <= 1e-4);
  CHECK(a.abs_error == std::abs(a.ratio_observed - a.ratio_predicted));

  const auto p = run_tight(TightCase::kParallel, 4, 4, 2, 2, 100.0);
  CHECK(std::abs(p.ratio_observed - 0.5) <= 1e-9);
  CHECK(std::abs(p.theorem2.slack_bits - std::log2(36.0)) <= 1e-9);

  const auto all = run_tight(TightCase::kParallel, 3, 3, 3, 3, 5.0);
  CHECK(all.ratio_observed == doctest::Approx(1.0).epsilon(1e-14));
  CHECK_THROWS_AS(run_tight(TightCase::kParallel, 3, 4, 1, 1, 1.0), InvalidInput);
}

TEST_CASE("reports round-trip through JSON") {
  VerifyConfig cfg;
  cfg.trials = 5;
  cfg.max_n = 3;
  cfg.seed = 5;
  cfg.theorem = 2;
  const auto run = run_verification(cfg);
  const json j = run;
  CHECK(json(j.get<VerificationRun>()) == j);

  IdentityConfig icfg;
  icfg.n = 3;
  icfg.trials = 2;
  const json ij = run_identities(icfg);
  CHECK(json(ij.get<IdentityRun>()) == ij);

  const json tj = run_tight(TightCase::kParallel, 4, 4, 2, 3, 100.0);
  CHECK(json(tj.get<TightnessReport>()) == tj);

  const auto ch = gen_gaussian(4, 3, 1);
  const auto g = greedy_prune(ch, 1.0, 2, 2);
  const json gj = g;
  CHECK(json(selection_result_from_json(gj)) == gj);
  CHECK(gj.at("trace").size() == 3);
  CHECK(gj.at("trace")[0].at("side") == "rx");

  const json cj = capacity(ch, 2.0);
  CHECK(json(cj.get<CapacityReport>()) == cj);

  const json doc = document("capacity", cj);
  CHECK(doc.at("schema_version") == kSchemaVersion);
  CHECK(doc.at("kind") == "capacity");
}

}  // TEST_SUITE
