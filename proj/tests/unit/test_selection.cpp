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

#include <bit>
#include <cmath>
#include <random>

#include "doctest.h"
#include "mimo_select/errors.hpp"
#include "mimo_select/selection.hpp"
#include "oracles.hpp"

using namespace mimo;

namespace {

MimoChannel diag21() {
  return MimoChannel(ComplexMatrix(2, 2, {2.0, 0.0, 0.0, 1.0}));
}

// Max capacity over all k_t x k_r subchannels by bitmask enumeration and the
// LU determinant.
double brute_force_best(const MimoChannel& ch, double p, int k_t, int k_r) {
  double best = -1.0;
  for (unsigned tm = 0; tm < (1u << ch.n_t()); ++tm) {
    if (std::popcount(tm) != k_t) continue;
    for (unsigned rm = 0; rm < (1u << ch.n_r()); ++rm) {
      if (std::popcount(rm) != k_r) continue;
      std::vector<int> tx;
      std::vector<int> rx;
      for (int i = 0; i < ch.n_t(); ++i)
        if (tm >> i & 1u) tx.push_back(i + 1);
      for (int i = 0; i < ch.n_r(); ++i)
        if (rm >> i & 1u) rx.push_back(i + 1);
      oracle::Dense h;
      for (int r : rx) {
        h.emplace_back();
        for (int c : tx) h.back().push_back(ch.matrix()(r - 1, c - 1));
      }
      best = std::max(best, std::log2(oracle::det(oracle::gram(h, p)).real()));
    }
  }
  return best;
}

}  // namespace

TEST_SUITE("selection") {

TEST_CASE("exhaustive search examples") {
  const auto r = exhaustive_best(diag21(), 1.0, 1, 1);
  CHECK(r.selection.tx.members() == std::vector<int>{1});
  CHECK(r.selection.rx.members() == std::vector<int>{1});
  CHECK(r.capacity_bits == doctest::Approx(std::log2(5.0)).epsilon(1e-14));
  CHECK(r.method == Method::kExhaustive);
  CHECK(r.trace.empty());
  CHECK(std::abs(r.capacity_bits - brute_force_best(diag21(), 1.0, 1, 1)) <= 1e-12);

  const auto g = gen_gaussian(3, 4, 12);
  const auto full = exhaustive_best(g, 2.0, 3, 4);
  CHECK(full.selection.tx == SubsetIndex::full(3));
  CHECK(full.selection.rx == SubsetIndex::full(4));
  CHECK(full.capacity_bits == capacity_bits(g, 2.0));

  const auto par = exhaustive_best(gen_parallel(4), 100.0, 2, 2);
  CHECK(std::abs(par.capacity_bits - 2.0 * std::log2(101.0)) <= 1e-9);
  CHECK(par.selection.tx.members() == std::vector<int>{1, 2});
  CHECK(par.selection.rx.members() == std::vector<int>{1, 2});
}

TEST_CASE("exhaustive search budget and validation") {
  const auto g = gen_gaussian(6, 6, 1);
  // C(6,3)^2 = 400 candidates.
  CHECK(subchannel_count(6, 6, 3, 3) == 400);
  CHECK_NOTHROW(exhaustive_best(g, 1.0, 3, 3, 400));
  CHECK_THROWS_AS(exhaustive_best(g, 1.0, 3, 3, 399), BudgetExceeded);
  CHECK_THROWS_AS(exhaustive_best(g, 1.0, 0, 1), InvalidInput);
  CHECK_THROWS_AS(exhaustive_best(g, 1.0, 1, 7), InvalidInput);
  CHECK_THROWS_AS(greedy_prune(g, 1.0, 7, 1), InvalidInput);
  CHECK_THROWS_AS(greedy_prune(g, 0.0, 1, 1), InvalidInput);
}

TEST_CASE("greedy pruning examples") {
  const auto r = greedy_prune(diag21(), 1.0, 1, 1, PruneOrder::kRxFirst);
  CHECK(r.capacity_bits == doctest::Approx(std::log2(5.0)).epsilon(1e-14));
  REQUIRE(r.trace.size() == 2);
  CHECK(r.trace[0].side == Side::kRx);
  CHECK(r.trace[0].removed == 2);
  CHECK(r.trace[0].remaining == 1);
  CHECK(r.trace[0].capacity_after == doctest::Approx(std::log2(5.0)).epsilon(1e-14));
  CHECK(r.trace[1].side == Side::kTx);
  CHECK(r.trace[1].removed == 2);
  CHECK(r.trace[1].capacity_after == doctest::Approx(std::log2(5.0)).epsilon(1e-14));

  // Every removal ties on the all-ones channel; the lowest index goes.
  const auto ones = greedy_prune(gen_all_ones(3, 3), 1.0, 2, 2);
  CHECK(std::abs(ones.capacity_bits - std::log2(5.0)) <= 1e-12);
  REQUIRE(ones.trace.size() == 2);
  CHECK(ones.trace[0].side == Side::kRx);
  CHECK(ones.trace[0].removed == 1);
  CHECK(ones.trace[1].side == Side::kTx);
  CHECK(ones.trace[1].removed == 1);
  CHECK(ones.selection.tx.members() == std::vector<int>{2, 3});

  const auto g = gen_gaussian(3, 2, 3);
  const auto none = greedy_prune(g, 1.0, 3, 2);
  CHECK(none.trace.empty());
  CHECK(none.capacity_bits == capacity_bits(g, 1.0));
}

TEST_CASE("bound reports") {
  const auto full = capacity(gen_all_ones(2, 2), 1.0);
  const auto b = theorem1_bound(full, 1, 1, 1.0);
  CHECK(b.theorem == 1);
  CHECK(b.fraction_num == 1);
  CHECK(b.fraction_den == 4);
  CHECK(b.gap_bits == 0.0);
  CHECK(b.bound_bits == doctest::Approx(0.5804820237218405).epsilon(1e-14));
  CHECK(b.slack_bits == doctest::Approx(0.41951797627815945).epsilon(1e-13));
  CHECK(b.satisfied);

  const auto whole = theorem1_bound(full, 2, 2, full.capacity_bits);
  CHECK(whole.bound_bits == full.capacity_bits);
  CHECK(whole.slack_bits == 0.0);
  CHECK(whole.satisfied);

  const auto low = capacity(gen_all_ones(3, 3), 1e-6);
  const auto best = exhaustive_best(gen_all_ones(3, 3), 1e-6, 1, 1);
  const auto tight = theorem1_bound(low, 1, 1, best.capacity_bits);
  CHECK(tight.satisfied);
  CHECK(tight.slack_bits <= 1e-4 * low.capacity_bits);

  CHECK(gap_constant_bits(4, 4, 2, 2) == doctest::Approx(5.169925001442312).epsilon(1e-15));
  CHECK(gap_constant_bits(4, 5, 4, 5) == 0.0);

  const auto par_full = capacity(gen_parallel(4), 100.0);
  const auto par = exhaustive_best(gen_parallel(4), 100.0, 2, 2);
  const auto b2 = theorem2_bound(par_full, 2, 2, par.capacity_bits);
  CHECK(b2.theorem == 2);
  CHECK(std::abs(b2.bound_bits - (0.5 * 4.0 * std::log2(101.0) - std::log2(36.0))) <= 1e-9);
  CHECK(std::abs(b2.slack_bits - std::log2(36.0)) <= 1e-9);

  const auto same = theorem2_bound(par_full, 4, 4, par_full.capacity_bits);
  CHECK(same.gap_bits == 0.0);
  CHECK(same.bound_bits == par_full.capacity_bits);

  const auto violated = theorem1_bound(full, 1, 1, 0.5);
  CHECK_FALSE(violated.satisfied);
  CHECK_THROWS_AS(theorem1_bound(full, 3, 1, 1.0), InvalidInput);
}

TEST_CASE("per-step ratio check") {
  CHECK(per_step_ratio_check(3.0, {}));
  const std::vector<RemovalStep> bad{{Side::kRx, 5, 4, 5.0}};
  CHECK_FALSE(per_step_ratio_check(10.0, bad));
  const std::vector<RemovalStep> ok{{Side::kRx, 5, 4, 8.0}, {Side::kTx, 1, 1, 4.0}};
  CHECK(per_step_ratio_check(10.0, ok));
}

TEST_CASE("exhaustive search matches brute force") {
  std::mt19937_64 rng(5150);
  for (int trial = 0; trial < 60; ++trial) {
    const auto ch = oracle::random_channel(rng, 4);
    const double p = trial % 2 ? 0.1 : 10.0;
    for (int k_t = 1; k_t <= ch.n_t(); ++k_t)
      for (int k_r = 1; k_r <= ch.n_r(); ++k_r)
        REQUIRE(std::abs(exhaustive_best(ch, p, k_t, k_r).capacity_bits -
                         brute_force_best(ch, p, k_t, k_r)) <= 1e-9);
  }
}

TEST_CASE("selection invariants on random channels") {
  std::mt19937_64 rng(8080);
  const double powers[] = {0.01, 1.0, 100.0};
  for (int trial = 0; trial < 200; ++trial) {
    const auto ch = oracle::random_channel(rng, 6);
    const double p = powers[trial % 3];
    const auto full = capacity(ch, p);
    std::uniform_int_distribution<int> kt_dist(1, ch.n_t());
    std::uniform_int_distribution<int> kr_dist(1, ch.n_r());
    const int k_t = kt_dist(rng);
    const int k_r = kr_dist(rng);

    const auto best = exhaustive_best(ch, p, k_t, k_r);
    REQUIRE(std::abs(best.capacity_bits -
                     capacity_bits(subchannel(ch, best.selection.tx, best.selection.rx), p)) <=
            1e-9);
    for (auto order : {PruneOrder::kRxFirst, PruneOrder::kTxFirst}) {
      const auto g = greedy_prune(ch, p, k_t, k_r, order);
      REQUIRE(g.trace.size() ==
              static_cast<std::size_t>((ch.n_t() - k_t) + (ch.n_r() - k_r)));
      REQUIRE(g.selection.tx.size() == k_t);
      REQUIRE(g.selection.rx.size() == k_r);
      REQUIRE(best.capacity_bits >= g.capacity_bits - 1e-9);
      REQUIRE(per_step_ratio_check(full.capacity_bits, g.trace));
      REQUIRE(theorem1_bound(full, k_t, k_r, g.capacity_bits).satisfied);
      REQUIRE(std::abs(g.capacity_bits -
                       capacity_bits(subchannel(ch, g.selection.tx, g.selection.rx), p)) <=
              1e-9);
    }
    REQUIRE(theorem1_bound(full, k_t, k_r, best.capacity_bits).satisfied);
    REQUIRE(theorem2_bound(full, k_t, k_r, best.capacity_bits).satisfied);

    // Identical inputs, identical traces.
    const auto a = greedy_prune(ch, p, k_t, k_r);
    const auto b = greedy_prune(ch, p, k_t, k_r);
    REQUIRE(a.trace.size() == b.trace.size());
    for (std::size_t i = 0; i < a.trace.size(); ++i) {
      REQUIRE(a.trace[i].removed == b.trace[i].removed);
      REQUIRE(a.trace[i].capacity_after == b.trace[i].capacity_after);
    }

    // Transmit pruning is receive pruning of the reciprocal channel.
    const auto tx_first = greedy_prune(ch, p, k_t, k_r, PruneOrder::kTxFirst);
    const auto mirrored = greedy_prune(ch.reciprocal(), p, k_r, k_t, PruneOrder::kRxFirst);
    REQUIRE(tx_first.trace.size() == mirrored.trace.size());
    for (std::size_t i = 0; i < tx_first.trace.size(); ++i) {
      REQUIRE(tx_first.trace[i].side != mirrored.trace[i].side);
      REQUIRE(std::abs(tx_first.trace[i].capacity_after - mirrored.trace[i].capacity_after) <=
              1e-9);
    }
  }
}

TEST_CASE("average minor determinant dominates det^((n-1)/n)") {
  std::mt19937_64 rng(31337);
  for (int trial = 0; trial < 300; ++trial) {
    const auto ch = oracle::random_channel(rng, 6, 2);
    const auto f = oracle::gram(oracle::to_dense(ch.matrix()), trial % 2 ? 1.0 : 50.0);
    const int n = static_cast<int>(f.size());
    double avg = 0.0;
    for (int i = 1; i <= n; ++i) {
      std::vector<int> keep;
      for (int j = 1; j <= n; ++j)
        if (j != i) keep.push_back(j);
      avg += oracle::det(oracle::submatrix(f, keep)).real() / n;
    }
    const double rhs = std::pow(oracle::det(f).real(), (n - 1.0) / n);
    REQUIRE(avg >= rhs - 1e-9 * rhs);
  }
}

}  // TEST_SUITE
