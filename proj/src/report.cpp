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

#include "mimo_select/report.hpp"

#include "mimo_select/errors.hpp"

namespace mimo {

using nlohmann::json;

NLOHMANN_JSON_SERIALIZE_ENUM(Method, {{Method::kExhaustive, "exhaustive"},
                                      {Method::kGreedy, "greedy"}})
NLOHMANN_JSON_SERIALIZE_ENUM(Side, {{Side::kTx, "tx"}, {Side::kRx, "rx"}})
NLOHMANN_JSON_SERIALIZE_ENUM(PruneOrder, {{PruneOrder::kRxFirst, "rx-first"},
                                          {PruneOrder::kTxFirst, "tx-first"}})
NLOHMANN_JSON_SERIALIZE_ENUM(
    IdentityKind,
    {{IdentityKind::kProperty1, "property1"},
     {IdentityKind::kDerivativeSpecialCase, "derivative_special_case"},
     {IdentityKind::kInductionStep, "induction_step"},
     {IdentityKind::kSymmetricCoeff, "symmetric_coeff"},
     {IdentityKind::kAvgDetBound, "avg_det_bound"}})
NLOHMANN_JSON_SERIALIZE_ENUM(TightCase, {{TightCase::kAllOnesLowSnr, "all-ones"},
                                         {TightCase::kParallel, "parallel"}})
NLOHMANN_JSON_SERIALIZE_ENUM(IdentityFixture,
                             {{IdentityFixture::kGaussian, "gaussian"},
                              {IdentityFixture::kIdentity, "identity"}})

json document(const std::string& kind, json body) {
  json doc;
  doc["schema_version"] = kSchemaVersion;
  doc["kind"] = kind;
  doc["report"] = std::move(body);
  return doc;
}

void to_json(json& j, const CapacityReport& r) {
  j = json{{"capacity_bits", r.capacity_bits},
           {"power", r.power},
           {"n_t", r.n_t},
           {"n_r", r.n_r},
           {"spectrum", r.spectrum}};
}

void from_json(const json& j, CapacityReport& r) {
  j.at("capacity_bits").get_to(r.capacity_bits);
  j.at("power").get_to(r.power);
  j.at("n_t").get_to(r.n_t);
  j.at("n_r").get_to(r.n_r);
  j.at("spectrum").get_to(r.spectrum);
}

void to_json(json& j, const BoundReport& r) {
  j = json{{"theorem", r.theorem},
           {"full_capacity_bits", r.full_capacity_bits},
           {"fraction",
            {{"num", r.fraction_num}, {"den", r.fraction_den}, {"value", r.fraction}}},
           {"gap_G_bits", r.gap_bits},
           {"bound_bits", r.bound_bits},
           {"achieved_bits", r.achieved_bits},
           {"slack_bits", r.slack_bits},
           {"satisfied", r.satisfied}};
}

void from_json(const json& j, BoundReport& r) {
  j.at("theorem").get_to(r.theorem);
  j.at("full_capacity_bits").get_to(r.full_capacity_bits);
  const json& f = j.at("fraction");
  f.at("num").get_to(r.fraction_num);
  f.at("den").get_to(r.fraction_den);
  f.at("value").get_to(r.fraction);
  j.at("gap_G_bits").get_to(r.gap_bits);
  j.at("bound_bits").get_to(r.bound_bits);
  j.at("achieved_bits").get_to(r.achieved_bits);
  j.at("slack_bits").get_to(r.slack_bits);
  j.at("satisfied").get_to(r.satisfied);
}

void to_json(json& j, const RemovalStep& s) {
  j = json{{"side", s.side},
           {"removed", s.removed},
           {"remaining", s.remaining},
           {"capacity_after", s.capacity_after}};
}

void from_json(const json& j, RemovalStep& s) {
  j.at("side").get_to(s.side);
  j.at("removed").get_to(s.removed);
  j.at("remaining").get_to(s.remaining);
  j.at("capacity_after").get_to(s.capacity_after);
}

void to_json(json& j, const SelectionResult& r) {
  j = json{{"selection",
            {{"n_t", r.selection.tx.universe()},
             {"n_r", r.selection.rx.universe()},
             {"tx", r.selection.tx.members()},
             {"rx", r.selection.rx.members()}}},
           {"capacity_bits", r.capacity_bits},
           {"method", r.method},
           {"trace", r.trace}};
}

SelectionResult selection_result_from_json(const json& j) {
  const json& s = j.at("selection");
  SelectionResult r{
      Selection{SubsetIndex(s.at("n_t").get<int>(), s.at("tx").get<std::vector<int>>()),
                SubsetIndex(s.at("n_r").get<int>(), s.at("rx").get<std::vector<int>>())},
      j.at("capacity_bits").get<double>(), j.at("method").get<Method>(),
      j.at("trace").get<std::vector<RemovalStep>>()};
  return r;
}

void to_json(json& j, const IdentityReport& r) {
  j = json{{"identity", r.identity},
           {"n", r.n},
           {"k", r.k},
           {"max_abs_error", r.max_abs_error},
           {"max_rel_error", r.max_rel_error},
           {"tolerance", r.tolerance},
           {"passed", r.passed}};
}

void from_json(const json& j, IdentityReport& r) {
  j.at("identity").get_to(r.identity);
  j.at("n").get_to(r.n);
  j.at("k").get_to(r.k);
  j.at("max_abs_error").get_to(r.max_abs_error);
  j.at("max_rel_error").get_to(r.max_rel_error);
  j.at("tolerance").get_to(r.tolerance);
  j.at("passed").get_to(r.passed);
}

void to_json(json& j, const VerifyFailure& f) {
  j = json{{"trial", f.trial},   {"channel_seed", f.channel_seed},
           {"n_t", f.n_t},       {"n_r", f.n_r},
           {"k_t", f.k_t},       {"k_r", f.k_r},
           {"power", f.power},   {"check", f.check},
           {"slack_bits", f.slack_bits}};
}

void from_json(const json& j, VerifyFailure& f) {
  j.at("trial").get_to(f.trial);
  j.at("channel_seed").get_to(f.channel_seed);
  j.at("n_t").get_to(f.n_t);
  j.at("n_r").get_to(f.n_r);
  j.at("k_t").get_to(f.k_t);
  j.at("k_r").get_to(f.k_r);
  j.at("power").get_to(f.power);
  j.at("check").get_to(f.check);
  j.at("slack_bits").get_to(f.slack_bits);
}

// Thread count is deliberately absent: output must not depend on it.
void to_json(json& j, const VerificationRun& r) {
  const VerifyConfig& c = r.config;
  j = json{{"theorem", c.theorem},
           {"seed", c.seed},
           {"trials", c.trials},
           {"dim_range", {c.min_n, c.max_n}},
           {"power_set", c.powers},
           {"method", c.method},
           {"order", c.order},
           {"cap", c.cap},
           {"checks", r.checks},
           {"failures", r.failures},
           {"min_slack_bits", r.min_slack_bits},
           {"passed", r.passed()}};
  if (c.theorem == 2 && c.method == Method::kExhaustive) {
    j["greedy_theorem2"] = {{"checks", r.greedy_theorem2_checks},
                            {"misses", r.greedy_theorem2_misses}};
  }
}

void from_json(const json& j, VerificationRun& r) {
  VerifyConfig& c = r.config;
  j.at("theorem").get_to(c.theorem);
  j.at("seed").get_to(c.seed);
  j.at("trials").get_to(c.trials);
  const auto range = j.at("dim_range").get<std::vector<int>>();
  if (range.size() != 2) throw ParseError("dim_range must have two elements");
  c.min_n = range[0];
  c.max_n = range[1];
  j.at("power_set").get_to(c.powers);
  j.at("method").get_to(c.method);
  j.at("order").get_to(c.order);
  j.at("cap").get_to(c.cap);
  j.at("checks").get_to(r.checks);
  j.at("failures").get_to(r.failures);
  j.at("min_slack_bits").get_to(r.min_slack_bits);
  if (j.contains("greedy_theorem2")) {
    j.at("greedy_theorem2").at("checks").get_to(r.greedy_theorem2_checks);
    j.at("greedy_theorem2").at("misses").get_to(r.greedy_theorem2_misses);
  }
}

void to_json(json& j, const IdentityRun& r) {
  const IdentityConfig& c = r.config;
  json reports = json::array();
  for (const auto& tr : r.reports) {
    json e = tr.report;
    e["trial"] = tr.trial;
    reports.push_back(std::move(e));
  }
  j = json{{"n", c.n},
           {"k", c.k == 0 ? json("all") : json(c.k)},
           {"trials", c.trials},
           {"seed", c.seed},
           {"tol", c.tol},
           {"power", c.power},
           {"fixture", c.fixture},
           {"reports", std::move(reports)},
           {"passed", r.passed()}};
}

void from_json(const json& j, IdentityRun& r) {
  IdentityConfig& c = r.config;
  j.at("n").get_to(c.n);
  const json& k = j.at("k");
  c.k = k.is_string() ? 0 : k.get<int>();
  j.at("trials").get_to(c.trials);
  j.at("seed").get_to(c.seed);
  j.at("tol").get_to(c.tol);
  j.at("power").get_to(c.power);
  j.at("fixture").get_to(c.fixture);
  r.reports.clear();
  for (const auto& e : j.at("reports")) {
    r.reports.push_back({e.at("trial").get<int>(), e.get<IdentityReport>()});
  }
}

void to_json(json& j, const TightnessReport& r) {
  j = json{{"case", r.tight_case},
           {"n_t", r.n_t},
           {"n_r", r.n_r},
           {"k_t", r.k_t},
           {"k_r", r.k_r},
           {"power", r.power},
           {"full_capacity_bits", r.full_capacity_bits},
           {"best_capacity_bits", r.best_capacity_bits},
           {"ratio_observed", r.ratio_observed},
           {"ratio_predicted", r.ratio_predicted},
           {"abs_error", r.abs_error},
           {"theorem1", r.theorem1},
           {"theorem2", r.theorem2}};
}

void from_json(const json& j, TightnessReport& r) {
  j.at("case").get_to(r.tight_case);
  j.at("n_t").get_to(r.n_t);
  j.at("n_r").get_to(r.n_r);
  j.at("k_t").get_to(r.k_t);
  j.at("k_r").get_to(r.k_r);
  j.at("power").get_to(r.power);
  j.at("full_capacity_bits").get_to(r.full_capacity_bits);
  j.at("best_capacity_bits").get_to(r.best_capacity_bits);
  j.at("ratio_observed").get_to(r.ratio_observed);
  j.at("ratio_predicted").get_to(r.ratio_predicted);
  j.at("abs_error").get_to(r.abs_error);
  j.at("theorem1").get_to(r.theorem1);
  j.at("theorem2").get_to(r.theorem2);
}

}  // namespace mimo
