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

// mimo-select: capacities, antenna selection and bound verification.
//
// Exit codes: 0 success, 1 a bound or identity was violated, 2 invalid
// input, 3 a resource cap was hit. JSON goes to stdout, diagnostics to stderr.

#include <cstdint>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "mimo_select/errors.hpp"
#include "mimo_select/report.hpp"

namespace {

using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitInvalid = 2;
constexpr int kExitBudget = 3;

void emit(const json& doc) { std::cout << doc.dump(2) << '\n'; }

std::vector<double> parse_powers(const std::string& csv) {
  std::vector<double> out;
  std::stringstream in(csv);
  std::string item;
  while (std::getline(in, item, ',')) {
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(item, &used);
    } catch (const std::exception&) {
      throw mimo::InvalidInput("invalid power \"" + item + "\"");
    }
    if (used != item.size() || !(v > 0.0)) {
      throw mimo::InvalidInput("invalid power \"" + item + "\"");
    }
    out.push_back(v);
  }
  if (out.empty()) throw mimo::InvalidInput("--powers needs at least one value");
  return out;
}

// "<n_t>x<n_r>", or a single "<n>" for a square channel.
std::pair<int, int> parse_dims(const std::string& text) {
  const auto x = text.find('x');
  try {
    std::size_t used = 0;
    if (x == std::string::npos) {
      const int n = std::stoi(text, &used);
      if (used == text.size() && n >= 1) return {n, n};
    } else {
      const std::string a = text.substr(0, x);
      const std::string b = text.substr(x + 1);
      std::size_t used_b = 0;
      const int n_t = std::stoi(a, &used);
      const int n_r = std::stoi(b, &used_b);
      if (used == a.size() && used_b == b.size() && n_t >= 1 && n_r >= 1) {
        return {n_t, n_r};
      }
    }
  } catch (const std::exception&) {
  }
  throw mimo::InvalidInput("--dims must look like 3x3 or 4, got \"" + text + "\"");
}

double resolve_power(std::optional<double> flag, const mimo::ChannelFile& file) {
  if (flag) return *flag;
  if (file.power_hint) return *file.power_hint;
  throw mimo::InvalidInput("--power is required (the channel file has no power_hint)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"MIMO capacity, antenna subset selection and bound verification"};
  app.require_subcommand(1);

  // capacity
  auto* cap_cmd = app.add_subcommand("capacity", "Capacity of a channel file");
  std::string cap_channel;
  std::optional<double> cap_power;
  cap_cmd->add_option("--channel", cap_channel, "Channel file (.json or .csv)")->required();
  cap_cmd->add_option("--power", cap_power, "Per-antenna power P > 0");

  // select
  auto* sel_cmd = app.add_subcommand("select", "Best k_t x k_r antenna subset");
  std::string sel_channel;
  std::optional<double> sel_power;
  int sel_kt = 0;
  int sel_kr = 0;
  std::string sel_method = "exhaustive";
  std::string sel_order = "rx-first";
  std::uint64_t sel_cap = mimo::kDefaultEnumerationCap;
  sel_cmd->add_option("--channel", sel_channel, "Channel file")->required();
  sel_cmd->add_option("--power", sel_power, "Per-antenna power P > 0");
  sel_cmd->add_option("--kt", sel_kt, "Transmit antennas to keep")->required();
  sel_cmd->add_option("--kr", sel_kr, "Receive antennas to keep")->required();
  sel_cmd->add_option("--method", sel_method)
      ->check(CLI::IsMember({"exhaustive", "greedy"}));
  sel_cmd->add_option("--order", sel_order)->check(CLI::IsMember({"rx-first", "tx-first"}));
  sel_cmd->add_option("--cap", sel_cap, "Maximum subchannels to enumerate");

  // verify
  auto* ver_cmd = app.add_subcommand("verify", "Monte-Carlo check of a capacity bound");
  mimo::VerifyConfig vcfg;
  std::string ver_powers = "0.01,1,100";
  std::string ver_method = "exhaustive";
  std::string ver_order = "rx-first";
  int dim_cap = 8;
  ver_cmd->add_option("--theorem", vcfg.theorem, "1 (fractional) or 2 (constant gap)")
      ->required()
      ->check(CLI::IsMember({1, 2}));
  ver_cmd->add_option("--trials", vcfg.trials)->required();
  ver_cmd->add_option("--max-n", vcfg.max_n, "Largest antenna count per side");
  ver_cmd->add_option("--min-n", vcfg.min_n, "Smallest antenna count per side");
  ver_cmd->add_option("--powers", ver_powers, "Comma-separated powers");
  ver_cmd->add_option("--seed", vcfg.seed);
  ver_cmd->add_option("--method", ver_method)
      ->check(CLI::IsMember({"exhaustive", "greedy"}));
  ver_cmd->add_option("--order", ver_order)->check(CLI::IsMember({"rx-first", "tx-first"}));
  ver_cmd->add_option("--cap", vcfg.cap, "Maximum subchannels per exhaustive search");
  ver_cmd->add_option("--dim-cap", dim_cap, "Refuse --max-n above this");

  // identity
  auto* id_cmd = app.add_subcommand("identity", "Check the subset characteristic-polynomial identities");
  mimo::IdentityConfig icfg;
  std::string id_k = "all";
  std::string id_fixture = "gaussian";
  int id_dim_cap = 8;
  id_cmd->add_option("--n", icfg.n)->required();
  id_cmd->add_option("--k", id_k, "Subset size, or \"all\"");
  id_cmd->add_option("--trials", icfg.trials);
  id_cmd->add_option("--seed", icfg.seed);
  id_cmd->add_option("--tol", icfg.tol, "Relative coefficient tolerance");
  id_cmd->add_option("--power", icfg.power, "Power used to build Gram forms");
  id_cmd->add_option("--fixture", id_fixture)->check(CLI::IsMember({"gaussian", "identity"}));
  id_cmd->add_option("--dim-cap", id_dim_cap, "Refuse --n above this");

  // tight
  auto* tight_cmd = app.add_subcommand("tight", "Reproduce a tight example");
  std::string tight_case;
  std::string tight_dims;
  int tight_kt = 0;
  int tight_kr = 0;
  double tight_power = 0.0;
  tight_cmd->add_option("--case", tight_case)
      ->required()
      ->check(CLI::IsMember({"all-ones", "parallel"}));
  tight_cmd->add_option("--dims", tight_dims, "<n_t>x<n_r>, or <n>")->required();
  tight_cmd->add_option("--kt", tight_kt)->required();
  tight_cmd->add_option("--kr", tight_kr)->required();
  tight_cmd->add_option("--power", tight_power)->required();

  // generate
  auto* gen_cmd = app.add_subcommand("generate", "Write a canonical or random channel file");
  std::string gen_kind = "gaussian";
  std::string gen_dims;
  std::uint64_t gen_seed = 0;
  std::string gen_out;
  std::optional<double> gen_hint;
  gen_cmd->add_option("--kind", gen_kind)
      ->check(CLI::IsMember({"gaussian", "all-ones", "parallel"}));
  gen_cmd->add_option("--dims", gen_dims, "<n_t>x<n_r>, or <n>")->required();
  gen_cmd->add_option("--seed", gen_seed);
  gen_cmd->add_option("--out", gen_out, "Output path (.json or .csv)")->required();
  gen_cmd->add_option("--power-hint", gen_hint);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInvalid;
  }

  try {
    if (cap_cmd->parsed()) {
      const auto file = mimo::load_channel_file(cap_channel);
      const auto report = mimo::capacity(file.channel, resolve_power(cap_power, file));
      emit(mimo::document("capacity", report));
      return kExitOk;
    }

    if (sel_cmd->parsed()) {
      const auto file = mimo::load_channel_file(sel_channel);
      const double power = resolve_power(sel_power, file);
      const auto full = mimo::capacity(file.channel, power);
      const auto result =
          sel_method == "greedy"
              ? mimo::greedy_prune(file.channel, power, sel_kt, sel_kr,
                                   sel_order == "tx-first" ? mimo::PruneOrder::kTxFirst
                                                           : mimo::PruneOrder::kRxFirst)
              : mimo::exhaustive_best(file.channel, power, sel_kt, sel_kr, sel_cap);
      json body = result;
      body["full"] = full;
      body["theorem1"] = mimo::theorem1_bound(full, sel_kt, sel_kr, result.capacity_bits);
      body["theorem2"] = mimo::theorem2_bound(full, sel_kt, sel_kr, result.capacity_bits);
      if (result.method == mimo::Method::kGreedy) {
        body["per_step_ratio_ok"] =
            mimo::per_step_ratio_check(full.capacity_bits, result.trace);
      }
      emit(mimo::document("select", std::move(body)));
      return kExitOk;
    }

    if (ver_cmd->parsed()) {
      if (vcfg.max_n > dim_cap) {
        throw mimo::InvalidInput("--max-n " + std::to_string(vcfg.max_n) +
                                 " exceeds --dim-cap " + std::to_string(dim_cap));
      }
      vcfg.powers = parse_powers(ver_powers);
      vcfg.method = ver_method == "greedy" ? mimo::Method::kGreedy : mimo::Method::kExhaustive;
      vcfg.order = ver_order == "tx-first" ? mimo::PruneOrder::kTxFirst
                                           : mimo::PruneOrder::kRxFirst;
      const auto run = mimo::run_verification(vcfg);
      std::cerr << "verify: theorem " << vcfg.theorem << ", " << vcfg.trials
                << " trials, " << run.checks << " checks, " << run.failures.size()
                << " failures\n";
      emit(mimo::document("verify", run));
      return run.passed() ? kExitOk : kExitViolation;
    }

    if (id_cmd->parsed()) {
      if (icfg.n > id_dim_cap) {
        throw mimo::InvalidInput("--n " + std::to_string(icfg.n) + " exceeds --dim-cap " +
                                 std::to_string(id_dim_cap));
      }
      if (id_k == "all") {
        icfg.k = 0;
      } else {
        std::size_t used = 0;
        try {
          icfg.k = std::stoi(id_k, &used);
        } catch (const std::exception&) {
          used = 0;
        }
        if (used != id_k.size() || icfg.k < 1) {
          throw mimo::InvalidInput("--k must be a positive integer or \"all\"");
        }
      }
      icfg.fixture = id_fixture == "identity" ? mimo::IdentityFixture::kIdentity
                                              : mimo::IdentityFixture::kGaussian;
      const auto run = mimo::run_identities(icfg);
      std::cerr << "identity: " << run.reports.size() << " checks, "
                << (run.passed() ? "all passed" : "failures present") << '\n';
      emit(mimo::document("identity", run));
      return run.passed() ? kExitOk : kExitViolation;
    }

    if (tight_cmd->parsed()) {
      const auto [n_t, n_r] = parse_dims(tight_dims);
      const auto c = tight_case == "parallel" ? mimo::TightCase::kParallel
                                              : mimo::TightCase::kAllOnesLowSnr;
      emit(mimo::document("tight", mimo::run_tight(c, n_t, n_r, tight_kt, tight_kr,
                                                   tight_power)));
      return kExitOk;
    }

    if (gen_cmd->parsed()) {
      const auto [n_t, n_r] = parse_dims(gen_dims);
      mimo::MimoChannel ch = gen_kind == "all-ones" ? mimo::gen_all_ones(n_t, n_r)
                             : gen_kind == "parallel"
                                 ? (n_t == n_r ? mimo::gen_parallel(n_t)
                                               : throw mimo::InvalidInput(
                                                     "parallel channels are square"))
                                 : mimo::gen_gaussian(n_t, n_r, gen_seed);
      mimo::save_channel(ch, gen_out, gen_hint);
      return kExitOk;
    }
  } catch (const mimo::BudgetExceeded& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitBudget;
  } catch (const mimo::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInvalid;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInvalid;
  }
  return kExitInvalid;
}
