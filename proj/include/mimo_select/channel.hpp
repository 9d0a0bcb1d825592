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
#include <filesystem>
#include <optional>
#include <vector>

#include "mimo_select/matrix.hpp"

namespace mimo {

// An n_r x n_t channel matrix: row i holds the gains seen by receive
// antenna i from every transmit antenna.
class MimoChannel {
 public:
  explicit MimoChannel(ComplexMatrix h) : h_(std::move(h)) {}

  int n_t() const { return h_.cols(); }
  int n_r() const { return h_.rows(); }
  const ComplexMatrix& matrix() const { return h_; }

  // The reciprocal channel H^H (roles of transmitters and receivers swapped).
  MimoChannel reciprocal() const { return MimoChannel(h_.adjoint()); }

  bool operator==(const MimoChannel&) const = default;

 private:
  ComplexMatrix h_;
};

struct CapacityReport {
  double capacity_bits = 0.0;
  double power = 0.0;
  int n_t = 0;
  int n_r = 0;
  std::vector<double> spectrum;  // of I + P H H^H, nonincreasing
};

// log2 det(I + P H H^H) with the input covariance fixed to P*I.
CapacityReport capacity(const MimoChannel& ch, double power);
double capacity_bits(const MimoChannel& ch, double power);

MimoChannel subchannel(const MimoChannel& ch, const SubsetIndex& tx,
                       const SubsetIndex& rx);

MimoChannel gen_all_ones(int n_t, int n_r);
MimoChannel gen_parallel(int n);
// I.i.d. CN(0, 1) entries; real and imaginary parts each have variance 1/2.
MimoChannel gen_gaussian(int n_t, int n_r, std::uint64_t seed);

// File I/O. Paths ending in ".csv" use the CSV layout, anything else JSON:
//   {"n_r": int, "n_t": int, "power_hint": real?, "entries": [[re, im], ...]}
// CSV: a first line "n_r,n_t" (optionally preceded by that literal header),
// then n_r lines of 2*n_t reals with re,im interleaved per column.
struct ChannelFile {
  MimoChannel channel;
  std::optional<double> power_hint;
};

ChannelFile load_channel_file(const std::filesystem::path& path);
MimoChannel load_channel(const std::filesystem::path& path);
void save_channel(const MimoChannel& ch, const std::filesystem::path& path,
                  std::optional<double> power_hint = std::nullopt);

ChannelFile parse_channel_json(const std::string& text);
ChannelFile parse_channel_csv(const std::string& text);
std::string channel_to_json(const MimoChannel& ch,
                            std::optional<double> power_hint = std::nullopt);
std::string channel_to_csv(const MimoChannel& ch);

}  // namespace mimo
