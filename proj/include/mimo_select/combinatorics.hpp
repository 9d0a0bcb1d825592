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
#include <span>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace mimo {

using BigInt = boost::multiprecision::cpp_int;

// An index set over [1, universe], strictly increasing, 1-based.
class SubsetIndex {
 public:
  // Throws InvalidInput unless members are strictly increasing and lie in
  // [1, universe].
  SubsetIndex(int universe, std::vector<int> members);

  static SubsetIndex full(int universe);
  // [universe] \ {removed}
  static SubsetIndex all_but(int universe, int removed);

  int universe() const { return universe_; }
  int size() const { return static_cast<int>(members_.size()); }
  bool empty() const { return members_.empty(); }
  const std::vector<int>& members() const { return members_; }
  bool contains(int index) const;

  bool operator==(const SubsetIndex&) const = default;

 private:
  int universe_;
  std::vector<int> members_;
};

std::string to_string(const SubsetIndex& s);

BigInt binomial(int n, int k);
BigInt factorial(int n);

// Exact for values below 2^1000; beyond that the top bits are used.
double log2_big(const BigInt& x);
double to_double(const BigInt& x);

// Saturating product C(a,b)*C(c,d), used to check enumeration budgets
// without overflow.
std::uint64_t saturating_count(const BigInt& x);

// Visits every k-subset of [1, n] in lexicographic order. The callback gets
// 1-based members and returns false to stop early.
void for_each_subset(int n, int k,
                     const std::function<bool(std::span<const int>)>& visit);

// All k-subsets of [1, n], lexicographic.
std::vector<SubsetIndex> all_subsets(int n, int k);

}  // namespace mimo
