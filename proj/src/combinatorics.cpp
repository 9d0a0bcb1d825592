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

#include "mimo_select/combinatorics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>

#include "mimo_select/errors.hpp"

namespace mimo {

SubsetIndex::SubsetIndex(int universe, std::vector<int> members)
    : universe_(universe), members_(std::move(members)) {
  if (universe_ < 0) throw InvalidInput("subset universe must be nonnegative");
  for (std::size_t i = 0; i < members_.size(); ++i) {
    const int m = members_[i];
    if (m < 1 || m > universe_) {
      throw InvalidInput("index " + std::to_string(m) + " outside [1, " +
                         std::to_string(universe_) + "]");
    }
    if (i > 0 && members_[i - 1] >= m) {
      throw InvalidInput("subset indices must be strictly increasing");
    }
  }
}

SubsetIndex SubsetIndex::full(int universe) {
  std::vector<int> m(static_cast<std::size_t>(std::max(universe, 0)));
  std::iota(m.begin(), m.end(), 1);
  return SubsetIndex(universe, std::move(m));
}

SubsetIndex SubsetIndex::all_but(int universe, int removed) {
  if (removed < 1 || removed > universe) {
    throw InvalidInput("removed index " + std::to_string(removed) +
                       " outside [1, " + std::to_string(universe) + "]");
  }
  std::vector<int> m;
  m.reserve(static_cast<std::size_t>(universe - 1));
  for (int i = 1; i <= universe; ++i) {
    if (i != removed) m.push_back(i);
  }
  return SubsetIndex(universe, std::move(m));
}

bool SubsetIndex::contains(int index) const {
  return std::binary_search(members_.begin(), members_.end(), index);
}

std::string to_string(const SubsetIndex& s) {
  std::ostringstream out;
  out << '{';
  for (int i = 0; i < s.size(); ++i) {
    if (i) out << ',';
    out << s.members()[static_cast<std::size_t>(i)];
  }
  out << '}';
  return out.str();
}

BigInt binomial(int n, int k) {
  if (n < 0 || k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  BigInt r = 1;
  // r stays integral: after step i it equals C(n - k + i, i).
  for (int i = 1; i <= k; ++i) {
    r *= (n - k + i);
    r /= i;
  }
  return r;
}

BigInt factorial(int n) {
  if (n < 0) throw InvalidInput("factorial of a negative number");
  BigInt r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

double log2_big(const BigInt& x) {
  if (x <= 0) throw DomainError("log2 of a non-positive integer");
  const auto msb = static_cast<long>(boost::multiprecision::msb(x));
  if (msb < 1000) return std::log2(x.convert_to<double>());
  const long shift = msb - 60;
  const BigInt top = x >> shift;
  return std::log2(top.convert_to<double>()) + static_cast<double>(shift);
}

double to_double(const BigInt& x) { return x.convert_to<double>(); }

std::uint64_t saturating_count(const BigInt& x) {
  if (x > std::numeric_limits<std::uint64_t>::max()) {
    return std::numeric_limits<std::uint64_t>::max();
  }
  return x.convert_to<std::uint64_t>();
}

void for_each_subset(int n, int k,
                     const std::function<bool(std::span<const int>)>& visit) {
  if (k < 0 || k > n) return;
  std::vector<int> idx(static_cast<std::size_t>(k));
  std::iota(idx.begin(), idx.end(), 1);
  while (true) {
    if (!visit(idx)) return;
    // Advance to the next combination in lexicographic order.
    int i = k - 1;
    while (i >= 0 && idx[static_cast<std::size_t>(i)] == n - k + i + 1) --i;
    if (i < 0) return;
    ++idx[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j) {
      idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
    }
  }
}

std::vector<SubsetIndex> all_subsets(int n, int k) {
  std::vector<SubsetIndex> out;
  for_each_subset(n, k, [&](std::span<const int> s) {
    out.emplace_back(n, std::vector<int>(s.begin(), s.end()));
    return true;
  });
  return out;
}

}  // namespace mimo
