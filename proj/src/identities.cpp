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

#include "mimo_select/identities.hpp"

#include <algorithm>
#include <cmath>

#include "mimo_select/errors.hpp"

namespace mimo {

namespace {

void check_k(const HermitianForm& a, int k, int lo, int hi) {
  if (k < lo || k > hi) {
    throw InvalidInput("k must lie in [" + std::to_string(lo) + ", " +
                       std::to_string(hi) + "] for a form of dimension " +
                       std::to_string(a.dim()) + ", got " + std::to_string(k));
  }
  if (binomial(a.dim(), k) > kSubsetCap) {
    throw BudgetExceeded("C(" + std::to_string(a.dim()) + "," + std::to_string(k) +
                         ") subsets exceed the enumeration cap");
  }
}

IdentityReport compare(IdentityKind kind, int n, int k, const Polynomial& computed,
                       const Polynomial& reference, double tol) {
  IdentityReport r;
  r.identity = kind;
  r.n = n;
  r.k = k;
  r.tolerance = tol;
  const int deg = std::max(computed.degree(), reference.degree());
  for (int p = 0; p <= deg; ++p) {
    const double ref = reference.coeff(p);
    const double err = std::abs(computed.coeff(p) - ref);
    r.max_abs_error = std::max(r.max_abs_error, err);
    r.max_rel_error = std::max(r.max_rel_error, err / std::max(1.0, std::abs(ref)));
  }
  r.passed = r.max_rel_error <= tol;
  return r;
}

}  // namespace

std::string to_string(IdentityKind kind) {
  switch (kind) {
    case IdentityKind::kProperty1: return "property1";
    case IdentityKind::kDerivativeSpecialCase: return "derivative_special_case";
    case IdentityKind::kInductionStep: return "induction_step";
    case IdentityKind::kSymmetricCoeff: return "symmetric_coeff";
    case IdentityKind::kAvgDetBound: return "avg_det_bound";
  }
  return "unknown";
}

Polynomial subset_charpoly_sum(const HermitianForm& a, int k) {
  check_k(a, k, 1, a.dim());
  Polynomial sum;
  for_each_subset(a.dim(), k, [&](std::span<const int> members) {
    const SubsetIndex s(a.dim(), {members.begin(), members.end()});
    sum += char_poly(principal_submatrix(a, s));
    return true;
  });
  return sum;
}

Polynomial sum_subset_charpolys(const HermitianForm& a, int k) {
  const Polynomial sum = subset_charpoly_sum(a, k);
  return sum * to_double(factorial(a.dim() - k));
}

IdentityReport verify_property1(const HermitianForm& a, int k, double tol) {
  const int n = a.dim();
  const Polynomial lhs = sum_subset_charpolys(a, k);
  const Polynomial rhs = poly_derivative(char_poly(a), n - k);
  const auto kind =
      k == n - 1 ? IdentityKind::kDerivativeSpecialCase : IdentityKind::kProperty1;
  return compare(kind, n, k, lhs, rhs, tol);
}

IdentityReport verify_induction_step(const HermitianForm& a, int k, double tol) {
  const int n = a.dim();
  check_k(a, k, 1, n - 1);
  check_k(a, k + 1, 1, n);
  Polynomial lhs;
  for_each_subset(n, k + 1, [&](std::span<const int> members) {
    const SubsetIndex s(n, {members.begin(), members.end()});
    lhs += poly_derivative(char_poly(principal_submatrix(a, s)), 1);
    return true;
  });
  const Polynomial rhs = subset_charpoly_sum(a, k) * static_cast<double>(n - k);
  return compare(IdentityKind::kInductionStep, n, k, lhs, rhs, tol);
}

double elementary_symmetric(std::span<const double> values, int k) {
  const int n = static_cast<int>(values.size());
  if (k == 0) return 1.0;
  double sum = 0.0;
  for_each_subset(n, k, [&](std::span<const int> members) {
    double prod = 1.0;
    for (int m : members) prod *= values[static_cast<std::size_t>(m - 1)];
    sum += prod;
    return true;
  });
  return sum;
}

IdentityReport verify_symmetric_coeff(const HermitianForm& a, int k, double tol) {
  const int n = a.dim();
  check_k(a, k, 1, n);
  const auto eig = eigenvalues(a);
  const double sign = k % 2 == 0 ? 1.0 : -1.0;
  const double expected = sign * elementary_symmetric(eig, k);
  const double actual = char_poly(a).coeff(n - k);

  IdentityReport r;
  r.identity = IdentityKind::kSymmetricCoeff;
  r.n = n;
  r.k = k;
  r.tolerance = tol;
  r.max_abs_error = std::abs(actual - expected);
  r.max_rel_error = r.max_abs_error / std::max(1.0, std::abs(expected));
  r.passed = r.max_rel_error <= tol;
  return r;
}

AvgDetTerms avg_det_terms(const HermitianForm& a) {
  const int n = a.dim();
  if (n < 2) throw InvalidInput("average-determinant bound needs dimension >= 2");
  const auto eig = eigenvalues(a);
  if (eig.back() <= 0.0) {
    throw DomainError("average-determinant bound needs a positive definite form");
  }
  double sum = 0.0;
  for (int i = 1; i <= n; ++i) {
    sum += determinant(principal_submatrix(a, SubsetIndex::all_but(n, i)));
  }
  // det^((n-1)/n) via logs to avoid overflow for large determinants.
  double log_det_a = 0.0;
  for (double l : eig) log_det_a += std::log(l);
  return {sum / n, std::exp(log_det_a * (n - 1) / n)};
}

IdentityReport verify_avg_det_bound(const HermitianForm& a, double tol) {
  const AvgDetTerms t = avg_det_terms(a);
  IdentityReport r;
  r.identity = IdentityKind::kAvgDetBound;
  r.n = a.dim();
  r.k = a.dim() - 1;
  r.tolerance = tol;
  r.max_abs_error = std::max(0.0, t.bound - t.average_minor_det);
  r.max_rel_error = r.max_abs_error / t.bound;
  r.passed = r.max_rel_error <= tol;
  return r;
}

bool verify_case2_tuple_count(int n_r, int n_t, int k_r) {
  if (n_t < 1 || n_t > k_r || k_r > n_r) {
    throw InvalidInput("tuple count needs 1 <= n_t <= k_r <= n_r");
  }
  if (binomial(n_r, k_r) > kSubsetCap) {
    throw BudgetExceeded("tuple enumeration exceeds the enumeration cap");
  }
  BigInt count = 0;
  for_each_subset(n_r, k_r, [&](std::span<const int> members) {
    // Sorted members contain [n_t] exactly when they start 1, 2, ..., n_t.
    bool holds = true;
    for (int i = 0; i < n_t; ++i) {
      if (members[static_cast<std::size_t>(i)] != i + 1) {
        holds = false;
        break;
      }
    }
    if (holds) ++count;
    return true;
  });
  return count == binomial(n_r - n_t, k_r - n_t);
}

}  // namespace mimo
