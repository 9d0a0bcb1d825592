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
#include <string>

#include "mimo_select/matrix.hpp"

namespace mimo {

enum class IdentityKind {
  kProperty1,
  kDerivativeSpecialCase,  // property 1 at k = n - 1
  kInductionStep,
  kSymmetricCoeff,
  kAvgDetBound,
};

std::string to_string(IdentityKind kind);

// Coefficient errors are normalized by max(1, |reference coefficient|);
// passed <=> max_rel_error <= tolerance.
struct IdentityReport {
  IdentityKind identity = IdentityKind::kProperty1;
  int n = 0;
  int k = 0;
  double max_abs_error = 0.0;
  double max_rel_error = 0.0;
  double tolerance = 0.0;
  bool passed = false;
};

inline constexpr std::uint64_t kSubsetCap = 1'000'000;

// Sum of the characteristic polynomials of all k x k principal submatrices.
Polynomial subset_charpoly_sum(const HermitianForm& a, int k);

// (n-k)! times subset_charpoly_sum(a, k).
Polynomial sum_subset_charpolys(const HermitianForm& a, int k);

// Compares sum_subset_charpolys(a, k) against the (n-k)-th derivative of the
// characteristic polynomial. Reported as kDerivativeSpecialCase when k = n-1.
IdentityReport verify_property1(const HermitianForm& a, int k, double tol);

// sum over (k+1)-subsets of rho_L' against (n-k) * sum over k-subsets of rho_L.
IdentityReport verify_induction_step(const HermitianForm& a, int k, double tol);

// Sum of all products of k distinct values, by enumeration.
double elementary_symmetric(std::span<const double> values, int k);

// Coefficient of x^(n-k) in char_poly(a) against (-1)^k e_k(spectrum).
IdentityReport verify_symmetric_coeff(const HermitianForm& a, int k, double tol);

struct AvgDetTerms {
  double average_minor_det;  // (1/n) sum_i det(A with row/col i removed)
  double bound;              // det(A)^((n-1)/n)
  double relative_slack() const { return (average_minor_det - bound) / bound; }
};

AvgDetTerms avg_det_terms(const HermitianForm& a);

// Passes when the average of the (n-1) x (n-1) principal minors is at least
// det(A)^((n-1)/n) * (1 - tol). Requires a positive definite form, n >= 2.
IdentityReport verify_avg_det_bound(const HermitianForm& a, double tol);

// Counts k_r-subsets of [n_r] that contain [n_t] and compares the count with
// C(n_r - n_t, k_r - n_t). Requires n_t <= k_r <= n_r.
bool verify_case2_tuple_count(int n_r, int n_t, int k_r);

}  // namespace mimo
