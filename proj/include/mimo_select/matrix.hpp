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

#include <complex>
#include <optional>
#include <span>
#include <vector>

#include "mimo_select/combinatorics.hpp"

namespace mimo {

using Complex = std::complex<double>;

// Dense row-major complex matrix with finite entries.
class ComplexMatrix {
 public:
  // Throws InvalidInput on a size mismatch, zero dimension or non-finite entry.
  ComplexMatrix(int rows, int cols, std::vector<Complex> entries);
  static ComplexMatrix zeros(int rows, int cols);
  static ComplexMatrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  const Complex& operator()(int r, int c) const {
    return entries_[static_cast<std::size_t>(r * cols_ + c)];
  }
  std::span<const Complex> entries() const { return entries_; }

  ComplexMatrix adjoint() const;
  ComplexMatrix scaled(double factor) const;

  bool operator==(const ComplexMatrix&) const = default;

 private:
  int rows_;
  int cols_;
  std::vector<Complex> entries_;
};

ComplexMatrix multiply(const ComplexMatrix& a, const ComplexMatrix& b);

// Tolerance for accepting a matrix as Hermitian.
inline constexpr double kHermitianTol = 1e-12;

// Hermitian matrix, stored symmetrized as (A + A^H)/2, with an optional
// spectrum cached at construction time.
class HermitianForm {
 public:
  // Throws InvalidInput if `m` is not square or differs from its conjugate
  // transpose by more than kHermitianTol in any entry.
  explicit HermitianForm(const ComplexMatrix& m);

  static HermitianForm diagonal(std::span<const double> diag);
  static HermitianForm identity(int n);

  int dim() const { return dim_; }
  const Complex& operator()(int r, int c) const {
    return entries_[static_cast<std::size_t>(r * dim_ + c)];
  }
  std::span<const Complex> entries() const { return entries_; }
  ComplexMatrix matrix() const;
  double trace() const;

  // Returns a copy carrying the computed spectrum.
  HermitianForm with_spectrum() const;
  const std::optional<std::vector<double>>& cached_spectrum() const {
    return spectrum_;
  }

 private:
  HermitianForm(int dim, std::vector<Complex> entries);

  int dim_;
  std::vector<Complex> entries_;
  std::optional<std::vector<double>> spectrum_;
};

// Real polynomial, coefficients indexed by power (constant term first).
// Trailing zeros are trimmed; the zero polynomial has no coefficients and
// degree -1.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<double> coeffs);

  // Expands prod_i (x - root_i).
  static Polynomial from_roots(std::span<const double> roots);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<double>& coeffs() const { return coeffs_; }
  // Coefficient of x^power, 0 beyond the degree.
  double coeff(int power) const;
  double evaluate(double x) const;

  Polynomial& operator+=(const Polynomial& other);
  Polynomial operator*(double factor) const;

  bool operator==(const Polynomial&) const = default;

 private:
  void trim();
  std::vector<double> coeffs_;
};

// I + P H H^H, n_r x n_r.
HermitianForm gram(const ComplexMatrix& h, double power);
// I + P H^H H, n_t x n_t.
HermitianForm dual_gram(const ComplexMatrix& h, double power);

// Rows and columns of `a` indexed by `subset` (1-based).
HermitianForm principal_submatrix(const HermitianForm& a,
                                  const SubsetIndex& subset);

// Cyclic Jacobi sweeps stop once the off-diagonal Frobenius norm drops to
// kJacobiRelTol times the matrix Frobenius norm.
inline constexpr double kJacobiRelTol = 1e-12;
inline constexpr int kJacobiMaxSweeps = 100;

// Real spectrum, nonincreasing. Uses the cached spectrum when present.
std::vector<double> eigenvalues(const HermitianForm& a);

// Product of eigenvalues.
double determinant(const HermitianForm& a);

// Sum of log2 eigenvalues, in bits. Throws DomainError unless positive
// definite.
double log_det(const HermitianForm& a);

// det(xI - A), expanded from the spectrum. Monic.
Polynomial char_poly(const HermitianForm& a);

Polynomial poly_derivative(const Polynomial& p, int order);

}  // namespace mimo
