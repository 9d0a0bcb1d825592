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

#include "mimo_select/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <string>

#include "mimo_select/errors.hpp"

namespace mimo {

namespace {

bool finite(const Complex& z) {
  return std::isfinite(z.real()) && std::isfinite(z.imag());
}

void check_power(double power) {
  if (!(power > 0.0) || !std::isfinite(power)) {
    throw InvalidInput("power must be positive and finite");
  }
}

}  // namespace

// ---------------------------------------------------------------------------
// ComplexMatrix

ComplexMatrix::ComplexMatrix(int rows, int cols, std::vector<Complex> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (rows_ < 1 || cols_ < 1) {
    throw InvalidInput("matrix dimensions must be positive, got " +
                       std::to_string(rows_) + "x" + std::to_string(cols_));
  }
  if (entries_.size() != static_cast<std::size_t>(rows_) * cols_) {
    throw InvalidInput("expected " + std::to_string(rows_ * cols_) +
                       " entries, got " + std::to_string(entries_.size()));
  }
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (!finite(entries_[i])) {
      throw InvalidInput("non-finite matrix entry at position " +
                         std::to_string(i));
    }
  }
}

ComplexMatrix ComplexMatrix::zeros(int rows, int cols) {
  return ComplexMatrix(
      rows, cols,
      std::vector<Complex>(static_cast<std::size_t>(std::max(rows * cols, 0))));
}

ComplexMatrix ComplexMatrix::identity(int n) {
  std::vector<Complex> e(static_cast<std::size_t>(std::max(n * n, 0)));
  for (int i = 0; i < n; ++i) e[static_cast<std::size_t>(i * n + i)] = 1.0;
  return ComplexMatrix(n, n, std::move(e));
}

ComplexMatrix ComplexMatrix::adjoint() const {
  std::vector<Complex> e(entries_.size());
  for (int r = 0; r < rows_; ++r) {
    for (int c = 0; c < cols_; ++c) {
      e[static_cast<std::size_t>(c * rows_ + r)] = std::conj((*this)(r, c));
    }
  }
  return ComplexMatrix(cols_, rows_, std::move(e));
}

ComplexMatrix ComplexMatrix::scaled(double factor) const {
  std::vector<Complex> e(entries_);
  for (auto& z : e) z *= factor;
  return ComplexMatrix(rows_, cols_, std::move(e));
}

ComplexMatrix multiply(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.cols() != b.rows()) {
    throw InvalidInput("multiply: inner dimensions differ");
  }
  std::vector<Complex> e(static_cast<std::size_t>(a.rows()) * b.cols());
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < b.cols(); ++j) {
      Complex acc = 0.0;
      for (int k = 0; k < a.cols(); ++k) acc += a(i, k) * b(k, j);
      e[static_cast<std::size_t>(i * b.cols() + j)] = acc;
    }
  }
  return ComplexMatrix(a.rows(), b.cols(), std::move(e));
}

// ---------------------------------------------------------------------------
// HermitianForm

HermitianForm::HermitianForm(int dim, std::vector<Complex> entries)
    : dim_(dim), entries_(std::move(entries)) {
  for (int i = 0; i < dim_; ++i) {
    auto& d = entries_[static_cast<std::size_t>(i * dim_ + i)];
    d = d.real();
    for (int j = i + 1; j < dim_; ++j) {
      auto& up = entries_[static_cast<std::size_t>(i * dim_ + j)];
      auto& lo = entries_[static_cast<std::size_t>(j * dim_ + i)];
      const Complex avg = 0.5 * (up + std::conj(lo));
      up = avg;
      lo = std::conj(avg);
    }
  }
}

HermitianForm::HermitianForm(const ComplexMatrix& m)
    : HermitianForm(
          [&] {
            if (m.rows() != m.cols()) {
              throw InvalidInput("Hermitian form must be square");
            }
            for (int i = 0; i < m.rows(); ++i) {
              for (int j = i; j < m.cols(); ++j) {
                if (std::abs(m(i, j) - std::conj(m(j, i))) > kHermitianTol) {
                  throw InvalidInput("matrix is not Hermitian at (" +
                                     std::to_string(i + 1) + "," +
                                     std::to_string(j + 1) + ")");
                }
              }
            }
            return m.rows();
          }(),
          std::vector<Complex>(m.entries().begin(), m.entries().end())) {}

HermitianForm HermitianForm::diagonal(std::span<const double> diag) {
  const int n = static_cast<int>(diag.size());
  if (n < 1) throw InvalidInput("diagonal form needs at least one entry");
  std::vector<Complex> e(static_cast<std::size_t>(n * n));
  for (int i = 0; i < n; ++i) {
    if (!std::isfinite(diag[static_cast<std::size_t>(i)])) {
      throw InvalidInput("non-finite diagonal entry");
    }
    e[static_cast<std::size_t>(i * n + i)] = diag[static_cast<std::size_t>(i)];
  }
  return HermitianForm(n, std::move(e));
}

HermitianForm HermitianForm::identity(int n) {
  return HermitianForm(ComplexMatrix::identity(n));
}

ComplexMatrix HermitianForm::matrix() const {
  return ComplexMatrix(dim_, dim_, entries_);
}

double HermitianForm::trace() const {
  double t = 0.0;
  for (int i = 0; i < dim_; ++i) t += (*this)(i, i).real();
  return t;
}

HermitianForm HermitianForm::with_spectrum() const {
  HermitianForm copy = *this;
  copy.spectrum_ = eigenvalues(*this);
  return copy;
}

// ---------------------------------------------------------------------------
// Polynomial

Polynomial::Polynomial(std::vector<double> coeffs) : coeffs_(std::move(coeffs)) {
  trim();
}

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0.0) coeffs_.pop_back();
}

Polynomial Polynomial::from_roots(std::span<const double> roots) {
  std::vector<double> c{1.0};
  for (double r : roots) {
    // Multiply by (x - r).
    std::vector<double> next(c.size() + 1, 0.0);
    for (std::size_t i = 0; i < c.size(); ++i) {
      next[i + 1] += c[i];
      next[i] -= r * c[i];
    }
    c = std::move(next);
  }
  return Polynomial(std::move(c));
}

double Polynomial::coeff(int power) const {
  if (power < 0 || power > degree()) return 0.0;
  return coeffs_[static_cast<std::size_t>(power)];
}

double Polynomial::evaluate(double x) const {
  double acc = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size(), 0.0);
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  trim();
  return *this;
}

Polynomial Polynomial::operator*(double factor) const {
  std::vector<double> c(coeffs_);
  for (double& v : c) v *= factor;
  return Polynomial(std::move(c));
}

// ---------------------------------------------------------------------------
// Operations

HermitianForm gram(const ComplexMatrix& h, double power) {
  check_power(power);
  const int n = h.rows();
  std::vector<Complex> e(static_cast<std::size_t>(n * n));
  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j) {
      Complex acc = 0.0;
      for (int c = 0; c < h.cols(); ++c) acc += h(i, c) * std::conj(h(j, c));
      acc *= power;
      if (i == j) acc += 1.0;
      e[static_cast<std::size_t>(i * n + j)] = acc;
      e[static_cast<std::size_t>(j * n + i)] = std::conj(acc);
    }
  }
  const HermitianForm f = HermitianForm(ComplexMatrix(n, n, std::move(e))).with_spectrum();
  const double floor = f.cached_spectrum()->back();
  if (floor < 1.0 - 1e-9) {
    throw NumericalFailure("Gram form eigenvalue below 1", 1.0 - floor);
  }
  return f;
}

HermitianForm dual_gram(const ComplexMatrix& h, double power) {
  return gram(h.adjoint(), power);
}

HermitianForm principal_submatrix(const HermitianForm& a,
                                  const SubsetIndex& subset) {
  if (subset.universe() != a.dim()) {
    throw InvalidInput("subset universe " + std::to_string(subset.universe()) +
                       " does not match form dimension " +
                       std::to_string(a.dim()));
  }
  if (subset.empty()) throw InvalidInput("principal submatrix of empty subset");
  const int k = subset.size();
  const auto& m = subset.members();
  std::vector<Complex> e(static_cast<std::size_t>(k * k));
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) {
      e[static_cast<std::size_t>(i * k + j)] =
          a(m[static_cast<std::size_t>(i)] - 1, m[static_cast<std::size_t>(j)] - 1);
    }
  }
  return HermitianForm(ComplexMatrix(k, k, std::move(e)));
}

std::vector<double> eigenvalues(const HermitianForm& a) {
  if (a.cached_spectrum()) return *a.cached_spectrum();

  const int n = a.dim();
  std::vector<Complex> m(a.entries().begin(), a.entries().end());
  auto at = [&](int r, int c) -> Complex& {
    return m[static_cast<std::size_t>(r * n + c)];
  };

  double frob2 = 0.0;
  for (const auto& z : m) frob2 += std::norm(z);
  if (!std::isfinite(frob2)) {
    throw NumericalFailure("matrix norm overflows double precision", frob2);
  }
  const double threshold = kJacobiRelTol * std::sqrt(frob2);

  auto off_norm = [&] {
    double s = 0.0;
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        if (i != j) s += std::norm(at(i, j));
      }
    }
    return std::sqrt(s);
  };

  double off = off_norm();
  int sweep = 0;
  while (off > threshold) {
    if (sweep == kJacobiMaxSweeps || !std::isfinite(off)) {
      throw NumericalFailure("Jacobi eigensolver did not converge in " +
                                 std::to_string(kJacobiMaxSweeps) + " sweeps",
                             off);
    }
    ++sweep;
    for (int p = 0; p < n - 1; ++p) {
      for (int q = p + 1; q < n; ++q) {
        const Complex apq = at(p, q);
        const double g = std::abs(apq);
        if (g == 0.0) continue;
        // Phase rotation makes the (p,q) entry real, then a real Jacobi
        // rotation annihilates it: G = diag(1, conj(phase)) * [[c, s], [-s, c]].
        const Complex phase = apq / g;
        const double theta = (at(q, q).real() - at(p, p).real()) / (2.0 * g);
        const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                         (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        const Complex g00 = c;
        const Complex g01 = s;
        const Complex g10 = -s * std::conj(phase);
        const Complex g11 = c * std::conj(phase);
        for (int k = 0; k < n; ++k) {
          const Complex kp = at(k, p);
          const Complex kq = at(k, q);
          at(k, p) = kp * g00 + kq * g10;
          at(k, q) = kp * g01 + kq * g11;
        }
        for (int k = 0; k < n; ++k) {
          const Complex pk = at(p, k);
          const Complex qk = at(q, k);
          at(p, k) = std::conj(g00) * pk + std::conj(g10) * qk;
          at(q, k) = std::conj(g01) * pk + std::conj(g11) * qk;
        }
        at(p, q) = 0.0;
        at(q, p) = 0.0;
        at(p, p) = at(p, p).real();
        at(q, q) = at(q, q).real();
      }
    }
    off = off_norm();
  }

  std::vector<double> eig(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) eig[static_cast<std::size_t>(i)] = at(i, i).real();
  std::sort(eig.begin(), eig.end(), std::greater<>());
  return eig;
}

double determinant(const HermitianForm& a) {
  double d = 1.0;
  for (double l : eigenvalues(a)) d *= l;
  return d;
}

double log_det(const HermitianForm& a) {
  const auto eig = eigenvalues(a);
  const double scale = std::max(1.0, std::abs(eig.front()));
  if (eig.back() <= 1e-14 * scale) {
    throw DomainError("log_det of a form that is not positive definite "
                      "(smallest eigenvalue " + std::to_string(eig.back()) + ")");
  }
  double s = 0.0;
  for (double l : eig) s += std::log2(l);
  return s;
}

Polynomial char_poly(const HermitianForm& a) {
  const auto eig = eigenvalues(a);
  return Polynomial::from_roots(eig);
}

Polynomial poly_derivative(const Polynomial& p, int order) {
  if (order < 0) throw InvalidInput("derivative order must be nonnegative");
  std::vector<double> c = p.coeffs();
  for (int step = 0; step < order && !c.empty(); ++step) {
    std::vector<double> next(c.size() - 1);
    for (std::size_t i = 1; i < c.size(); ++i) {
      next[i - 1] = c[i] * static_cast<double>(i);
    }
    c = std::move(next);
  }
  return Polynomial(std::move(c));
}

}  // namespace mimo
