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

// Test-only reference computations. None of these go through the library's
// Jacobi solver or eigenvalue-product determinants.

#include <algorithm>
#include <complex>
#include <functional>
#include <random>
#include <vector>

#include <Eigen/Dense>

#include "mimo_select/channel.hpp"

namespace oracle {

using Complex = std::complex<double>;
using Dense = std::vector<std::vector<Complex>>;

inline Dense to_dense(const mimo::ComplexMatrix& m) {
  Dense d(static_cast<std::size_t>(m.rows()),
          std::vector<Complex>(static_cast<std::size_t>(m.cols())));
  for (int r = 0; r < m.rows(); ++r)
    for (int c = 0; c < m.cols(); ++c) d[r][c] = m(r, c);
  return d;
}

inline Dense to_dense(const mimo::HermitianForm& f) { return to_dense(f.matrix()); }

// Triple-loop I + P H H^H.
inline Dense gram(const Dense& h, double p) {
  const std::size_t n = h.size();
  const std::size_t t = h.empty() ? 0 : h[0].size();
  Dense g(n, std::vector<Complex>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Complex acc = i == j ? 1.0 : 0.0;
      for (std::size_t k = 0; k < t; ++k) acc += p * h[i][k] * std::conj(h[j][k]);
      g[i][j] = acc;
    }
  return g;
}

// Gaussian elimination with partial pivoting.
inline Complex det(Dense a) {
  const std::size_t n = a.size();
  Complex d = 1.0;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    for (std::size_t r = c + 1; r < n; ++r)
      if (std::abs(a[r][c]) > std::abs(a[piv][c])) piv = r;
    if (std::abs(a[piv][c]) == 0.0) return 0.0;
    if (piv != c) {
      std::swap(a[piv], a[c]);
      d = -d;
    }
    d *= a[c][c];
    for (std::size_t r = c + 1; r < n; ++r) {
      const Complex f = a[r][c] / a[c][c];
      for (std::size_t k = c; k < n; ++k) a[r][k] -= f * a[c][k];
    }
  }
  return d;
}

inline Dense submatrix(const Dense& a, const std::vector<int>& one_based) {
  Dense s(one_based.size(), std::vector<Complex>(one_based.size()));
  for (std::size_t i = 0; i < one_based.size(); ++i)
    for (std::size_t j = 0; j < one_based.size(); ++j)
      s[i][j] = a[one_based[i] - 1][one_based[j] - 1];
  return s;
}

// Eigen's self-adjoint solver, sorted nonincreasing.
inline std::vector<double> eigenvalues(const Dense& a) {
  const auto n = static_cast<Eigen::Index>(a.size());
  Eigen::MatrixXcd m(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) m(i, j) = a[i][j];
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(m, Eigen::EigenvaluesOnly);
  std::vector<double> ev(es.eigenvalues().data(), es.eigenvalues().data() + n);
  std::sort(ev.begin(), ev.end(), std::greater<>());
  return ev;
}

// e_0..e_n by the Vieta recurrence.
inline std::vector<double> elementary_symmetric_all(const std::vector<double>& v) {
  std::vector<double> e(v.size() + 1, 0.0);
  e[0] = 1.0;
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t k = i + 1; k >= 1; --k) e[k] += e[k - 1] * v[i];
  return e;
}

// log2 det(I + P H H^H) via the LU determinant.
inline double capacity(const mimo::MimoChannel& ch, double p) {
  return std::log2(det(gram(to_dense(ch.matrix()), p)).real());
}

// Random channel with dimensions in [1, max_n]; a different stream from the
// library generator.
inline mimo::MimoChannel random_channel(std::mt19937_64& rng, int max_n,
                                        int min_n = 1) {
  std::uniform_int_distribution<int> dim(min_n, max_n);
  std::normal_distribution<double> g(0.0, 1.0);
  const int n_r = dim(rng);
  const int n_t = dim(rng);
  std::vector<Complex> e(static_cast<std::size_t>(n_r * n_t));
  for (auto& z : e) z = Complex(g(rng), g(rng));
  return mimo::MimoChannel(mimo::ComplexMatrix(n_r, n_t, std::move(e)));
}

}  // namespace oracle
