// Copyright 2026 The twistgenus Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS-IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//

#include "twistgenus/signatures.hpp"

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "twistgenus/errors.hpp"

namespace twistgenus {

RationalAngle::RationalAngle(std::int64_t s, std::int64_t m) : s_(s), m_(m) {
  if (m <= 0 || s < 0 || s >= m) {
    throw AngleOutOfRange("angle index " + std::to_string(s) +
                          " outside [0, " + std::to_string(m) + ")");
  }
}

namespace {

void require_nontrivial(const RationalAngle& angle) {
  if (angle.s() == 0) {
    throw AngleOutOfRange("Levine-Tristram signature needs 0 < s < m");
  }
}

}  // namespace

std::int64_t lt_signature_torus_2q(std::int64_t q_odd, const RationalAngle& angle) {
  require_nontrivial(angle);
  if (q_odd < 1 || q_odd % 2 == 0 || angle.m() != 2 * q_odd - 1) {
    throw std::invalid_argument("closed form needs odd q and m = 2q - 1, got q = " +
                                std::to_string(q_odd) + ", m = " +
                                std::to_string(angle.m()));
  }
  const std::int64_t n = (q_odd - 1) / 2;
  const std::int64_t s = angle.s();
  if (s <= 2 * n) return -2 * ceil_div(s, 2);
  return -2 * ceil_div(angle.m() - s, 2);
}

int lt_signature_generic(const SeifertMatrix& A, const RationalAngle& angle,
                         double tolerance) {
  require_nontrivial(angle);
  const auto size = static_cast<Eigen::Index>(A.size());
  if (size == 0) return 0;

  const double theta = 2.0 * std::numbers::pi * static_cast<double>(angle.s()) /
                       static_cast<double>(angle.m());
  const std::complex<double> omega = std::polar(1.0, theta);
  const std::complex<double> c = 1.0 - omega;

  Eigen::MatrixXcd H(size, size);
  for (Eigen::Index i = 0; i < size; ++i) {
    for (Eigen::Index j = 0; j < size; ++j) {
      const auto a_ij = static_cast<double>(A.at(static_cast<std::size_t>(i),
                                                 static_cast<std::size_t>(j)));
      const auto a_ji = static_cast<double>(A.at(static_cast<std::size_t>(j),
                                                 static_cast<std::size_t>(i)));
      H(i, j) = c * a_ij + std::conj(c) * a_ji;
    }
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(H, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) {
    throw NearSingular("eigenvalue iteration did not converge");
  }
  int signature = 0;
  for (Eigen::Index i = 0; i < size; ++i) {
    const double lambda = solver.eigenvalues()(i);
    if (std::abs(lambda) < tolerance) {
      throw NearSingular("eigenvalue " + std::to_string(lambda) + " at angle " +
                         std::to_string(angle.s()) + "/" +
                         std::to_string(angle.m()) + " below tolerance");
    }
    signature += lambda > 0 ? 1 : -1;
  }
  return signature;
}

int ordinary_signature(const SeifertMatrix& A) {
  const std::size_t n = A.size();
  std::vector<std::vector<mpq_class>> M(n, std::vector<mpq_class>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      M[i][j] = static_cast<long>(A.at(i, j)) + static_cast<long>(A.at(j, i));
    }
  }

  // Congruence diagonalization: P M P^T keeps the inertia (Sylvester).
  auto swap_index = [&M, n](std::size_t a, std::size_t b) {
    std::swap(M[a], M[b]);
    for (std::size_t r = 0; r < n; ++r) std::swap(M[r][a], M[r][b]);
  };
  int signature = 0;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pivot = k;
    while (pivot < n && M[pivot][pivot] == 0) ++pivot;
    if (pivot == n) {
      // Zero diagonal: add row/col j to row/col i for some M[i][j] != 0, which
      // makes M[i][i] = 2 M[i][j] != 0.
      std::size_t pi = n;
      std::size_t pj = n;
      for (std::size_t i = k; i < n && pi == n; ++i) {
        for (std::size_t j = k; j < n; ++j) {
          if (M[i][j] != 0) {
            pi = i;
            pj = j;
            break;
          }
        }
      }
      if (pi == n) throw Degenerate("A + A^T is singular");
      for (std::size_t c = 0; c < n; ++c) M[pi][c] += M[pj][c];
      for (std::size_t r = 0; r < n; ++r) M[r][pi] += M[r][pj];
      pivot = pi;
    }
    if (pivot != k) swap_index(pivot, k);

    const mpq_class d = M[k][k];
    signature += sgn(d) > 0 ? 1 : -1;
    for (std::size_t i = k + 1; i < n; ++i) {
      if (M[i][k] == 0) continue;
      const mpq_class f = M[i][k] / d;
      for (std::size_t j = k; j < n; ++j) M[i][j] -= f * M[k][j];
      for (std::size_t r = k; r < n; ++r) M[r][i] -= f * M[r][k];
    }
  }
  return signature;
}

}  // namespace twistgenus
