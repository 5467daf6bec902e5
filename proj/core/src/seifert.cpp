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

#include "twistgenus/seifert.hpp"

#include <limits>
#include <stdexcept>
#include <string>
#include <utility>

#include "twistgenus/errors.hpp"

namespace twistgenus {

TwistKnot::TwistKnot(std::int64_t n) : n_(n) {
  if (n < 0) throw std::invalid_argument("twist knot index must be >= 0");
  if (n > (std::numeric_limits<std::int64_t>::max() - 1) / 4) {
    throw std::invalid_argument("twist knot index too large: 4n+1 overflows");
  }
}

SeifertMatrix SeifertMatrix::from_rows(
    const std::vector<std::vector<std::int64_t>>& rows) {
  const std::size_t size = rows.size();
  if (size % 2 != 0) {
    throw DimensionMismatch("Seifert matrix must have even size, got " +
                            std::to_string(size));
  }
  std::vector<std::int64_t> entries;
  entries.reserve(size * size);
  for (const auto& row : rows) {
    if (row.size() != size) {
      throw DimensionMismatch("Seifert matrix must be square");
    }
    entries.insert(entries.end(), row.begin(), row.end());
  }
  SeifertMatrix out(size, std::move(entries));
  const BigInt det = antisymmetrized_determinant(out);
  if (det != 1 && det != -1) {
    throw InvalidSeifertMatrix("det(A - A^T) = " + det.get_str() +
                               ", expected +-1");
  }
  return out;
}

std::vector<std::vector<std::int64_t>> SeifertMatrix::rows() const {
  std::vector<std::vector<std::int64_t>> out(size_);
  for (std::size_t i = 0; i < size_; ++i) {
    out[i].assign(entries_.begin() + static_cast<std::ptrdiff_t>(i * size_),
                  entries_.begin() + static_cast<std::ptrdiff_t>((i + 1) * size_));
  }
  return out;
}

SeifertMatrix seifert_matrix_tau_convention(const TwistKnot& knot) {
  return SeifertMatrix::from_rows({{-1, 1}, {0, knot.n()}});
}

SeifertMatrix seifert_matrix_pell_convention(const TwistKnot& knot) {
  return SeifertMatrix::from_rows({{1, 1}, {0, -knot.n()}});
}

SeifertMatrix torus_knot_seifert_matrix(std::int64_t q_odd) {
  if (q_odd < 1 || q_odd % 2 == 0) {
    throw std::invalid_argument("torus knot T(2, q) needs odd q >= 1");
  }
  const auto size = static_cast<std::size_t>(q_odd - 1);
  std::vector<std::vector<std::int64_t>> rows(size,
                                              std::vector<std::int64_t>(size, 0));
  for (std::size_t i = 0; i < size; ++i) {
    rows[i][i] = -1;
    if (i + 1 < size) rows[i][i + 1] = 1;
  }
  return SeifertMatrix::from_rows(rows);
}

SeifertMatrix block_sum(const SeifertMatrix& a, const SeifertMatrix& b) {
  const std::size_t size = a.size() + b.size();
  std::vector<std::int64_t> entries(size * size, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < a.size(); ++j) entries[i * size + j] = a.at(i, j);
  }
  const std::size_t off = a.size();
  for (std::size_t i = 0; i < b.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) {
      entries[(off + i) * size + off + j] = b.at(i, j);
    }
  }
  return SeifertMatrix(size, std::move(entries));
}

BigInt evaluate_form(const SeifertMatrix& A, std::span<const BigInt> v,
                     std::span<const BigInt> w) {
  if (v.size() != A.size() || w.size() != A.size()) {
    throw DimensionMismatch("vector length does not match a " +
                            std::to_string(A.size()) + "x" +
                            std::to_string(A.size()) + " form");
  }
  BigInt total = 0;
  for (std::size_t i = 0; i < A.size(); ++i) {
    if (v[i] == 0) continue;
    BigInt row = 0;
    for (std::size_t j = 0; j < A.size(); ++j) {
      if (const long a = A.at(i, j); a != 0) row += w[j] * a;
    }
    total += v[i] * row;
  }
  return total;
}

BigInt determinant(std::vector<std::vector<BigInt>> M) {
  const std::size_t n = M.size();
  if (n == 0) return 1;
  BigInt sign = 1;
  BigInt prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (M[k][k] == 0) {
      std::size_t swap = k + 1;
      while (swap < n && M[swap][k] == 0) ++swap;
      if (swap == n) return 0;
      std::swap(M[k], M[swap]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        // Bareiss: the division is exact.
        M[i][j] = (M[i][j] * M[k][k] - M[i][k] * M[k][j]) / prev;
      }
    }
    prev = M[k][k];
  }
  return sign * M[n - 1][n - 1];
}

namespace {

BigInt determinant_of_combination(const SeifertMatrix& A, int transpose_sign) {
  std::vector<std::vector<BigInt>> M(A.size(), std::vector<BigInt>(A.size()));
  for (std::size_t i = 0; i < A.size(); ++i) {
    for (std::size_t j = 0; j < A.size(); ++j) {
      M[i][j] = BigInt(static_cast<long>(A.at(i, j))) +
                BigInt(static_cast<long>(transpose_sign)) *
                    static_cast<long>(A.at(j, i));
    }
  }
  return determinant(std::move(M));
}

}  // namespace

BigInt antisymmetrized_determinant(const SeifertMatrix& A) {
  return determinant_of_combination(A, -1);
}

BigInt symmetrized_determinant(const SeifertMatrix& A) {
  return determinant_of_combination(A, +1);
}

IntVector make_int_vector(std::initializer_list<long> coordinates) {
  IntVector out;
  out.reserve(coordinates.size());
  for (long c : coordinates) out.emplace_back(c);
  return out;
}

}  // namespace twistgenus
