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

// Twist knots, Seifert matrices and the (doubled) Seifert bilinear form.

#ifndef TWISTGENUS_SEIFERT_HPP_
#define TWISTGENUS_SEIFERT_HPP_

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "twistgenus/arith.hpp"

namespace twistgenus {

// The twist knot K_n: n full right-handed twists and a clasp. K_0 is the
// unknot, K_1 the figure-eight, K_2 the Stevedore knot. H_1 of the double
// branched cover L(4n+1, 2) is cyclic of order m = 4n+1.
class TwistKnot {
 public:
  // Throws std::invalid_argument for n < 0 or when 4n+1 overflows int64.
  explicit TwistKnot(std::int64_t n);

  std::int64_t n() const { return n_; }
  std::int64_t m() const { return 4 * n_ + 1; }
  // The companion J_x of the class x = (1, 2) is the torus knot T(2, 2n+1).
  std::int64_t companion_torus_q() const { return 2 * n_ + 1; }

  friend bool operator==(const TwistKnot&, const TwistKnot&) = default;

 private:
  std::int64_t n_;
};

using IntVector = std::vector<BigInt>;

// Square integer matrix of even size 2g with A - A^T unimodular. The empty
// matrix (g = 0) is the neutral element of block_sum.
class SeifertMatrix {
 public:
  SeifertMatrix() = default;

  // Throws DimensionMismatch for ragged, non-square or odd-sized input and
  // InvalidSeifertMatrix when det(A - A^T) != +-1.
  static SeifertMatrix from_rows(
      const std::vector<std::vector<std::int64_t>>& rows);

  std::size_t size() const { return size_; }
  std::size_t genus() const { return size_ / 2; }
  std::int64_t at(std::size_t row, std::size_t col) const {
    return entries_[row * size_ + col];
  }
  std::vector<std::vector<std::int64_t>> rows() const;

  friend bool operator==(const SeifertMatrix&, const SeifertMatrix&) = default;

 private:
  SeifertMatrix(std::size_t size, std::vector<std::int64_t> entries)
      : size_(size), entries_(std::move(entries)) {}

  friend SeifertMatrix block_sum(const SeifertMatrix&, const SeifertMatrix&);

  std::size_t size_ = 0;
  std::vector<std::int64_t> entries_;
};

// [[-1, 1], [0, n]] in the basis a, b of the standard genus-one surface; the
// matrix the tau-signature computation is phrased in.
SeifertMatrix seifert_matrix_tau_convention(const TwistKnot& knot);

// [[1, 1], [0, -n]]; the matrix the doubled-form subgroup search uses.
SeifertMatrix seifert_matrix_pell_convention(const TwistKnot& knot);

// Standard Seifert matrix of the torus knot T(2, q), q odd >= 1: size q-1,
// -1 on the diagonal and 1 on the superdiagonal.
SeifertMatrix torus_knot_seifert_matrix(std::int64_t q_odd);

SeifertMatrix block_sum(const SeifertMatrix& a, const SeifertMatrix& b);

// v^T A w, exact. Throws DimensionMismatch if the lengths differ from A.size().
BigInt evaluate_form(const SeifertMatrix& A, std::span<const BigInt> v,
                     std::span<const BigInt> w);

// det(A - A^T) and det(A + A^T), exact (fraction-free elimination).
BigInt antisymmetrized_determinant(const SeifertMatrix& A);
BigInt symmetrized_determinant(const SeifertMatrix& A);

// Determinant of a square integer matrix by Bareiss elimination.
BigInt determinant(std::vector<std::vector<BigInt>> matrix);

IntVector make_int_vector(std::initializer_list<long> coordinates);

}  // namespace twistgenus

#endif  // TWISTGENUS_SEIFERT_HPP_
