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

// Levine-Tristram signatures: the integer closed form for the torus knots
// T(2, 2n+1) at angles s/(4n+1), a floating-point evaluation for arbitrary
// Seifert matrices, and the exact ordinary signature.

#ifndef TWISTGENUS_SIGNATURES_HPP_
#define TWISTGENUS_SIGNATURES_HPP_

#include <cstdint>

#include "twistgenus/seifert.hpp"

namespace twistgenus {

// omega = exp(2 pi i s / m). s/m is not reduced: characters are indexed by s
// modulo m.
class RationalAngle {
 public:
  // Throws AngleOutOfRange unless m > 0 and 0 <= s < m.
  RationalAngle(std::int64_t s, std::int64_t m);

  std::int64_t s() const { return s_; }
  std::int64_t m() const { return m_; }

 private:
  std::int64_t s_;
  std::int64_t m_;
};

inline constexpr double kDefaultEigenTolerance = 1e-9;

// sigma_{s/m}(T(2, q)) for m = 2q - 1 (i.e. q = 2n+1, m = 4n+1):
//   -2 ceil(s/2)        for 1 <= s <= 2n
//   -2 ceil((m - s)/2)  for 2n+1 <= s <= 4n
// Throws AngleOutOfRange for s == 0 and std::invalid_argument if m != 2q - 1.
std::int64_t lt_signature_torus_2q(std::int64_t q_odd, const RationalAngle& angle);

// Signature of (1 - omega) A + (1 - conj(omega)) A^T. Throws AngleOutOfRange
// for s == 0 and NearSingular when some |eigenvalue| < tolerance.
int lt_signature_generic(const SeifertMatrix& A, const RationalAngle& angle,
                         double tolerance = kDefaultEigenTolerance);

// Signature of A + A^T, computed exactly over the rationals. Throws Degenerate
// if A + A^T is singular.
int ordinary_signature(const SeifertMatrix& A);

}  // namespace twistgenus

#endif  // TWISTGENUS_SIGNATURES_HPP_
