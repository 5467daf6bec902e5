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

#include "twistgenus/pell.hpp"

#include <stdexcept>
#include <string>

#include "twistgenus/errors.hpp"

namespace twistgenus {

ContinuedFraction continued_fraction_sqrt(std::uint64_t D) {
  if (D < 2) throw std::invalid_argument("continued_fraction_sqrt: D must be >= 2");
  if (is_perfect_square(D)) {
    throw PerfectSquare(std::to_string(D) + " is a perfect square");
  }
  using u128 = unsigned __int128;
  ContinuedFraction cf;
  cf.D = D;
  cf.a0 = isqrt(D);

  // (sqrt(D) + m) / d with 0 <= m <= a0 and d | D - m^2 at every step.
  std::uint64_t m = 0;
  std::uint64_t d = 1;
  std::uint64_t a = cf.a0;
  do {
    m = d * a - m;
    d = static_cast<std::uint64_t>((static_cast<u128>(D) - static_cast<u128>(m) * m) / d);
    a = (cf.a0 + m) / d;
    cf.period.push_back(a);
  } while (a != 2 * cf.a0);
  return cf;
}

PellSolution solve_negative_pell(std::uint64_t D) {
  if (D == 0) throw std::invalid_argument("solve_negative_pell: D must be >= 1");
  PellSolution out;
  out.D = D;
  if (D == 1 || is_perfect_square(D)) return out;

  const ContinuedFraction cf = continued_fraction_sqrt(D);
  if (!cf.odd_period()) return out;

  // Convergent p_k/q_k with k = period length - 1.
  BigInt p_prev = 1;
  BigInt q_prev = 0;
  BigInt p = static_cast<unsigned long>(cf.a0);
  BigInt q = 1;
  for (std::size_t k = 0; k + 1 < cf.period.size(); ++k) {
    const BigInt a = static_cast<unsigned long>(cf.period[k]);
    BigInt p_next = a * p + p_prev;
    BigInt q_next = a * q + q_prev;
    p_prev = std::move(p);
    q_prev = std::move(q);
    p = std::move(p_next);
    q = std::move(q_next);
  }
  out.solvable = true;
  out.solution = PellPoint{p, q};
  return out;
}

}  // namespace twistgenus
