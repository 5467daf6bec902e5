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

// Continued fractions of quadratic surds sqrt(D) and the negative Pell
// equation x^2 - D y^2 = -1.

#ifndef TWISTGENUS_PELL_HPP_
#define TWISTGENUS_PELL_HPP_

#include <cstdint>
#include <optional>
#include <vector>

#include "twistgenus/arith.hpp"

namespace twistgenus {

// sqrt(D) = [a0; period, period, ...]. The period is the minimal repeating
// block; its last element is 2*a0 and the rest is a palindrome.
struct ContinuedFraction {
  std::uint64_t D = 0;
  std::uint64_t a0 = 0;
  std::vector<std::uint64_t> period;

  bool odd_period() const { return period.size() % 2 == 1; }
};

struct PellPoint {
  BigInt x;
  BigInt y;
};

struct PellSolution {
  std::uint64_t D = 0;
  bool solvable = false;
  // Fundamental (minimal positive) solution of x^2 - D y^2 = -1.
  std::optional<PellPoint> solution;
};

// Throws PerfectSquare if D is a square, std::invalid_argument if D < 2.
ContinuedFraction continued_fraction_sqrt(std::uint64_t D);

// Square D (including D = 1) is reported unsolvable rather than raising.
// Throws std::invalid_argument for D == 0.
PellSolution solve_negative_pell(std::uint64_t D);

}  // namespace twistgenus

#endif  // TWISTGENUS_PELL_HPP_
