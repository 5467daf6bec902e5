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

// Casson-Gordon tau-signatures of genus-one knots via Gilmer's formula, and
// its specialization to the twist knots K_n over the double branched cover.

#ifndef TWISTGENUS_CG_HPP_
#define TWISTGENUS_CG_HPP_

#include <cstdint>
#include <vector>

#include "twistgenus/arith.hpp"
#include "twistgenus/seifert.hpp"

namespace twistgenus {

// chi = x (x) s/m on H^1(X_2; Q/Z) = Z_m, for the generator fixed by
// x = (1, 2) on the Seifert surface.
class Character {
 public:
  // Throws IndexOutOfRange unless m > 0 and 0 <= s < m.
  Character(std::int64_t s, std::int64_t m);

  std::int64_t s() const { return s_; }
  std::int64_t m() const { return m_; }
  // Order of chi in Z_m, i.e. m / gcd(s, m).
  std::int64_t order() const;
  bool has_prime_power_order() const;

 private:
  std::int64_t s_;
  std::int64_t m_;
};

struct GilmerInput {
  std::int64_t theta_xx = 0;  // self-pairing theta(x, x)
  std::int64_t sigma_J = 0;   // sigma_{s/m} of the companion knot J_x
  std::int64_t sigma_K = 0;   // ordinary signature of K
  std::int64_t s = 0;
  std::int64_t m = 1;
};

enum class PrimePowerMode { Strict, Permissive };

struct GilmerResult {
  ExactRational signature;
  // False when m is not a prime power: the value is the right-hand side of the
  // formula, not a certified tau-signature.
  bool certified = true;
};

// 2 sigma_J + 4 (m - s) s theta_xx / m^2 + sigma_K.
// Throws IndexOutOfRange unless 0 < s < m, and NonPrimePowerOrder in strict
// mode when m is not a prime power.
GilmerResult gilmer_tau(const GilmerInput& input,
                        PrimePowerMode mode = PrimePowerMode::Strict);

// Twist-knot specialization, with theta(x, x) = 4n+1, sigma(K_n) = 0 and
// J_x = T(2, 2n+1):
//   s = 0            -> 0
//   1 <= s <= 2n     -> -4 ceil(s/2)       + 4 (m - s) s / m
//   2n+1 <= s <= 4n  -> -4 ceil((m - s)/2) + 4 (m - s) s / m
// with m = 4n+1. Equals the tau-signature exactly when the character of index
// s has prime-power order. Throws IndexOutOfRange unless 0 <= s < m.
ExactRational tau_twist(const TwistKnot& knot, std::int64_t s);

// All m = 4n+1 values of tau_twist, indexed by s. values[0] == 0 and
// values[s] == values[m - s].
struct TauTable {
  TwistKnot knot{0};
  std::vector<ExactRational> values;

  std::int64_t modulus() const { return knot.m(); }
};

TauTable tau_table(const TwistKnot& knot);

}  // namespace twistgenus

#endif  // TWISTGENUS_CG_HPP_
