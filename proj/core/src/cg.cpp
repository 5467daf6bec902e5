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

#include "twistgenus/cg.hpp"

#include <numeric>
#include <string>

#include "twistgenus/errors.hpp"

namespace twistgenus {

Character::Character(std::int64_t s, std::int64_t m) : s_(s), m_(m) {
  if (m <= 0 || s < 0 || s >= m) {
    throw IndexOutOfRange("character index " + std::to_string(s) +
                          " outside [0, " + std::to_string(m) + ")");
  }
}

std::int64_t Character::order() const { return m_ / std::gcd(s_, m_); }

bool Character::has_prime_power_order() const {
  return is_prime_power(static_cast<std::uint64_t>(order()));
}

GilmerResult gilmer_tau(const GilmerInput& in, PrimePowerMode mode) {
  if (in.m <= 0 || in.s <= 0 || in.s >= in.m) {
    throw IndexOutOfRange("Gilmer's formula needs 0 < s < m, got s = " +
                          std::to_string(in.s) + ", m = " + std::to_string(in.m));
  }
  const bool certified = is_prime_power(static_cast<std::uint64_t>(in.m));
  if (!certified && mode == PrimePowerMode::Strict) {
    throw NonPrimePowerOrder("m = " + std::to_string(in.m) +
                             " is not a prime power");
  }
  const BigInt m = static_cast<long>(in.m);
  const BigInt s = static_cast<long>(in.s);
  const ExactRational correction(4 * (m - s) * s * static_cast<long>(in.theta_xx),
                                 m * m);
  return GilmerResult{
      ExactRational(2 * in.sigma_J) + correction + ExactRational(in.sigma_K),
      certified};
}

ExactRational tau_twist(const TwistKnot& knot, std::int64_t s) {
  const std::int64_t m = knot.m();
  if (s < 0 || s >= m) {
    throw IndexOutOfRange("element " + std::to_string(s) + " outside Z_" +
                          std::to_string(m));
  }
  if (s == 0) return ExactRational(0);
  const std::int64_t folded = s <= 2 * knot.n() ? s : m - s;
  const BigInt torus_term = BigInt(-4L) * static_cast<long>(ceil_div(folded, 2));
  const BigInt big_m = static_cast<long>(m);
  const BigInt big_s = static_cast<long>(s);
  return ExactRational(torus_term) +
         ExactRational(4 * (big_m - big_s) * big_s, big_m);
}

TauTable tau_table(const TwistKnot& knot) {
  TauTable table{knot, {}};
  table.values.reserve(static_cast<std::size_t>(knot.m()));
  for (std::int64_t s = 0; s < knot.m(); ++s) {
    table.values.push_back(tau_twist(knot, s));
  }
  return table;
}

}  // namespace twistgenus
