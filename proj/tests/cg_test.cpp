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

#include <gtest/gtest.h>

#include <array>

#include "oracles.hpp"
#include "twistgenus/errors.hpp"
#include "twistgenus/signatures.hpp"

namespace twistgenus {
namespace {

ExactRational Q(long p, long q) { return ExactRational(BigInt(p), BigInt(q)); }

// tau signatures of K_6, elements 0..12, as hundredths.
constexpr std::array<long, 13> kTable3Hundredths = {
    0, -16, 336, 256, 544, 400, 624, 416, 576, 304, 400, 64, 96};

TEST(CharacterTest, OrderAndRange) {
  EXPECT_EQ(Character(5, 25).order(), 5);
  EXPECT_EQ(Character(0, 25).order(), 1);
  EXPECT_EQ(Character(7, 21).order(), 3);
  EXPECT_TRUE(Character(7, 21).has_prime_power_order());
  EXPECT_FALSE(Character(1, 21).has_prime_power_order());
  EXPECT_THROW(Character(25, 25), IndexOutOfRange);
}

TEST(GilmerTest, Examples) {
  EXPECT_EQ(gilmer_tau({25, -2, 0, 1, 25}).signature, Q(-4, 25));
  EXPECT_EQ(gilmer_tau({25, -2, 0, 1, 25}).signature.to_decimal(2), "-0.16");
  EXPECT_EQ(gilmer_tau({25, -12, 0, 12, 25}).signature, Q(24, 25));
  EXPECT_EQ(gilmer_tau({0, 0, 0, 3, 7}).signature, ExactRational(0));
  EXPECT_TRUE(gilmer_tau({25, -2, 0, 1, 25}).certified);
}

TEST(GilmerTest, PrimePowerModes) {
  const GilmerInput in{21, -2, 0, 1, 21};
  EXPECT_THROW((void)gilmer_tau(in), NonPrimePowerOrder);
  const GilmerResult permissive = gilmer_tau(in, PrimePowerMode::Permissive);
  EXPECT_FALSE(permissive.certified);
  EXPECT_EQ(permissive.signature, ExactRational(-4) + Q(80, 21));
  EXPECT_THROW((void)gilmer_tau({25, 0, 0, 0, 25}), IndexOutOfRange);
  EXPECT_THROW((void)gilmer_tau({25, 0, 0, 25, 25}), IndexOutOfRange);
}

TEST(TauTwistTest, Examples) {
  const TwistKnot k6(6);
  EXPECT_EQ(tau_twist(k6, 2), Q(84, 25));
  EXPECT_EQ(tau_twist(k6, 13), Q(24, 25));
  EXPECT_EQ(tau_twist(k6, 0), ExactRational(0));
  EXPECT_THROW((void)tau_twist(k6, 25), IndexOutOfRange);
  EXPECT_THROW((void)tau_twist(k6, -1), IndexOutOfRange);
}

TEST(TauTableTest, ReproducesTable3) {
  const TauTable table = tau_table(TwistKnot(6));
  ASSERT_EQ(table.values.size(), 25U);
  for (std::size_t s = 0; s < kTable3Hundredths.size(); ++s) {
    EXPECT_EQ(table.values[s], Q(kTable3Hundredths[s], 100)) << s;
    EXPECT_EQ(table.values[25 - s == 25 ? 0 : 25 - s], Q(kTable3Hundredths[s], 100)) << s;
  }
}

TEST(TauTableTest, SmallKnots) {
  EXPECT_EQ(tau_table(TwistKnot(0)).values, std::vector<ExactRational>{ExactRational(0)});
  EXPECT_EQ(tau_table(TwistKnot(1)).values,
            (std::vector<ExactRational>{0, Q(-4, 5), Q(4, 5), Q(4, 5), Q(-4, 5)}));
}

TEST(TauTableTest, SymmetryAndDenominators) {
  for (std::int64_t n = 0; n <= 200; ++n) {
    const TauTable table = tau_table(TwistKnot(n));
    const std::int64_t m = 4 * n + 1;
    ASSERT_EQ(table.values.front(), ExactRational(0));
    for (std::int64_t s = 1; s < m; ++s) {
      ASSERT_EQ(table.values[s], table.values[m - s]) << n << " " << s;
      ASSERT_EQ(m % table.values[s].denominator(), 0) << n << " " << s;
    }
  }
}

TEST(TauTwistTest, IsGilmerWithTwistKnotInputs) {
  for (std::int64_t n = 1; n <= 50; ++n) {
    const std::int64_t m = 4 * n + 1;
    for (std::int64_t s = 1; s < m; ++s) {
      const std::int64_t sigma_J = lt_signature_torus_2q(2 * n + 1, RationalAngle(s, m));
      const GilmerResult g =
          gilmer_tau({m, sigma_J, 0, s, m}, PrimePowerMode::Permissive);
      ASSERT_EQ(tau_twist(TwistKnot(n), s), g.signature) << n << " " << s;
    }
  }
}

TEST(TauTwistTest, AgreesWithRootCountOracle) {
  // sigma_J from the Alexander-root count, correction term by hand.
  for (long n = 1; n <= 60; ++n) {
    const long m = 4 * n + 1;
    for (long s = 1; s < m; ++s) {
      const ExactRational expected =
          ExactRational(2 * oracle::torus_signature_by_root_count(2 * n + 1, s, m)) +
          Q(4 * (m - s) * s, m);
      ASSERT_EQ(tau_twist(TwistKnot(n), s), expected) << n << " " << s;
    }
  }
}

}  // namespace
}  // namespace twistgenus
