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

#include "twistgenus/subgroup.hpp"

#include <gtest/gtest.h>

#include <random>
#include <stdexcept>

#include "twistgenus/errors.hpp"
#include "twistgenus/pell.hpp"

namespace twistgenus {
namespace {

bool is_witness(const TwistKnot& k, const SubgroupWitness& w) {
  const auto c = witness_gram_entry(doubled_pell_form(k), w.v, w.w);
  return c.has_value() && *c == w.c;
}

TEST(DoubledFormTest, IsBlockSumOfPellConvention) {
  const SeifertMatrix A = doubled_pell_form(TwistKnot(7));
  EXPECT_EQ(A, block_sum(seifert_matrix_pell_convention(TwistKnot(7)),
                         seifert_matrix_pell_convention(TwistKnot(7))));
  EXPECT_EQ(A.size(), 4U);
}

TEST(WitnessGramTest, K51PrintedVectors) {
  const TwistKnot k(51);
  const auto c = witness_gram_entry(doubled_pell_form(k), make_int_vector({13, 2, 3, 0}),
                                    make_int_vector({14, 2, -2, 1}));
  ASSERT_TRUE(c.has_value());
  EXPECT_EQ(*c, -29);
}

TEST(WitnessGramTest, RejectsBadPairs) {
  const SeifertMatrix A = doubled_pell_form(TwistKnot(51));
  const IntVector v = make_int_vector({13, 2, 3, 0});
  const IntVector w = make_int_vector({14, 2, -2, 1});
  EXPECT_FALSE(witness_gram_entry(A, w, v).has_value());
  EXPECT_FALSE(witness_gram_entry(A, v, v).has_value());
  EXPECT_FALSE(witness_gram_entry(A, make_int_vector({1, 0, 0, 0}), w).has_value());
  EXPECT_THROW((void)witness_gram_entry(A, make_int_vector({1, 0}), w), DimensionMismatch);
}

TEST(PellConstructionTest, Examples) {
  const auto k1 = pell_construction(TwistKnot(1));
  ASSERT_TRUE(k1.has_value());
  EXPECT_EQ(k1->v, make_int_vector({1, 0, 1, 2}));
  EXPECT_EQ(k1->w, make_int_vector({0, 1, 0, 0}));
  EXPECT_EQ(k1->c, -1);
  EXPECT_EQ(k1->source, WitnessSource::PellConstruction);
  EXPECT_TRUE(is_witness(TwistKnot(1), *k1));

  const auto k3 = pell_construction(TwistKnot(3));  // 13: (18, 5)
  ASSERT_TRUE(k3.has_value());
  EXPECT_EQ(k3->v, make_int_vector({1, 0, 13, 10}));
  EXPECT_EQ(k3->c, -3);

  EXPECT_FALSE(pell_construction(TwistKnot(51)).has_value());
  EXPECT_FALSE(pell_construction(TwistKnot(6)).has_value());
  EXPECT_FALSE(pell_construction(TwistKnot(2)).has_value());
}

TEST(PellConstructionTest, EverySolvableNUpTo100) {
  int solvable = 0;
  for (std::int64_t n = 0; n <= 100; ++n) {
    const TwistKnot k(n);
    const auto w = pell_construction(k);
    EXPECT_EQ(w.has_value(), solve_negative_pell(static_cast<std::uint64_t>(k.m())).solvable)
        << n;
    if (!w) continue;
    ++solvable;
    EXPECT_TRUE(is_witness(k, *w)) << n;
    EXPECT_EQ(w->c, -n);
  }
  EXPECT_GT(solvable, 20);
}

TEST(ExhaustiveSearchTest, K51InBoxTwenty) {
  const TwistKnot k(51);
  const auto w = exhaustive_search(k, 20);
  ASSERT_TRUE(w.has_value());
  EXPECT_EQ(w->source, WitnessSource::ExhaustiveSearch);
  EXPECT_TRUE(is_witness(k, *w));
  for (const auto& x : w->v) EXPECT_LE(abs(ExactRational(x)), ExactRational(20));
  for (const auto& x : w->w) EXPECT_LE(abs(ExactRational(x)), ExactRational(20));
}

TEST(ExhaustiveSearchTest, SmallCases) {
  const auto k1 = exhaustive_search(TwistKnot(1), 5);
  ASSERT_TRUE(k1.has_value());
  EXPECT_TRUE(is_witness(TwistKnot(1), *k1));
  // K_6: 25 is a square, so only the search can help. Whatever it finds must
  // satisfy the Gram conditions.
  const auto k6 = exhaustive_search(TwistKnot(6), 10);
  if (k6) {
    EXPECT_TRUE(is_witness(TwistKnot(6), *k6));
  }
  EXPECT_THROW((void)exhaustive_search(TwistKnot(5), 0), std::invalid_argument);
}

TEST(ExhaustiveSearchTest, Deterministic) {
  for (std::int64_t n : {1, 4, 7, 51}) {
    const auto a = exhaustive_search(TwistKnot(n), 12);
    const auto b = exhaustive_search(TwistKnot(n), 12);
    ASSERT_EQ(a.has_value(), b.has_value());
    if (a) {
      EXPECT_EQ(a->v, b->v);
      EXPECT_EQ(a->w, b->w);
      EXPECT_EQ(a->c, b->c);
    }
  }
}

TEST(ExhaustiveSearchTest, FindsWitnessWhenPellSolutionFitsInBox) {
  int checked = 0;
  for (std::int64_t n = 0; n <= 100; ++n) {
    const TwistKnot k(n);
    const PellSolution pell = solve_negative_pell(static_cast<std::uint64_t>(k.m()));
    if (!pell.solvable) continue;
    const BigInt& x = pell.solution->x;
    const BigInt& y = pell.solution->y;
    BigInt b = abs(x - y);
    if (2 * y > b) b = 2 * y;
    if (b < 1) b = 1;
    if (b > 30) continue;
    const auto w = exhaustive_search(k, b.get_si());
    ASSERT_TRUE(w.has_value()) << n;
    EXPECT_TRUE(is_witness(k, *w)) << n;
    ++checked;
  }
  EXPECT_GT(checked, 5);
}

TEST(ExhaustiveSearchTest, SweepWitnessesAreValid) {
  for (std::int64_t n = 0; n <= 60; ++n) {
    const auto w = exhaustive_search(TwistKnot(n), 6);
    if (w) EXPECT_TRUE(is_witness(TwistKnot(n), *w)) << n;
  }
}

TEST(FormIdentityTest, CompletingTheSquare) {
  // 4 (x^2 + xy - n y^2) = (2x + y)^2 - (4n + 1) y^2
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<long> coord(-100000, 100000);
  std::uniform_int_distribution<long> nd(0, 100000);
  for (int i = 0; i < 10000; ++i) {
    const long n = nd(rng);
    const IntVector v = make_int_vector({coord(rng), coord(rng)});
    const SeifertMatrix P = seifert_matrix_pell_convention(TwistKnot(n));
    const BigInt lhs = 4 * evaluate_form(P, v, v);
    const BigInt t = 2 * v[0] + v[1];
    const BigInt rhs = t * t - BigInt(4 * n + 1) * v[1] * v[1];
    ASSERT_EQ(lhs, rhs);
  }
}

TEST(VerdictTest, Provenance) {
  const UpperBoundVerdict k1 = upper_bound_verdict(TwistKnot(1));
  EXPECT_TRUE(k1.certified);
  ASSERT_TRUE(k1.witness.has_value());
  EXPECT_EQ(k1.witness->source, WitnessSource::PellConstruction);

  const UpperBoundVerdict k51 = upper_bound_verdict(TwistKnot(51));
  EXPECT_TRUE(k51.certified);
  ASSERT_TRUE(k51.witness.has_value());
  EXPECT_EQ(k51.witness->source, WitnessSource::ExhaustiveSearch);

  const UpperBoundVerdict k2 = upper_bound_verdict(TwistKnot(2), 3);
  if (!k2.certified) {
    EXPECT_FALSE(k2.witness.has_value());
    EXPECT_NE(k2.note.find("g_st <= 2/3"), std::string::npos);
  }
  EXPECT_EQ(to_string(WitnessSource::PellConstruction), "PellConstruction");
  EXPECT_EQ(to_string(WitnessSource::ExhaustiveSearch), "ExhaustiveSearch");
}

}  // namespace
}  // namespace twistgenus
