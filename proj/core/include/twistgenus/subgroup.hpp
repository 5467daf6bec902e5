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

// Rank-two subgroups of H_1(2 Sigma) on which the doubled Seifert form of a
// twist knot has Gram matrix [[0, 1], [0, c]]. Such a subgroup certifies
// g_4(2 K_n) <= 1 and hence g_st(K_n) <= 1/2.
//
// Witnesses are normalized so that v is the isotropic vector:
//   v^T A v = 0,  v^T A w = 1,  w^T A v = 0,  w^T A w = c
// with A = P (+) P and P = [[1, 1], [0, -n]].

#ifndef TWISTGENUS_SUBGROUP_HPP_
#define TWISTGENUS_SUBGROUP_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "twistgenus/seifert.hpp"

namespace twistgenus {

enum class WitnessSource { PellConstruction, ExhaustiveSearch };

std::string_view to_string(WitnessSource source);

struct SubgroupWitness {
  IntVector v;
  IntVector w;
  BigInt c;
  WitnessSource source = WitnessSource::PellConstruction;
};

inline constexpr std::int64_t kDefaultSearchBound = 20;

// pell_convention(knot) (+) pell_convention(knot).
SeifertMatrix doubled_pell_form(const TwistKnot& knot);

// Returns c = w^T A w if (v, w) satisfy the three fixed Gram conditions
// against `doubled` and are linearly independent; nullopt otherwise.
std::optional<BigInt> witness_gram_entry(const SeifertMatrix& doubled,
                                         const IntVector& v, const IntVector& w);

// From the fundamental solution (xb, yb) of xb^2 - (4n+1) yb^2 = -1:
// v = (1, 0, xb - yb, 2 yb), w = (0, 1, 0, 0), c = -n. Absent when the
// negative Pell equation has no solution (including square 4n+1).
std::optional<SubgroupWitness> pell_construction(const TwistKnot& knot);

// Scans primitive isotropic v in [-B, B]^4 in lexicographic order; for the
// first v admitting an integer w in the same box with v^T A w = 1 and
// w^T A v = 0, returns the lexicographically smallest such w. Absence only
// means nothing was found inside the box. Throws std::invalid_argument for
// coeff_bound < 1.
std::optional<SubgroupWitness> exhaustive_search(const TwistKnot& knot,
                                                 std::int64_t coeff_bound);

struct UpperBoundVerdict {
  // g_st(K_n) <= 1/2 certified. False means "not certified", not "> 1/2".
  bool certified = false;
  std::optional<SubgroupWitness> witness;
  std::string note;
};

UpperBoundVerdict upper_bound_verdict(const TwistKnot& knot,
                                      std::int64_t coeff_bound = kDefaultSearchBound);

}  // namespace twistgenus

#endif  // TWISTGENUS_SUBGROUP_HPP_
