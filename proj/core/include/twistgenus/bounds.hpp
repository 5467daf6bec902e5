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

// Lower bounds for the stable 4-genus from Casson-Gordon signature sums over
// the one-dimensional subspaces of H^1(X_d; F_p), specialized to twist knots,
// together with the upper-bound verdict of the subgroup search.

#ifndef TWISTGENUS_BOUNDS_HPP_
#define TWISTGENUS_BOUNDS_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "twistgenus/arith.hpp"
#include "twistgenus/seifert.hpp"
#include "twistgenus/subgroup.hpp"

namespace twistgenus {

// Whether (p - 1)/2 is even or odd; selects the branch of the closed forms.
enum class ParityCase { EvenHalf, OddHalf };

struct SubspaceSum {
  std::uint64_t p = 0;
  std::uint64_t q = 0;  // (4n+1)/p
  ExactRational L;
  ParityCase parity_case = ParityCase::EvenHalf;
};

// Sum of tau_twist(knot, s) over s in {0, q, 2q, ..., (p-1)q}, q = (4n+1)/p.
// Throws NotAPrime or NotADivisor.
ExactRational subspace_sum_direct(const TwistKnot& knot, std::uint64_t p);

// The same sum in closed form:
//   (1/6)(p-1)(pq+q-6)      if (p-1)/2 is even
//   (1/6)(p^2 q-6p-q-6)     if (p-1)/2 is odd
// Throws NotAPrime (also for p = 2) or NotADivisor.
SubspaceSum subspace_sum_closed(const TwistKnot& knot, std::uint64_t p);

// Inputs of the general bound g_st(K) >= t L / (4 d (p-1) + 2 (d-1) L).
// t = dim H^1(X_d; F_p), d the cover degree, L = min_j |L_j|. When H^1 has
// several one-dimensional subspaces the caller must check that the L_j share
// a sign before passing |L|; twist knots have t = 1 and a single L_1.
struct GenericBoundInput {
  std::int64_t t = 1;
  std::int64_t d = 2;
  std::int64_t p = 3;
  ExactRational L;
};

// Returns 0 when L = 0. Throws std::invalid_argument for t < 1, d < 2, p < 2
// or L < 0.
ExactRational main_theorem_bound(const GenericBoundInput& input);

// n_copies * main_theorem_bound(input), a lower bound for g_4(n_copies K).
ExactRational g4_nK_bound(const GenericBoundInput& input, std::int64_t n_copies);

// Closed form of main_theorem_bound for twist knots (t = 1, d = 2), clamped at
// 0 from below:
//   (pq+q-6) / (2(pq+q+18))                  if (p-1)/2 is even
//   (p^2 q-6p-q-6) / (2(p^2 q+18p-q-30))     if (p-1)/2 is odd
ExactRational corollary_bound(const TwistKnot& knot, std::uint64_t p);

// 1/2 - 6/(2n+7); negative (vacuous) for n < 5.
ExactRational weakened_bound(const TwistKnot& knot);

// n_copies/2 * max |sigma_{s/m}(A)| over 0 < s < m, skipping angles that
// raise NearSingular. Zero for every twist knot.
ExactRational murasugi_tristram_bound(const SeifertMatrix& A, std::int64_t m,
                                      std::int64_t n_copies = 1);

// True when the generic Levine-Tristram signature of the twist knot vanishes
// at the sampled angles s/(4n+1) (all of them for 4n+1 <= 4001).
bool twist_knot_lt_signatures_vanish(const TwistKnot& knot);

struct PrimeBound {
  std::uint64_t p = 0;
  ExactRational L;
  ExactRational lower_bound;
};

struct BoundReport {
  TwistKnot knot{0};
  Factorization factorization;
  std::vector<PrimeBound> per_prime;  // ascending p
  ExactRational best_lower;
  ExactRational weakened_lower;
  bool upper_half = false;
  std::optional<WitnessSource> upper_source;
  std::optional<SubgroupWitness> witness;
  bool lt_signatures_vanish = true;
  std::vector<std::string> notes;

  // The Table-4 entry for p: the bound if p | 4n+1, else 0.
  ExactRational lower_bound_for_prime(std::uint64_t p) const;
};

BoundReport bound_report(const TwistKnot& knot,
                         std::int64_t coeff_bound = kDefaultSearchBound);

}  // namespace twistgenus

#endif  // TWISTGENUS_BOUNDS_HPP_
