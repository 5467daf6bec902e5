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

#include <array>
#include <numeric>
#include <stdexcept>
#include <type_traits>

#include "twistgenus/pell.hpp"

namespace twistgenus {

std::string_view to_string(WitnessSource source) {
  switch (source) {
    case WitnessSource::PellConstruction:
      return "PellConstruction";
    case WitnessSource::ExhaustiveSearch:
      return "ExhaustiveSearch";
  }
  return "unknown";
}

SeifertMatrix doubled_pell_form(const TwistKnot& knot) {
  const SeifertMatrix single = seifert_matrix_pell_convention(knot);
  return block_sum(single, single);
}

std::optional<BigInt> witness_gram_entry(const SeifertMatrix& doubled,
                                         const IntVector& v, const IntVector& w) {
  if (evaluate_form(doubled, v, v) != 0) return std::nullopt;
  if (evaluate_form(doubled, v, w) != 1) return std::nullopt;
  if (evaluate_form(doubled, w, v) != 0) return std::nullopt;
  bool independent = false;
  for (std::size_t i = 0; i < v.size() && !independent; ++i) {
    for (std::size_t j = i + 1; j < v.size(); ++j) {
      if (v[i] * w[j] - v[j] * w[i] != 0) {
        independent = true;
        break;
      }
    }
  }
  if (!independent) return std::nullopt;
  return evaluate_form(doubled, w, w);
}

std::optional<SubgroupWitness> pell_construction(const TwistKnot& knot) {
  const auto D = static_cast<std::uint64_t>(knot.m());
  const PellSolution pell = solve_negative_pell(D);
  if (!pell.solvable) return std::nullopt;
  const BigInt& xb = pell.solution->x;
  const BigInt& yb = pell.solution->y;

  SubgroupWitness witness;
  witness.v = IntVector{BigInt(1), BigInt(0), BigInt(xb - yb), BigInt(2 * yb)};
  witness.w = make_int_vector({0, 1, 0, 0});
  witness.c = BigInt(-static_cast<long>(knot.n()));
  witness.source = WitnessSource::PellConstruction;
  return witness;
}

namespace {

using i128 = __int128;

// Exact integer square root of a non-negative value, if it is a square.
std::optional<i128> exact_sqrt(i128 value) {
  if (value < 0) return std::nullopt;
  BigInt big;
  // mpz has no direct __int128 import; split into two 64-bit halves.
  const auto hi = static_cast<std::uint64_t>(value >> 64);
  const auto lo = static_cast<std::uint64_t>(value);
  big = BigInt(static_cast<unsigned long>(hi));
  big <<= 64;
  big += BigInt(static_cast<unsigned long>(lo));
  if (mpz_perfect_square_p(big.get_mpz_t()) == 0) return std::nullopt;
  BigInt root;
  mpz_sqrt(root.get_mpz_t(), big.get_mpz_t());
  return static_cast<i128>(root.get_ui());
}

std::optional<BigInt> exact_sqrt(const BigInt& value) {
  if (value < 0 || mpz_perfect_square_p(value.get_mpz_t()) == 0) return std::nullopt;
  BigInt root;
  mpz_sqrt(root.get_mpz_t(), value.get_mpz_t());
  return root;
}

template <typename I>
bool divides(const I& d, const I& value) {
  return value % d == 0;
}

template <typename I>
I gcd_abs(I a, I b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    I t = a % b;
    a = b;
    b = t;
  }
  return a;
}

template <typename I>
BigInt to_big(const I& value) {
  if constexpr (std::is_same_v<I, BigInt>) {
    return value;
  } else {
    return BigInt(static_cast<long>(value));
  }
}

template <typename I>
class BoxSearch {
 public:
  BoxSearch(std::int64_t n, std::int64_t bound) : n_(I(static_cast<long>(n))), bound_(bound) {}

  std::optional<std::pair<std::array<I, 4>, std::array<I, 4>>> run() const {
    const I B(static_cast<long>(bound_));
    std::array<I, 4> v;
    for (v[0] = -B; v[0] <= B; v[0] += 1) {
      for (v[1] = -B; v[1] <= B; v[1] += 1) {
        const I q12 = v[0] * v[0] + v[0] * v[1] - n_ * v[1] * v[1];
        for (v[2] = -B; v[2] <= B; v[2] += 1) {
          for (const I& v4 : fourth_coordinates(q12, v[2], B)) {
            v[3] = v4;
            if (gcd_abs(gcd_abs(v[0], v[1]), gcd_abs(v[2], v[3])) != 1) continue;
            if (auto w = solve_partner(v, B)) return std::make_pair(v, *w);
          }
        }
      }
    }
    return std::nullopt;
  }

 private:
  // All v4 in [-B, B], ascending, with Q(v3, v4) = -q12 where
  // Q(x, y) = x^2 + x y - n y^2.
  std::vector<I> fourth_coordinates(const I& q12, const I& v3, const I& B) const {
    std::vector<I> out;
    const I rhs = v3 * v3 + q12;  // n v4^2 - v3 v4 - rhs = 0
    if (n_ == 0) {
      if (v3 == 0) {
        if (rhs == 0) {
          for (I t = -B; t <= B; t += 1) out.push_back(t);
        }
      } else if (divides(v3, rhs)) {
        const I t = -rhs / v3;
        if (t >= -B && t <= B) out.push_back(t);
      }
      return out;
    }
    const I disc = v3 * v3 + 4 * n_ * rhs;
    const auto root = exact_sqrt(disc);
    if (!root) return out;
    const I two_n = 2 * n_;
    for (const I& num : {I(v3 - *root), I(v3 + *root)}) {
      if (!divides(two_n, num)) continue;
      const I t = num / two_n;
      if (t < -B || t > B) continue;
      if (!out.empty() && out.back() == t) continue;
      out.push_back(t);
    }
    return out;
  }

  // Lexicographically smallest w in [-B, B]^4 with a.w = 1 and b.w = 0, where
  // a = A^T v and b = A v for the doubled form A.
  std::optional<std::array<I, 4>> solve_partner(const std::array<I, 4>& v,
                                                const I& B) const {
    const std::array<I, 4> a = {v[0], v[0] - n_ * v[1], v[2], v[2] - n_ * v[3]};
    const std::array<I, 4> b = {v[0] + v[1], -n_ * v[1], v[2] + v[3], -n_ * v[3]};

    std::optional<std::array<I, 4>> best;
    auto consider = [&best](const std::array<I, 4>& w) {
      if (!best || w < *best) best = w;
    };

    for (int i = 0; i < 4; ++i) {
      for (int j = i + 1; j < 4; ++j) {
        const I det = a[i] * b[j] - a[j] * b[i];
        if (det == 0) continue;
        std::array<int, 2> free{};
        int f = 0;
        for (int k = 0; k < 4; ++k) {
          if (k != i && k != j) free[f++] = k;
        }
        std::array<I, 4> w;
        for (w[free[0]] = -B; w[free[0]] <= B; w[free[0]] += 1) {
          for (w[free[1]] = -B; w[free[1]] <= B; w[free[1]] += 1) {
            const I r1 = 1 - a[free[0]] * w[free[0]] - a[free[1]] * w[free[1]];
            const I r2 = -(b[free[0]] * w[free[0]] + b[free[1]] * w[free[1]]);
            const I num_i = r1 * b[j] - a[j] * r2;
            const I num_j = a[i] * r2 - b[i] * r1;
            if (!divides(det, num_i) || !divides(det, num_j)) continue;
            w[i] = num_i / det;
            w[j] = num_j / det;
            if (w[i] < -B || w[i] > B || w[j] < -B || w[j] > B) continue;
            consider(w);
          }
        }
        return best;
      }
    }

    // a and b are linearly dependent. If b != 0 then a.w is a multiple of
    // b.w = 0, so a.w = 1 is impossible.
    for (const I& x : b) {
      if (x != 0) return std::nullopt;
    }
    int pivot = -1;
    for (int k = 0; k < 4; ++k) {
      if (a[k] != 0) {
        pivot = k;
        break;
      }
    }
    if (pivot < 0) return std::nullopt;
    std::array<int, 3> free{};
    int f = 0;
    for (int k = 0; k < 4; ++k) {
      if (k != pivot) free[f++] = k;
    }
    std::array<I, 4> w;
    for (w[free[0]] = -B; w[free[0]] <= B; w[free[0]] += 1) {
      for (w[free[1]] = -B; w[free[1]] <= B; w[free[1]] += 1) {
        for (w[free[2]] = -B; w[free[2]] <= B; w[free[2]] += 1) {
          const I rest = 1 - a[free[0]] * w[free[0]] - a[free[1]] * w[free[1]] -
                         a[free[2]] * w[free[2]];
          if (!divides(a[pivot], rest)) continue;
          w[pivot] = rest / a[pivot];
          if (w[pivot] < -B || w[pivot] > B) continue;
          consider(w);
        }
      }
    }
    return best;
  }

  I n_;
  std::int64_t bound_;
};

template <typename I>
std::optional<SubgroupWitness> run_search(const TwistKnot& knot, std::int64_t bound) {
  const auto found = BoxSearch<I>(knot.n(), bound).run();
  if (!found) return std::nullopt;
  SubgroupWitness witness;
  for (const I& x : found->first) witness.v.push_back(to_big(x));
  for (const I& x : found->second) witness.w.push_back(to_big(x));
  witness.source = WitnessSource::ExhaustiveSearch;
  const auto c = witness_gram_entry(doubled_pell_form(knot), witness.v, witness.w);
  if (!c) throw std::logic_error("exhaustive_search produced an invalid witness");
  witness.c = *c;
  return witness;
}

}  // namespace

std::optional<SubgroupWitness> exhaustive_search(const TwistKnot& knot,
                                                 std::int64_t coeff_bound) {
  if (coeff_bound < 1) {
    throw std::invalid_argument("exhaustive_search: coefficient bound must be >= 1");
  }
  // Every intermediate is bounded by roughly 16 n^2 B^4; stay inside 127 bits.
  constexpr std::int64_t kNarrowN = std::int64_t{1} << 40;
  constexpr std::int64_t kNarrowB = std::int64_t{1} << 10;
  if (knot.n() < kNarrowN && coeff_bound < kNarrowB) {
    return run_search<i128>(knot, coeff_bound);
  }
  return run_search<BigInt>(knot, coeff_bound);
}

UpperBoundVerdict upper_bound_verdict(const TwistKnot& knot,
                                      std::int64_t coeff_bound) {
  UpperBoundVerdict verdict;
  if (auto w = pell_construction(knot)) {
    verdict.certified = true;
    verdict.witness = std::move(w);
    verdict.note = "negative Pell equation x^2 - " + std::to_string(knot.m()) +
                   " y^2 = -1 is solvable";
    return verdict;
  }
  if (auto w = exhaustive_search(knot, coeff_bound)) {
    verdict.certified = true;
    verdict.witness = std::move(w);
    verdict.note = "witness found by box search with bound " +
                   std::to_string(coeff_bound);
    return verdict;
  }
  verdict.note = "not certified: no Pell solution and no witness with |coordinates| <= " +
                 std::to_string(coeff_bound) +
                 " (no full characterization known; g_st <= 2/3 always holds)";
  return verdict;
}

}  // namespace twistgenus
