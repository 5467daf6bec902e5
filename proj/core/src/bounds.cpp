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

#include "twistgenus/bounds.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>
#include <string>

#include "twistgenus/cg.hpp"
#include "twistgenus/errors.hpp"
#include "twistgenus/signatures.hpp"

namespace twistgenus {

namespace {

// q = (4n+1)/p after checking that p is a prime divisor.
std::uint64_t cofactor(const TwistKnot& knot, std::uint64_t p) {
  if (!is_prime(p)) throw NotAPrime(std::to_string(p) + " is not prime");
  const auto m = static_cast<std::uint64_t>(knot.m());
  if (m % p != 0) {
    throw NotADivisor(std::to_string(p) + " does not divide 4n+1 = " +
                      std::to_string(m));
  }
  return m / p;
}

ParityCase parity_of(std::uint64_t p) {
  return ((p - 1) / 2) % 2 == 0 ? ParityCase::EvenHalf : ParityCase::OddHalf;
}

BigInt big(std::uint64_t x) { return BigInt(static_cast<unsigned long>(x)); }

}  // namespace

ExactRational subspace_sum_direct(const TwistKnot& knot, std::uint64_t p) {
  const std::uint64_t q = cofactor(knot, p);
  ExactRational sum;
  for (std::uint64_t k = 0; k < p; ++k) {
    sum += tau_twist(knot, static_cast<std::int64_t>(k * q));
  }
  return sum;
}

SubspaceSum subspace_sum_closed(const TwistKnot& knot, std::uint64_t p) {
  if (p == 2) throw NotAPrime("p = 2 never divides 4n+1");
  const std::uint64_t q = cofactor(knot, p);
  const BigInt P = big(p);
  const BigInt Q = big(q);
  SubspaceSum out{p, q, {}, parity_of(p)};
  if (out.parity_case == ParityCase::EvenHalf) {
    out.L = ExactRational((P - 1) * (P * Q + Q - 6), BigInt(6));
  } else {
    out.L = ExactRational(P * P * Q - 6 * P - Q - 6, BigInt(6));
  }
  return out;
}

ExactRational main_theorem_bound(const GenericBoundInput& in) {
  if (in.t < 1 || in.d < 2 || in.p < 2) {
    throw std::invalid_argument("main_theorem_bound: need t >= 1, d >= 2, p >= 2");
  }
  if (in.L.sign() < 0) {
    throw std::invalid_argument("main_theorem_bound: pass |L| (L must be >= 0)");
  }
  if (in.L.sign() == 0) return ExactRational(0);
  const ExactRational t(in.t);
  const ExactRational d(in.d);
  const ExactRational p(in.p);
  return t * in.L / (4 * d * (p - 1) + 2 * (d - 1) * in.L);
}

ExactRational g4_nK_bound(const GenericBoundInput& input, std::int64_t n_copies) {
  if (n_copies < 1) throw std::invalid_argument("g4_nK_bound: n_copies must be >= 1");
  return ExactRational(n_copies) * main_theorem_bound(input);
}

ExactRational corollary_bound(const TwistKnot& knot, std::uint64_t p) {
  if (p == 2) throw NotAPrime("p = 2 never divides 4n+1");
  const std::uint64_t q = cofactor(knot, p);
  const BigInt P = big(p);
  const BigInt Q = big(q);
  ExactRational value;
  if (parity_of(p) == ParityCase::EvenHalf) {
    value = ExactRational(P * Q + Q - 6, 2 * (P * Q + Q + 18));
  } else {
    value = ExactRational(P * P * Q - 6 * P - Q - 6,
                          2 * (P * P * Q + 18 * P - Q - 30));
  }
  return max(value, ExactRational(0));
}

ExactRational weakened_bound(const TwistKnot& knot) {
  return ExactRational(BigInt(1), BigInt(2)) -
         ExactRational(BigInt(6), BigInt(2 * knot.n() + 7));
}

ExactRational murasugi_tristram_bound(const SeifertMatrix& A, std::int64_t m,
                                      std::int64_t n_copies) {
  if (m < 2) return ExactRational(0);
  int best = 0;
  for (std::int64_t s = 1; s < m; ++s) {
    try {
      best = std::max(best, std::abs(lt_signature_generic(A, RationalAngle(s, m))));
    } catch (const NearSingular&) {
      // skip angles at Alexander roots
    }
  }
  return ExactRational(BigInt(static_cast<long>(n_copies) * best), BigInt(2));
}

bool twist_knot_lt_signatures_vanish(const TwistKnot& knot) {
  constexpr std::int64_t kSamples = 4000;
  const std::int64_t m = knot.m();
  if (m < 2) return true;
  const SeifertMatrix A = seifert_matrix_tau_convention(knot);
  auto vanishes_at = [&](std::int64_t s) {
    try {
      return lt_signature_generic(A, RationalAngle(s, m)) == 0;
    } catch (const NearSingular&) {
      return false;
    }
  };
  if (m - 1 <= kSamples) {
    for (std::int64_t s = 1; s < m; ++s) {
      if (!vanishes_at(s)) return false;
    }
    return true;
  }
  for (std::int64_t i = 0; i < kSamples; ++i) {
    const auto s = 1 + static_cast<std::int64_t>(
                           static_cast<__int128>(i) * (m - 2) / (kSamples - 1));
    if (!vanishes_at(s)) return false;
  }
  return true;
}

ExactRational BoundReport::lower_bound_for_prime(std::uint64_t p) const {
  for (const auto& entry : per_prime) {
    if (entry.p == p) return entry.lower_bound;
  }
  return ExactRational(0);
}

BoundReport bound_report(const TwistKnot& knot, std::int64_t coeff_bound) {
  BoundReport report;
  report.knot = knot;
  report.factorization = factorize(static_cast<std::uint64_t>(knot.m()));

  for (const auto& [p, exponent] : report.factorization.factors) {
    const SubspaceSum sum = subspace_sum_closed(knot, p);
    const ExactRational lower = corollary_bound(knot, p);
    const ExactRational via_theorem = main_theorem_bound(
        GenericBoundInput{1, 2, static_cast<std::int64_t>(p), sum.L});
    if (lower != via_theorem) {
      throw std::logic_error("closed-form bound " + lower.to_string() +
                             " disagrees with the general bound " +
                             via_theorem.to_string() + " at p = " +
                             std::to_string(p));
    }
    report.per_prime.push_back(PrimeBound{p, sum.L, lower});
    report.best_lower = max(report.best_lower, lower);
  }
  report.weakened_lower = weakened_bound(knot);
  report.lt_signatures_vanish = twist_knot_lt_signatures_vanish(knot);

  const UpperBoundVerdict verdict = upper_bound_verdict(knot, coeff_bound);
  report.upper_half = verdict.certified;
  if (verdict.witness) {
    report.upper_source = verdict.witness->source;
    report.witness = verdict.witness;
  }

  switch (knot.n()) {
    case 0:
      report.notes.emplace_back("unknot: slice, g_st = 0");
      break;
    case 1:
      report.notes.emplace_back("figure-eight: order 2 in the concordance group, g_st = 0");
      break;
    case 2:
      report.notes.emplace_back("slice (Stevedore), g_st = 0");
      break;
    default:
      break;
  }
  if (knot.n() <= 2) {
    report.notes.emplace_back("torsion in the concordance group <=> g_st = 0");
  }
  if (report.lt_signatures_vanish) {
    report.notes.emplace_back(
        "Levine-Tristram signatures vanish; the Murasugi-Tristram bound is trivial");
  }
  report.notes.push_back(verdict.note);
  return report;
}

}  // namespace twistgenus
