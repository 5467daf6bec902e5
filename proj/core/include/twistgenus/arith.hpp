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

// Exact arithmetic used by every other module: arbitrary-precision rationals,
// integer ceilings and 64-bit prime factorization.

#ifndef TWISTGENUS_ARITH_HPP_
#define TWISTGENUS_ARITH_HPP_

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace twistgenus {

using BigInt = mpz_class;

// An exact rational number, always stored in lowest terms with a positive
// denominator. Values are immutable once built.
class ExactRational {
 public:
  ExactRational() = default;
  ExactRational(long value);  // NOLINT(google-explicit-constructor)
  ExactRational(int value) : ExactRational(static_cast<long>(value)) {}  // NOLINT
  explicit ExactRational(const BigInt& value);
  // Throws std::domain_error if denominator == 0.
  ExactRational(const BigInt& numerator, const BigInt& denominator);

  // Parses "p/q" or "p" (optional leading '-'). Throws std::invalid_argument.
  static ExactRational parse(std::string_view text);

  BigInt numerator() const { return value_.get_num(); }
  BigInt denominator() const { return value_.get_den(); }

  bool is_integer() const { return value_.get_den() == 1; }
  int sign() const { return sgn(value_); }
  double to_double() const { return value_.get_d(); }

  // Canonical "p/q", or "p" when q == 1.
  std::string to_string() const;

  // Fixed-point rendering rounded half away from zero at `precision` places.
  // With trim = true trailing zeros (and a bare '.') are dropped, so 4 renders
  // as "4" and -4/25 as "-0.16". A value that rounds to zero never carries a
  // minus sign.
  std::string to_decimal(int precision, bool trim = true) const;

  ExactRational operator-() const;
  friend ExactRational operator+(const ExactRational& a, const ExactRational& b);
  friend ExactRational operator-(const ExactRational& a, const ExactRational& b);
  friend ExactRational operator*(const ExactRational& a, const ExactRational& b);
  // Throws std::domain_error on division by zero.
  friend ExactRational operator/(const ExactRational& a, const ExactRational& b);

  ExactRational& operator+=(const ExactRational& o) { return *this = *this + o; }
  ExactRational& operator-=(const ExactRational& o) { return *this = *this - o; }
  ExactRational& operator*=(const ExactRational& o) { return *this = *this * o; }
  ExactRational& operator/=(const ExactRational& o) { return *this = *this / o; }

  friend bool operator==(const ExactRational& a, const ExactRational& b) {
    return a.value_ == b.value_;
  }
  friend std::strong_ordering operator<=>(const ExactRational& a,
                                          const ExactRational& b) {
    return cmp(a.value_, b.value_) <=> 0;
  }

  friend std::ostream& operator<<(std::ostream& os, const ExactRational& r) {
    return os << r.to_string();
  }

 private:
  mpq_class value_{0};
};

ExactRational abs(const ExactRational& r);
ExactRational max(const ExactRational& a, const ExactRational& b);

struct PrimePower {
  std::uint64_t prime = 0;
  unsigned exponent = 0;

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

// Complete prime factorization of a positive integer, primes ascending.
struct Factorization {
  std::uint64_t value = 1;
  std::vector<PrimePower> factors;

  bool divides_by(std::uint64_t p) const;
  bool is_prime_power() const { return factors.size() <= 1; }
  // "3^2*89"; "1" for the empty product.
  std::string to_string() const;
};

// Throws std::invalid_argument for value == 0.
Factorization factorize(std::uint64_t value);

// Deterministic for all 64-bit inputs.
bool is_prime(std::uint64_t value);

// True for p^k with p prime and k >= 0 (so 1 counts).
bool is_prime_power(std::uint64_t value);

// ceil(a / b) for b > 0; throws std::domain_error otherwise.
std::int64_t ceil_div(std::int64_t a, std::int64_t b);
BigInt ceil_div(const BigInt& a, const BigInt& b);

// floor(sqrt(value)) exactly.
std::uint64_t isqrt(std::uint64_t value);
bool is_perfect_square(std::uint64_t value);

}  // namespace twistgenus

#endif  // TWISTGENUS_ARITH_HPP_
