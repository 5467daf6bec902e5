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

#include "twistgenus/arith.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace twistgenus {

ExactRational::ExactRational(long value) : value_(value) {}

ExactRational::ExactRational(const BigInt& value) : value_(value) {}

ExactRational::ExactRational(const BigInt& numerator,
                             const BigInt& denominator) {
  if (denominator == 0) {
    throw std::domain_error("ExactRational: zero denominator");
  }
  value_ = mpq_class(numerator, denominator);
  value_.canonicalize();
}

ExactRational ExactRational::parse(std::string_view text) {
  auto is_integer_token = [](std::string_view s, bool allow_sign) {
    if (!s.empty() && allow_sign && s.front() == '-') s.remove_prefix(1);
    return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) {
      return std::isdigit(c) != 0;
    });
  };
  const auto slash = text.find('/');
  const std::string_view num = text.substr(0, slash);
  if (!is_integer_token(num, true)) {
    throw std::invalid_argument("not a rational: '" + std::string(text) + "'");
  }
  if (slash == std::string_view::npos) {
    return ExactRational(BigInt(std::string(num)));
  }
  const std::string_view den = text.substr(slash + 1);
  if (!is_integer_token(den, false)) {
    throw std::invalid_argument("not a rational: '" + std::string(text) + "'");
  }
  return ExactRational(BigInt(std::string(num)), BigInt(std::string(den)));
}

std::string ExactRational::to_string() const {
  if (value_.get_den() == 1) return value_.get_num().get_str();
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

std::string ExactRational::to_decimal(int precision, bool trim) const {
  if (precision < 0) {
    throw std::invalid_argument("to_decimal: negative precision");
  }
  BigInt scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(precision));
  const BigInt num = abs(value_.get_num()) * scale;
  const BigInt& den = value_.get_den();
  // round half away from zero: floor((2*num + den) / (2*den))
  BigInt scaled = (2 * num + den) / (2 * den);

  std::string digits = scaled.get_str();
  if (precision > 0) {
    if (digits.size() <= static_cast<std::size_t>(precision)) {
      digits.insert(0, static_cast<std::size_t>(precision) + 1 - digits.size(),
                    '0');
    }
    digits.insert(digits.size() - static_cast<std::size_t>(precision), ".");
    if (trim) {
      while (digits.back() == '0') digits.pop_back();
      if (digits.back() == '.') digits.pop_back();
    }
  }
  if (scaled != 0 && sgn(value_) < 0) digits.insert(0, "-");
  return digits;
}

ExactRational ExactRational::operator-() const {
  ExactRational r;
  r.value_ = -value_;
  return r;
}

ExactRational operator+(const ExactRational& a, const ExactRational& b) {
  ExactRational r;
  r.value_ = a.value_ + b.value_;
  return r;
}

ExactRational operator-(const ExactRational& a, const ExactRational& b) {
  ExactRational r;
  r.value_ = a.value_ - b.value_;
  return r;
}

ExactRational operator*(const ExactRational& a, const ExactRational& b) {
  ExactRational r;
  r.value_ = a.value_ * b.value_;
  return r;
}

ExactRational operator/(const ExactRational& a, const ExactRational& b) {
  if (b.value_ == 0) throw std::domain_error("ExactRational: division by zero");
  ExactRational r;
  r.value_ = a.value_ / b.value_;
  return r;
}

ExactRational abs(const ExactRational& r) { return r.sign() < 0 ? -r : r; }

ExactRational max(const ExactRational& a, const ExactRational& b) {
  return a < b ? b : a;
}

// ---------------------------------------------------------------------------
// Integer helpers

std::int64_t ceil_div(std::int64_t a, std::int64_t b) {
  if (b <= 0) throw std::domain_error("ceil_div: divisor must be positive");
  const std::int64_t q = a / b;
  return (a % b > 0) ? q + 1 : q;
}

BigInt ceil_div(const BigInt& a, const BigInt& b) {
  if (b <= 0) throw std::domain_error("ceil_div: divisor must be positive");
  BigInt q;
  mpz_cdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

std::uint64_t isqrt(std::uint64_t value) {
  auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<long double>(value)));
  while (r > 0 && static_cast<unsigned __int128>(r) * r > value) --r;
  while (static_cast<unsigned __int128>(r + 1) * (r + 1) <= value) ++r;
  return r;
}

bool is_perfect_square(std::uint64_t value) {
  const std::uint64_t r = isqrt(value);
  return r * r == value;
}

// ---------------------------------------------------------------------------
// Primality and factorization

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

constexpr u64 kTrialLimit = 1'000'000;

u64 mul_mod(u64 a, u64 b, u64 m) {
  return static_cast<u64>(static_cast<u128>(a) * b % m);
}

u64 pow_mod(u64 base, u64 exp, u64 m) {
  u64 result = 1 % m;
  base %= m;
  while (exp > 0) {
    if (exp & 1U) result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    exp >>= 1U;
  }
  return result;
}

bool miller_rabin(u64 n) {
  if (n < 2) return false;
  for (u64 p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL,
                29ULL, 31ULL, 37ULL}) {
    if (n % p == 0) return n == p;
  }
  u64 d = n - 1;
  unsigned r = 0;
  while ((d & 1U) == 0) {
    d >>= 1U;
    ++r;
  }
  // These bases are deterministic for every n < 3.3e24.
  for (u64 a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL,
                29ULL, 31ULL, 37ULL}) {
    u64 x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (unsigned i = 1; i < r; ++i) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

// Brent's variant of Pollard's rho. n must be odd and composite.
u64 pollard_brent(u64 n) {
  for (u64 c = 1;; ++c) {
    u64 y = 2;
    u64 x = 2;
    u64 q = 1;
    u64 g = 1;
    u64 ys = 2;
    const u64 block = 128;
    auto f = [&](u64 v) { return (mul_mod(v, v, n) + c) % n; };
    for (u64 r = 1; g == 1; r <<= 1U) {
      x = y;
      for (u64 i = 0; i < r; ++i) y = f(y);
      for (u64 k = 0; k < r && g == 1; k += block) {
        ys = y;
        for (u64 i = 0; i < std::min(block, r - k); ++i) {
          y = f(y);
          q = mul_mod(q, x > y ? x - y : y - x, n);
        }
        g = std::gcd(q, n);
      }
    }
    if (g == n) {
      do {
        ys = f(ys);
        g = std::gcd(x > ys ? x - ys : ys - x, n);
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

void split_large(u64 n, std::vector<u64>& primes) {
  if (n == 1) return;
  if (miller_rabin(n)) {
    primes.push_back(n);
    return;
  }
  const u64 d = pollard_brent(n);
  split_large(d, primes);
  split_large(n / d, primes);
}

}  // namespace

bool is_prime(std::uint64_t value) { return miller_rabin(value); }

bool is_prime_power(std::uint64_t value) {
  if (value == 0) return false;
  return factorize(value).is_prime_power();
}

Factorization factorize(std::uint64_t value) {
  if (value == 0) throw std::invalid_argument("factorize: value must be >= 1");
  Factorization result;
  result.value = value;
  u64 rest = value;

  auto push = [&result](u64 p, unsigned e) {
    result.factors.push_back(PrimePower{p, e});
  };
  for (u64 p = 2; p <= kTrialLimit && p * p <= rest; p += (p == 2 ? 1 : 2)) {
    if (rest % p != 0) continue;
    unsigned e = 0;
    while (rest % p == 0) {
      rest /= p;
      ++e;
    }
    push(p, e);
  }
  if (rest == 1) return result;
  if (rest <= kTrialLimit * kTrialLimit || miller_rabin(rest)) {
    // Either trial division exhausted sqrt(rest), or rest is prime.
    push(rest, 1);
    return result;
  }

  std::vector<u64> primes;
  split_large(rest, primes);
  std::sort(primes.begin(), primes.end());
  for (std::size_t i = 0; i < primes.size();) {
    std::size_t j = i;
    while (j < primes.size() && primes[j] == primes[i]) ++j;
    push(primes[i], static_cast<unsigned>(j - i));
    i = j;
  }
  return result;
}

bool Factorization::divides_by(std::uint64_t p) const {
  return std::any_of(factors.begin(), factors.end(),
                     [p](const PrimePower& f) { return f.prime == p; });
}

std::string Factorization::to_string() const {
  if (factors.empty()) return "1";
  std::string out;
  for (const auto& f : factors) {
    if (!out.empty()) out += "*";
    out += std::to_string(f.prime);
    if (f.exponent > 1) out += "^" + std::to_string(f.exponent);
  }
  return out;
}

}  // namespace twistgenus
