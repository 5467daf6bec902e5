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

#ifndef TWISTGENUS_ERRORS_HPP_
#define TWISTGENUS_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace twistgenus {

// Base class of every computation error raised by the library. The CLI maps
// these to exit code 2.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// sqrt(D) is rational, so its continued fraction has no period.
class PerfectSquare : public Error {
 public:
  using Error::Error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

// Angle index s outside 0 < s < m.
class AngleOutOfRange : public Error {
 public:
  using Error::Error;
};

// Some eigenvalue of the Levine-Tristram Hermitian matrix is below the
// tolerance; omega is too close to a root of the Alexander polynomial.
class NearSingular : public Error {
 public:
  using Error::Error;
};

// A + A^T has a zero eigenvalue.
class Degenerate : public Error {
 public:
  using Error::Error;
};

// Gilmer's formula is only proven for characters of prime-power order.
class NonPrimePowerOrder : public Error {
 public:
  using Error::Error;
};

class IndexOutOfRange : public Error {
 public:
  using Error::Error;
};

class NotADivisor : public Error {
 public:
  using Error::Error;
};

class NotAPrime : public Error {
 public:
  using Error::Error;
};

// Matrix whose antisymmetrization A - A^T is not unimodular.
class InvalidSeifertMatrix : public Error {
 public:
  using Error::Error;
};

}  // namespace twistgenus

#endif  // TWISTGENUS_ERRORS_HPP_
