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

// Text, CSV and JSON renderings of the library's result types. Exact values
// are always carried as "p/q" strings; decimals are display only.

#ifndef TWISTGENUS_SERIALIZE_HPP_
#define TWISTGENUS_SERIALIZE_HPP_

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "twistgenus/bounds.hpp"
#include "twistgenus/cg.hpp"
#include "twistgenus/pell.hpp"
#include "twistgenus/seifert.hpp"
#include "twistgenus/subgroup.hpp"

namespace twistgenus {

inline constexpr int kDefaultPrecision = 2;

// "element signature" header, then one "s value" line per element.
std::string tau_table_text(const TauTable& table, int precision = kDefaultPrecision);
// Header "element,signature_exact,signature_decimal".
std::string tau_table_csv(const TauTable& table, int precision = kDefaultPrecision);
// Array of {"element", "signature_exact", "signature_decimal", "certified"}.
std::string tau_table_json(const TauTable& table, int precision = kDefaultPrecision);

std::string witness_json(const SubgroupWitness& witness);
std::string bound_report_json(const BoundReport& report);
std::string bound_report_text(const BoundReport& report);

// Table-4 layout: one row per knot, one column per prime (the union of all
// prime divisors, ascending), entries 0 where p does not divide 4n+1, and a
// final "4n+1" column with the factorization.
std::string table4_csv(std::span<const BoundReport> reports);
std::string table4_text(std::span<const BoundReport> reports);

std::string pell_text(std::uint64_t D);
std::string pell_json(std::uint64_t D);

// Seifert matrices as JSON integer arrays, e.g. [[-1,1],[0,6]].
std::string seifert_matrix_json(const SeifertMatrix& A);
// Throws std::invalid_argument on malformed JSON; Seifert-matrix errors
// propagate from SeifertMatrix::from_rows.
SeifertMatrix parse_seifert_matrix_json(const std::string& text);

// Integers that fit in int64 become JSON numbers, larger ones strings.
std::string int_vector_json(const IntVector& v);

}  // namespace twistgenus

#endif  // TWISTGENUS_SERIALIZE_HPP_
