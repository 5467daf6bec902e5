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

// Command-line front end: subcommand implementations and the survey file
// format. main() is a thin wrapper around run().

#ifndef TWISTGENUS_TOOLS_CLI_COMMANDS_HPP_
#define TWISTGENUS_TOOLS_CLI_COMMANDS_HPP_

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "twistgenus/arith.hpp"
#include "twistgenus/bounds.hpp"

namespace twistgenus::cli {

enum ExitCode : int { kOk = 0, kUsage = 1, kComputation = 2, kIo = 3 };

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Format { Table, Csv, Json };

// Throws UsageError for anything but "table", "csv", "json".
Format parse_format(const std::string& name);

struct SurveyRow {
  std::int64_t n = 0;
  std::int64_t m = 1;
  std::string factorization;
  std::vector<PrimeBound> per_prime;
  ExactRational best_lower;
  ExactRational weakened_lower;
  bool upper_half = false;
  std::string upper_source;  // "PellConstruction", "ExhaustiveSearch" or "none"

  friend bool operator==(const SurveyRow& a, const SurveyRow& b);
};

SurveyRow make_survey_row(const BoundReport& report);

// Rows for n_start..n_end inclusive, ascending n. Rows are computed on worker
// threads; the result order does not depend on scheduling.
std::vector<SurveyRow> compute_survey(std::int64_t n_start, std::int64_t n_end,
                                      std::int64_t search_bound,
                                      unsigned threads = 0);

// CSV: "#" metadata line, header, one row per n. per_prime cells are
// "p:L:bound" joined by ';'.
std::string survey_csv(const std::vector<SurveyRow>& rows, const std::string& meta);
std::string survey_json(const std::vector<SurveyRow>& rows, const std::string& meta);
// Throw std::invalid_argument on malformed input.
std::vector<SurveyRow> parse_survey_csv(const std::string& text);
std::vector<SurveyRow> parse_survey_json(const std::string& text);

// Writes through a temporary sibling file and renames it into place.
// Throws IoError naming the path.
void write_atomically(const std::filesystem::path& path, const std::string& content);

std::string cmd_tau(std::int64_t n, Format format, int precision);
std::string cmd_bound(const std::vector<std::int64_t>& ns,
                      std::optional<std::uint64_t> prime,
                      std::int64_t search_bound, Format format);
// Returns the rendered survey; writes it to out_path when given.
std::string cmd_survey(std::int64_t n_start, std::int64_t n_end,
                       const std::optional<std::filesystem::path>& out_path,
                       Format format, std::int64_t search_bound);
std::string cmd_pell(std::int64_t D, Format format);
std::string cmd_search(std::int64_t n, std::int64_t search_bound, Format format);
std::string cmd_signature(const std::string& matrix_json, std::int64_t modulus,
                          Format format);

// Parses argv-style arguments (args[0] is the program name), dispatches, and
// returns an ExitCode. Errors go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace twistgenus::cli

#endif  // TWISTGENUS_TOOLS_CLI_COMMANDS_HPP_
