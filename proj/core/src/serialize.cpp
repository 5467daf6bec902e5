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

#include "twistgenus/serialize.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <iomanip>
#include <limits>
#include <set>
#include <sstream>
#include <stdexcept>

#include "twistgenus/errors.hpp"

namespace twistgenus {

using nlohmann::json;

namespace {

json big_to_json(const BigInt& x) {
  if (x.fits_slong_p()) return x.get_si();
  return x.get_str();
}

json vector_to_json(const IntVector& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(big_to_json(x));
  return out;
}

json witness_to_json(const SubgroupWitness& w) {
  return json{{"v", vector_to_json(w.v)},
              {"w", vector_to_json(w.w)},
              {"c", big_to_json(w.c)},
              {"source", std::string(to_string(w.source))}};
}

std::string tuple_text(const IntVector& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i > 0) out += ", ";
    out += v[i].get_str();
  }
  return out + ")";
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

std::vector<std::uint64_t> prime_columns(std::span<const BoundReport> reports) {
  std::set<std::uint64_t> primes;
  for (const auto& r : reports) {
    for (const auto& entry : r.per_prime) primes.insert(entry.p);
  }
  return {primes.begin(), primes.end()};
}

std::string modulus_cell(const BoundReport& r) {
  return std::to_string(r.knot.m()) + " = " + r.factorization.to_string();
}

}  // namespace

std::string tau_table_text(const TauTable& table, int precision) {
  std::ostringstream os;
  os << "element signature\n";
  for (std::size_t s = 0; s < table.values.size(); ++s) {
    os << s << ' ' << table.values[s].to_decimal(precision) << '\n';
  }
  return os.str();
}

std::string tau_table_csv(const TauTable& table, int precision) {
  std::ostringstream os;
  os << "element,signature_exact,signature_decimal\n";
  for (std::size_t s = 0; s < table.values.size(); ++s) {
    os << s << ',' << table.values[s].to_string() << ','
       << table.values[s].to_decimal(precision) << '\n';
  }
  return os.str();
}

std::string tau_table_json(const TauTable& table, int precision) {
  json rows = json::array();
  for (std::size_t s = 0; s < table.values.size(); ++s) {
    const Character chi(static_cast<std::int64_t>(s), table.modulus());
    rows.push_back(json{{"element", s},
                        {"signature_exact", table.values[s].to_string()},
                        {"signature_decimal", table.values[s].to_decimal(precision)},
                        {"certified", chi.has_prime_power_order()}});
  }
  return dump(rows);
}

std::string witness_json(const SubgroupWitness& witness) {
  return dump(witness_to_json(witness));
}

std::string bound_report_json(const BoundReport& r) {
  json per_prime = json::array();
  for (const auto& entry : r.per_prime) {
    per_prime.push_back(json{{"p", entry.p},
                             {"L", entry.L.to_string()},
                             {"lower_bound", entry.lower_bound.to_string()}});
  }
  json out{{"n", r.knot.n()},
           {"m", r.knot.m()},
           {"factorization", r.factorization.to_string()},
           {"per_prime", per_prime},
           {"best_lower", r.best_lower.to_string()},
           {"weakened_lower", r.weakened_lower.to_string()},
           {"upper_half", r.upper_half},
           {"upper_source", r.upper_source ? json(std::string(to_string(*r.upper_source)))
                                           : json(nullptr)},
           {"witness", r.witness ? witness_to_json(*r.witness) : json(nullptr)},
           {"lt_signatures_vanish", r.lt_signatures_vanish},
           {"notes", r.notes}};
  return dump(out);
}

std::string bound_report_text(const BoundReport& r) {
  std::ostringstream os;
  os << "K_" << r.knot.n() << "  (4n+1 = " << modulus_cell(r) << ")\n";
  if (r.per_prime.empty()) {
    os << "  no prime divisors: only the trivial character\n";
  } else {
    os << "  " << std::left << std::setw(8) << "p" << std::setw(16) << "L"
       << "lower bound\n";
    for (const auto& e : r.per_prime) {
      os << "  " << std::setw(8) << e.p << std::setw(16) << e.L.to_string()
         << e.lower_bound.to_string() << '\n';
    }
  }
  os << "best lower bound:     " << r.best_lower << '\n';
  os << "weakened lower bound: " << r.weakened_lower << '\n';
  os << "upper bound 1/2:      "
     << (r.upper_half ? "certified (" + std::string(to_string(*r.upper_source)) + ")"
                      : std::string("not certified"))
     << '\n';
  if (r.witness) {
    os << "  witness v = " << tuple_text(r.witness->v)
       << ", w = " << tuple_text(r.witness->w) << ", c = " << r.witness->c << '\n';
  }
  if (!r.notes.empty()) {
    os << "notes:\n";
    for (const auto& note : r.notes) os << "  - " << note << '\n';
  }
  return os.str();
}

std::string table4_csv(std::span<const BoundReport> reports) {
  const auto primes = prime_columns(reports);
  std::ostringstream os;
  os << "knot";
  for (auto p : primes) os << ',' << p;
  os << ",4n+1\n";
  for (const auto& r : reports) {
    os << "K_" << r.knot.n();
    for (auto p : primes) os << ',' << r.lower_bound_for_prime(p);
    os << ',' << modulus_cell(r) << '\n';
  }
  return os.str();
}

std::string table4_text(std::span<const BoundReport> reports) {
  const auto primes = prime_columns(reports);
  std::vector<std::vector<std::string>> cells;
  std::vector<std::string> header{"K_n \\ p"};
  for (auto p : primes) header.push_back(std::to_string(p));
  header.emplace_back("4n+1");
  cells.push_back(header);
  for (const auto& r : reports) {
    std::vector<std::string> row{"K_" + std::to_string(r.knot.n())};
    for (auto p : primes) row.push_back(r.lower_bound_for_prime(p).to_string());
    row.push_back(modulus_cell(r));
    cells.push_back(std::move(row));
  }
  std::vector<std::size_t> width(header.size(), 0);
  for (const auto& row : cells) {
    for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
  }
  std::ostringstream os;
  for (const auto& row : cells) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c > 0) os << " | ";
      os << std::left << std::setw(static_cast<int>(width[c])) << row[c];
    }
    os << '\n';
  }
  std::string text = os.str();
  // drop padding at line ends
  std::string out;
  std::istringstream lines(text);
  for (std::string line; std::getline(lines, line);) {
    line.erase(line.find_last_not_of(' ') + 1);
    out += line + '\n';
  }
  return out;
}

std::string pell_text(std::uint64_t D) {
  std::ostringstream os;
  os << "D = " << D << '\n';
  if (D < 2 || is_perfect_square(D)) {
    os << D << " is a perfect square - no solution\n";
    return os.str();
  }
  const ContinuedFraction cf = continued_fraction_sqrt(D);
  os << "sqrt(D) = [" << cf.a0 << ';';
  for (std::size_t i = 0; i < cf.period.size(); ++i) {
    os << (i == 0 ? " " : ", ") << cf.period[i];
  }
  os << "]  (period repeats)\n";
  os << "period length " << cf.period.size() << " ("
     << (cf.odd_period() ? "odd" : "even") << ")\n";
  const PellSolution sol = solve_negative_pell(D);
  if (sol.solvable) {
    os << "fundamental solution of x^2 - " << D << " y^2 = -1: (x, y) = ("
       << sol.solution->x << ", " << sol.solution->y << ")\n";
  } else {
    os << "x^2 - " << D << " y^2 = -1 has no solution\n";
  }
  return os.str();
}

std::string pell_json(std::uint64_t D) {
  json out{{"D", D}};
  if (D < 2 || is_perfect_square(D)) {
    out["perfect_square"] = true;
    out["solvable"] = false;
    out["solution"] = nullptr;
    return dump(out);
  }
  const ContinuedFraction cf = continued_fraction_sqrt(D);
  const PellSolution sol = solve_negative_pell(D);
  out["perfect_square"] = false;
  out["a0"] = cf.a0;
  out["period"] = cf.period;
  out["period_length"] = cf.period.size();
  out["odd_period"] = cf.odd_period();
  out["solvable"] = sol.solvable;
  out["solution"] = sol.solvable ? json{{"x", big_to_json(sol.solution->x)},
                                        {"y", big_to_json(sol.solution->y)}}
                                 : json(nullptr);
  return dump(out);
}

std::string seifert_matrix_json(const SeifertMatrix& A) {
  return json(A.rows()).dump() + "\n";
}

SeifertMatrix parse_seifert_matrix_json(const std::string& text) {
  json parsed;
  try {
    parsed = json::parse(text);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("Seifert matrix JSON: ") + e.what());
  }
  if (!parsed.is_array()) {
    throw std::invalid_argument("Seifert matrix JSON must be an array of rows");
  }
  std::vector<std::vector<std::int64_t>> rows;
  for (const auto& row : parsed) {
    if (!row.is_array()) {
      throw std::invalid_argument("Seifert matrix JSON rows must be arrays");
    }
    std::vector<std::int64_t> values;
    for (const auto& x : row) {
      if (!x.is_number_integer()) {
        throw std::invalid_argument("Seifert matrix entries must be integers");
      }
      values.push_back(x.get<std::int64_t>());
    }
    rows.push_back(std::move(values));
  }
  return SeifertMatrix::from_rows(rows);
}

std::string int_vector_json(const IntVector& v) { return vector_to_json(v).dump(); }

}  // namespace twistgenus
