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

#include "commands.hpp"

#if __has_include(<CLI11.hpp>)
#include <CLI11.hpp>
#else
#include <CLI/CLI.hpp>
#endif
#include <nlohmann/json.hpp>

#include <algorithm>
#include <atomic>
#include <fstream>
#include <iostream>
#include <mutex>
#include <sstream>
#include <thread>
#include <unistd.h>

#include "twistgenus/cg.hpp"
#include "twistgenus/errors.hpp"
#include "twistgenus/serialize.hpp"
#include "twistgenus/signatures.hpp"
#include "twistgenus/subgroup.hpp"

#ifndef TWISTGENUS_VERSION
#define TWISTGENUS_VERSION "unknown"
#endif

namespace twistgenus::cli {

using nlohmann::json;

Format parse_format(const std::string& name) {
  if (name == "table") return Format::Table;
  if (name == "csv") return Format::Csv;
  if (name == "json") return Format::Json;
  throw UsageError("unknown format '" + name + "' (expected table, csv or json)");
}

bool operator==(const SurveyRow& a, const SurveyRow& b) {
  if (a.per_prime.size() != b.per_prime.size()) return false;
  for (std::size_t i = 0; i < a.per_prime.size(); ++i) {
    const auto& x = a.per_prime[i];
    const auto& y = b.per_prime[i];
    if (x.p != y.p || x.L != y.L || x.lower_bound != y.lower_bound) return false;
  }
  return a.n == b.n && a.m == b.m && a.factorization == b.factorization &&
         a.best_lower == b.best_lower && a.weakened_lower == b.weakened_lower &&
         a.upper_half == b.upper_half && a.upper_source == b.upper_source;
}

SurveyRow make_survey_row(const BoundReport& report) {
  SurveyRow row;
  row.n = report.knot.n();
  row.m = report.knot.m();
  row.factorization = report.factorization.to_string();
  row.per_prime = report.per_prime;
  row.best_lower = report.best_lower;
  row.weakened_lower = report.weakened_lower;
  row.upper_half = report.upper_half;
  row.upper_source =
      report.upper_source ? std::string(to_string(*report.upper_source)) : "none";
  return row;
}

std::vector<SurveyRow> compute_survey(std::int64_t n_start, std::int64_t n_end,
                                      std::int64_t search_bound, unsigned threads) {
  if (n_start < 0 || n_end < n_start) {
    throw UsageError("survey range must satisfy 0 <= n_start <= n_end");
  }
  const auto count = static_cast<std::size_t>(n_end - n_start + 1);
  std::vector<SurveyRow> rows(count);
  if (threads == 0) threads = std::max(1U, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, count));

  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (std::size_t i = next++; i < count; i = next++) {
      try {
        const TwistKnot knot(n_start + static_cast<std::int64_t>(i));
        rows[i] = make_survey_row(bound_report(knot, search_bound));
      } catch (...) {
        std::lock_guard<std::mutex> lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();
  if (failure) std::rethrow_exception(failure);
  return rows;
}

namespace {

std::string per_prime_cell(const std::vector<PrimeBound>& per_prime) {
  std::string cell;
  for (const auto& e : per_prime) {
    if (!cell.empty()) cell += ';';
    cell += std::to_string(e.p) + ':' + e.L.to_string() + ':' +
            e.lower_bound.to_string();
  }
  return cell;
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::string current;
  std::istringstream is(text);
  while (std::getline(is, current, sep)) out.push_back(current);
  if (!text.empty() && text.back() == sep) out.emplace_back();
  return out;
}

std::vector<PrimeBound> parse_per_prime(const std::string& cell) {
  std::vector<PrimeBound> out;
  if (cell.empty()) return out;
  for (const auto& item : split(cell, ';')) {
    const auto parts = split(item, ':');
    if (parts.size() != 3) {
      throw std::invalid_argument("bad per_prime entry '" + item + "'");
    }
    out.push_back(PrimeBound{std::stoull(parts[0]), ExactRational::parse(parts[1]),
                             ExactRational::parse(parts[2])});
  }
  return out;
}

bool parse_bool(const std::string& s) {
  if (s == "true") return true;
  if (s == "false") return false;
  throw std::invalid_argument("bad boolean '" + s + "'");
}

constexpr const char* kSurveyHeader =
    "n,m,factorization,per_prime,best_lower,weakened_lower,upper_half,upper_source";

}  // namespace

std::string survey_csv(const std::vector<SurveyRow>& rows, const std::string& meta) {
  std::ostringstream os;
  os << "# " << meta << '\n' << kSurveyHeader << '\n';
  for (const auto& r : rows) {
    os << r.n << ',' << r.m << ',' << r.factorization << ','
       << per_prime_cell(r.per_prime) << ',' << r.best_lower << ','
       << r.weakened_lower << ',' << (r.upper_half ? "true" : "false") << ','
       << r.upper_source << '\n';
  }
  return os.str();
}

std::string survey_json(const std::vector<SurveyRow>& rows, const std::string& meta) {
  json out_rows = json::array();
  for (const auto& r : rows) {
    json per_prime = json::array();
    for (const auto& e : r.per_prime) {
      per_prime.push_back(json{{"p", e.p},
                               {"L", e.L.to_string()},
                               {"lower_bound", e.lower_bound.to_string()}});
    }
    out_rows.push_back(json{{"n", r.n},
                            {"m", r.m},
                            {"factorization", r.factorization},
                            {"per_prime", per_prime},
                            {"best_lower", r.best_lower.to_string()},
                            {"weakened_lower", r.weakened_lower.to_string()},
                            {"upper_half", r.upper_half},
                            {"upper_source", r.upper_source}});
  }
  return json{{"generator", meta}, {"rows", out_rows}}.dump(2) + "\n";
}

std::vector<SurveyRow> parse_survey_csv(const std::string& text) {
  std::vector<SurveyRow> rows;
  std::istringstream is(text);
  bool seen_header = false;
  for (std::string line; std::getline(is, line);) {
    if (line.empty() || line.front() == '#') continue;
    if (!seen_header) {
      if (line != kSurveyHeader) throw std::invalid_argument("unexpected survey header");
      seen_header = true;
      continue;
    }
    const auto f = split(line, ',');
    if (f.size() != 8) throw std::invalid_argument("survey row needs 8 fields: " + line);
    SurveyRow r;
    r.n = std::stoll(f[0]);
    r.m = std::stoll(f[1]);
    r.factorization = f[2];
    r.per_prime = parse_per_prime(f[3]);
    r.best_lower = ExactRational::parse(f[4]);
    r.weakened_lower = ExactRational::parse(f[5]);
    r.upper_half = parse_bool(f[6]);
    r.upper_source = f[7];
    rows.push_back(std::move(r));
  }
  if (!seen_header) throw std::invalid_argument("survey CSV has no header");
  return rows;
}

std::vector<SurveyRow> parse_survey_json(const std::string& text) {
  std::vector<SurveyRow> rows;
  try {
    const json doc = json::parse(text);
    for (const auto& j : doc.at("rows")) {
      SurveyRow r;
      r.n = j.at("n").get<std::int64_t>();
      r.m = j.at("m").get<std::int64_t>();
      r.factorization = j.at("factorization").get<std::string>();
      for (const auto& e : j.at("per_prime")) {
        r.per_prime.push_back(
            PrimeBound{e.at("p").get<std::uint64_t>(),
                       ExactRational::parse(e.at("L").get<std::string>()),
                       ExactRational::parse(e.at("lower_bound").get<std::string>())});
      }
      r.best_lower = ExactRational::parse(j.at("best_lower").get<std::string>());
      r.weakened_lower = ExactRational::parse(j.at("weakened_lower").get<std::string>());
      r.upper_half = j.at("upper_half").get<bool>();
      r.upper_source = j.at("upper_source").get<std::string>();
      rows.push_back(std::move(r));
    }
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("survey JSON: ") + e.what());
  }
  return rows;
}

void write_atomically(const std::filesystem::path& path, const std::string& content) {
  namespace fs = std::filesystem;
  fs::path tmp = path;
  tmp += ".tmp." + std::to_string(::getpid());
  {
    std::ofstream os(tmp, std::ios::binary | std::ios::trunc);
    if (!os) throw IoError("cannot open '" + tmp.string() + "' for writing");
    os << content;
    os.flush();
    if (!os) {
      std::error_code ignored;
      fs::remove(tmp, ignored);
      throw IoError("write to '" + tmp.string() + "' failed");
    }
  }
  std::error_code ec;
  fs::rename(tmp, path, ec);
  if (ec) {
    std::error_code ignored;
    fs::remove(tmp, ignored);
    throw IoError("cannot move output into '" + path.string() + "': " + ec.message());
  }
}

// ---------------------------------------------------------------------------
// Subcommands

namespace {

TwistKnot knot_from(std::int64_t n) {
  if (n < 0) throw UsageError("n must be >= 0, got " + std::to_string(n));
  return TwistKnot(n);
}

BoundReport restrict_to_prime(BoundReport report, std::uint64_t p) {
  if (!report.factorization.divides_by(p)) {
    throw NotADivisor(std::to_string(p) + " does not divide 4n+1 = " +
                      std::to_string(report.knot.m()));
  }
  std::erase_if(report.per_prime, [p](const PrimeBound& e) { return e.p != p; });
  report.best_lower = report.per_prime.front().lower_bound;
  return report;
}

}  // namespace

std::string cmd_tau(std::int64_t n, Format format, int precision) {
  if (precision < 0) throw UsageError("--precision must be >= 0");
  const TauTable table = tau_table(knot_from(n));
  switch (format) {
    case Format::Csv:
      return tau_table_csv(table, precision);
    case Format::Json:
      return tau_table_json(table, precision);
    case Format::Table:
      break;
  }
  return tau_table_text(table, precision);
}

std::string cmd_bound(const std::vector<std::int64_t>& ns,
                      std::optional<std::uint64_t> prime, std::int64_t search_bound,
                      Format format) {
  if (ns.empty()) throw UsageError("bound needs at least one n");
  if (search_bound < 1) throw UsageError("--bound must be >= 1");
  std::vector<BoundReport> reports;
  for (auto n : ns) {
    BoundReport r = bound_report(knot_from(n), search_bound);
    reports.push_back(prime ? restrict_to_prime(std::move(r), *prime) : std::move(r));
  }
  switch (format) {
    case Format::Csv:
      return table4_csv(reports);
    case Format::Json: {
      if (reports.size() == 1) return bound_report_json(reports.front());
      std::string out = "[\n";
      for (std::size_t i = 0; i < reports.size(); ++i) {
        std::string item = bound_report_json(reports[i]);
        item.pop_back();
        out += item + (i + 1 < reports.size() ? ",\n" : "\n");
      }
      return out + "]\n";
    }
    case Format::Table:
      break;
  }
  if (reports.size() == 1) return bound_report_text(reports.front());
  return table4_text(reports);
}

std::string cmd_survey(std::int64_t n_start, std::int64_t n_end,
                       const std::optional<std::filesystem::path>& out_path,
                       Format format, std::int64_t search_bound) {
  if (search_bound < 1) throw UsageError("--bound must be >= 1");
  if (format == Format::Table) throw UsageError("survey writes csv or json");
  const auto rows = compute_survey(n_start, n_end, search_bound);
  const std::string meta = "twistgenus " TWISTGENUS_VERSION " survey n=" +
                           std::to_string(n_start) + ".." + std::to_string(n_end) +
                           " search_bound=" + std::to_string(search_bound);
  std::string content =
      format == Format::Json ? survey_json(rows, meta) : survey_csv(rows, meta);
  if (out_path) write_atomically(*out_path, content);
  return content;
}

std::string cmd_pell(std::int64_t D, Format format) {
  if (D < 2) throw UsageError("D must be >= 2");
  const auto d = static_cast<std::uint64_t>(D);
  return format == Format::Json ? pell_json(d) : pell_text(d);
}

std::string cmd_search(std::int64_t n, std::int64_t search_bound, Format format) {
  if (search_bound < 1) throw UsageError("--bound must be >= 1");
  const TwistKnot knot = knot_from(n);
  const auto witness = exhaustive_search(knot, search_bound);
  if (format == Format::Json) {
    if (witness) return witness_json(*witness);
    return json{{"found", false}, {"bound", search_bound}}.dump(2) + "\n";
  }
  std::ostringstream os;
  os << "K_" << n << ", box [-" << search_bound << ", " << search_bound << "]^4\n";
  if (!witness) {
    os << "no witness within the box (inconclusive)\n";
    return os.str();
  }
  auto tuple = [](const IntVector& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + v[i].get_str();
    return s + ")";
  };
  os << "v = " << tuple(witness->v) << '\n'
     << "w = " << tuple(witness->w) << '\n'
     << "Gram matrix [[0, 1], [0, " << witness->c << "]]\n"
     << "g_st(K_" << n << ") <= 1/2 certified\n";
  return os.str();
}

std::string cmd_signature(const std::string& matrix_json, std::int64_t modulus,
                          Format format) {
  if (modulus < 2) throw UsageError("--modulus must be >= 2");
  const SeifertMatrix A = parse_seifert_matrix_json(matrix_json);
  const int sigma = ordinary_signature(A);
  json angles = json::array();
  std::ostringstream os;
  os << "ordinary signature: " << sigma << '\n';
  for (std::int64_t s = 1; s < modulus; ++s) {
    try {
      const int value = lt_signature_generic(A, RationalAngle(s, modulus));
      angles.push_back(json{{"s", s}, {"signature", value}});
      os << "sigma_" << s << '/' << modulus << " = " << value << '\n';
    } catch (const NearSingular&) {
      angles.push_back(json{{"s", s}, {"signature", nullptr}});
      os << "sigma_" << s << '/' << modulus << " = (near an Alexander root)\n";
    }
  }
  const ExactRational mt = murasugi_tristram_bound(A, modulus);
  os << "Murasugi-Tristram bound g_4 >= " << mt << '\n';
  if (format == Format::Json) {
    return json{{"ordinary_signature", sigma},
                {"modulus", modulus},
                {"levine_tristram", angles},
                {"murasugi_tristram_bound", mt.to_string()}}
               .dump(2) +
           "\n";
  }
  return os.str();
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Casson-Gordon signatures and stable 4-genus bounds for twist knots",
               "twistgenus"};
  app.require_subcommand(1);
  app.set_version_flag("--version", TWISTGENUS_VERSION);

  std::string format_name = "table";
  int precision = kDefaultPrecision;
  std::int64_t search_bound = kDefaultSearchBound;
  std::optional<std::uint64_t> prime;
  std::string out_path;

  std::int64_t tau_n = 0;
  auto* tau = app.add_subcommand("tau", "tau-signature table of K_n over Z_{4n+1}");
  tau->add_option("n", tau_n, "number of full twists")->required();
  tau->add_option("--format", format_name, "table, csv or json");
  tau->add_option("--precision", precision, "decimal places (default 2)");

  std::vector<std::int64_t> bound_ns;
  auto* bound = app.add_subcommand("bound", "lower/upper bounds for g_st(K_n)");
  bound->add_option("n", bound_ns, "one or more twist-knot indices")->required();
  bound->add_option("--prime", prime, "restrict to one prime divisor of 4n+1");
  bound->add_option("--bound", search_bound, "coordinate bound of the witness search");
  bound->add_option("--format", format_name, "table, csv or json");

  std::int64_t n_start = 0;
  std::int64_t n_end = 0;
  auto* survey = app.add_subcommand("survey", "bound reports for a range of n");
  survey->add_option("n_start", n_start)->required();
  survey->add_option("n_end", n_end)->required();
  survey->add_option("--out", out_path, "output file (stdout if omitted)");
  survey->add_option("--format", format_name, "csv or json");
  survey->add_option("--bound", search_bound, "coordinate bound of the witness search");

  std::int64_t pell_D = 0;
  auto* pell = app.add_subcommand("pell", "continued fraction of sqrt(D), x^2 - D y^2 = -1");
  pell->add_option("D", pell_D)->required();
  pell->add_option("--format", format_name, "table or json");

  std::int64_t search_n = 0;
  auto* search = app.add_subcommand("search", "box search for a [[0,1],[0,c]] subgroup of 2K_n");
  search->add_option("n", search_n)->required();
  search->add_option("--bound", search_bound, "coordinate bound B");
  search->add_option("--format", format_name, "table or json");

  std::string matrix_json;
  std::int64_t modulus = 2;
  auto* signature = app.add_subcommand("signature", "signatures of a Seifert matrix given as JSON");
  signature->add_option("--matrix", matrix_json, "JSON rows, e.g. [[-1,1],[0,-1]], or @file")
      ->required();
  signature->add_option("--modulus", modulus, "evaluate at s/m for 0 < s < m");
  signature->add_option("--format", format_name, "table or json");

  std::vector<std::string> argv_storage = args;
  if (argv_storage.empty()) argv_storage.emplace_back("twistgenus");
  std::vector<char*> argv;
  for (auto& a : argv_storage) argv.push_back(a.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == static_cast<int>(CLI::ExitCodes::Success)) {
      app.exit(e, out, err);
      return kOk;
    }
    app.exit(e, out, err);
    return kUsage;
  }

  try {
    const Format format = parse_format(format_name);
    std::string text;
    if (tau->parsed()) {
      text = cmd_tau(tau_n, format, precision);
    } else if (bound->parsed()) {
      text = cmd_bound(bound_ns, prime, search_bound, format);
    } else if (survey->parsed()) {
      const auto fmt = survey->count("--format") > 0
                           ? format
                           : (out_path.ends_with(".json") ? Format::Json : Format::Csv);
      std::optional<std::filesystem::path> path;
      if (!out_path.empty()) path = out_path;
      text = cmd_survey(n_start, n_end, path, fmt, search_bound);
      if (path) {
        text = "wrote " + std::to_string(n_end - n_start + 1) + " rows to " +
               out_path + "\n";
      }
    } else if (pell->parsed()) {
      text = cmd_pell(pell_D, format);
    } else if (search->parsed()) {
      text = cmd_search(search_n, search_bound, format);
    } else if (signature->parsed()) {
      if (matrix_json.starts_with('@')) {
        const std::string path = matrix_json.substr(1);
        std::ifstream in(path);
        if (!in) throw IoError("cannot read " + path);
        std::ostringstream buf;
        buf << in.rdbuf();
        matrix_json = buf.str();
      }
      text = cmd_signature(matrix_json, modulus, format);
    }
    out << text;
    return kOk;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const IoError& e) {
    err << "I/O error: " << e.what() << '\n';
    return kIo;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kComputation;
  }
}

}  // namespace twistgenus::cli
