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

#include <gtest/gtest.h>

#include <nlohmann/json.hpp>
#include <stdexcept>
#include <vector>

#include "twistgenus/errors.hpp"

namespace twistgenus {
namespace {

using nlohmann::json;

TEST(TauTableTextTest, Table3Knot) {
  const std::string text = tau_table_text(tau_table(TwistKnot(6)));
  EXPECT_EQ(text.rfind("element signature\n0 0\n1 -0.16\n2 3.36\n", 0), 0U);
  EXPECT_NE(text.find("\n12 0.96\n13 0.96\n"), std::string::npos);
  EXPECT_NE(text.find("\n24 -0.16\n"), std::string::npos);
}

TEST(TauTableTextTest, UnknotAndPrecision) {
  EXPECT_EQ(tau_table_text(tau_table(TwistKnot(0))), "element signature\n0 0\n");
  const std::string k2 = tau_table_text(tau_table(TwistKnot(2)), 4);
  EXPECT_NE(k2.find("\n1 -0.4444\n"), std::string::npos);
}

TEST(TauTableCsvTest, ExactAndDecimalColumns) {
  const std::string csv = tau_table_csv(tau_table(TwistKnot(2)));
  EXPECT_EQ(csv.rfind("element,signature_exact,signature_decimal\n0,0,0\n1,-4/9,-0.44\n", 0),
            0U);
}

TEST(TauTableJsonTest, ParsesBack) {
  const json j = json::parse(tau_table_json(tau_table(TwistKnot(6))));
  ASSERT_EQ(j.size(), 25U);
  EXPECT_EQ(j[1]["signature_exact"], "-4/25");
  EXPECT_EQ(j[1]["signature_decimal"], "-0.16");
  EXPECT_EQ(j[6]["signature_exact"], "156/25");
  for (std::size_t s = 0; s < j.size(); ++s) {
    EXPECT_EQ(j[s]["element"], s);
    EXPECT_TRUE(j[s]["certified"].get<bool>());
    EXPECT_EQ(ExactRational::parse(j[s]["signature_exact"].get<std::string>()),
              tau_twist(TwistKnot(6), static_cast<std::int64_t>(s)));
  }
}

TEST(WitnessJsonTest, SmallAndHugeEntries) {
  SubgroupWitness w{make_int_vector({1, 0, 1, 2}), make_int_vector({0, 1, 0, 0}), BigInt(-1),
                    WitnessSource::PellConstruction};
  const json j = json::parse(witness_json(w));
  EXPECT_EQ(j["v"], json::array({1, 0, 1, 2}));
  EXPECT_EQ(j["c"], -1);
  EXPECT_EQ(j["source"], "PellConstruction");

  w.v[2] = BigInt("123456789012345678901234567890");
  const json big = json::parse(witness_json(w));
  EXPECT_EQ(big["v"][2], "123456789012345678901234567890");
}

TEST(BoundReportJsonTest, Fields) {
  const json j = json::parse(bound_report_json(bound_report(TwistKnot(5))));
  EXPECT_EQ(j["n"], 5);
  EXPECT_EQ(j["m"], 21);
  EXPECT_EQ(j["factorization"], "3*7");
  EXPECT_EQ(j["best_lower"], "1/5");
  EXPECT_EQ(j["weakened_lower"], "5/34");
  ASSERT_EQ(j["per_prime"].size(), 2U);
  EXPECT_EQ(j["per_prime"][0]["L"], "16/3");
  EXPECT_EQ(j["per_prime"][1]["p"], 7);
  EXPECT_TRUE(j["lt_signatures_vanish"].get<bool>());

  const json k1 = json::parse(bound_report_json(bound_report(TwistKnot(1))));
  EXPECT_TRUE(k1["upper_half"].get<bool>());
  EXPECT_EQ(k1["upper_source"], "PellConstruction");
  EXPECT_EQ(k1["witness"]["c"], -1);
}

TEST(BoundReportTextTest, MentionsBestBound) {
  const std::string text = bound_report_text(bound_report(TwistKnot(11)));
  EXPECT_NE(text.find("K_11"), std::string::npos);
  EXPECT_NE(text.find("45 = 3^2*5"), std::string::npos);
  EXPECT_NE(text.find("best lower bound:     1/3"), std::string::npos);
}

TEST(Table4Test, CsvGrid) {
  std::vector<BoundReport> reports;
  for (std::int64_t n : {5, 11, 16, 21}) reports.push_back(bound_report(TwistKnot(n), 2));
  EXPECT_EQ(table4_csv(reports),
            "knot,3,5,7,13,17,4n+1\n"
            "K_5,1/5,0,1/5,0,0,21 = 3*7\n"
            "K_11,1/3,1/3,0,0,0,45 = 3^2*5\n"
            "K_16,0,3/8,0,4/11,0,65 = 5*13\n"
            "K_21,0,2/5,0,0,7/18,85 = 5*17\n");
  const std::string text = table4_text(reports);
  EXPECT_NE(text.find("4/11"), std::string::npos);
  EXPECT_NE(text.find(" | "), std::string::npos);
}

TEST(PellTextTest, Renders) {
  EXPECT_EQ(pell_text(13),
            "D = 13\n"
            "sqrt(D) = [3; 1, 1, 1, 1, 6]  (period repeats)\n"
            "period length 5 (odd)\n"
            "fundamental solution of x^2 - 13 y^2 = -1: (x, y) = (18, 5)\n");
  EXPECT_NE(pell_text(205).find("period length 8 (even)"), std::string::npos);
  EXPECT_NE(pell_text(205).find("no solution"), std::string::npos);
  EXPECT_EQ(pell_text(25), "D = 25\n25 is a perfect square - no solution\n");
}

TEST(PellJsonTest, Fields) {
  const json j = json::parse(pell_json(61));
  EXPECT_TRUE(j["solvable"].get<bool>());
  EXPECT_EQ(j["period_length"], 11);
  EXPECT_EQ(j["solution"]["x"], 29718);
  EXPECT_EQ(j["solution"]["y"], 3805);
  EXPECT_TRUE(json::parse(pell_json(205))["solution"].is_null());
}

TEST(SeifertJsonTest, RoundTrip) {
  for (std::int64_t n : {0, 1, 6, 1000}) {
    const SeifertMatrix A = seifert_matrix_tau_convention(TwistKnot(n));
    EXPECT_EQ(parse_seifert_matrix_json(seifert_matrix_json(A)), A);
  }
  const SeifertMatrix T = torus_knot_seifert_matrix(7);
  EXPECT_EQ(parse_seifert_matrix_json(seifert_matrix_json(T)), T);
}

TEST(SeifertJsonTest, Rejects) {
  EXPECT_THROW((void)parse_seifert_matrix_json("not json"), std::invalid_argument);
  EXPECT_THROW((void)parse_seifert_matrix_json("{\"a\": 1}"), std::invalid_argument);
  EXPECT_THROW((void)parse_seifert_matrix_json("[[1, \"x\"], [0, 1]]"), std::invalid_argument);
  EXPECT_THROW((void)parse_seifert_matrix_json("[[1, 1], [0]]"), DimensionMismatch);
  EXPECT_THROW((void)parse_seifert_matrix_json("[[1, 0], [0, 1]]"), InvalidSeifertMatrix);
}

TEST(IntVectorJsonTest, Renders) {
  EXPECT_EQ(json::parse(int_vector_json(make_int_vector({-3, 0, 7}))), json::array({-3, 0, 7}));
}

}  // namespace
}  // namespace twistgenus
