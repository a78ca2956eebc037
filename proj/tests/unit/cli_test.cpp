// Copyright 2026 The nmds Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <sstream>

#include "cli.hpp"
#include "json.hpp"

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = nmds::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

TEST(Cli, TableCsv) {
  const auto r = run({"table", "--q", "7", "--format", "csv"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "weight,frequency\n0,1\n5,12\n6,132\n7,84\n8,114\n");
}

TEST(Cli, TableJsonSchema) {
  const auto r = run({"table", "--q", "4", "--format", "json"});
  const auto doc = nlohmann::json::parse(r.out);
  for (const char* key : {"q", "parity", "n", "k", "d", "d_dual", "classification", "weights",
                          "closed_form_match"}) {
    EXPECT_TRUE(doc.contains(key)) << key;
  }
  EXPECT_EQ(doc["q"], 4);
  EXPECT_EQ(doc["n"], 5);
  EXPECT_EQ(doc["weights"]["2"], 6);
  // Enumeration and the tabulated even-q forms differ at q = 4.
  EXPECT_EQ(doc["closed_form_match"], false);
  EXPECT_EQ(r.code, 1);

  const auto c = run({"table", "--q", "4", "--format", "json", "--formulas", "corrected"});
  EXPECT_EQ(nlohmann::json::parse(c.out)["closed_form_match"], true);
  EXPECT_EQ(c.code, 0);
}

TEST(Cli, TableText) {
  const auto r = run({"table", "--q", "11"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("NMDS"), std::string::npos);
  EXPECT_NE(r.out.find("closed-form match (tabulated): yes"), std::string::npos);
}

TEST(Cli, TableRejectsBadQ) {
  EXPECT_EQ(run({"table", "--q", "6"}).code, 2);
  EXPECT_EQ(run({"table", "--q", "2"}).code, 2);
  EXPECT_EQ(run({"table", "--q", "abc"}).code, 2);
  EXPECT_EQ(run({"table", "--q", "7", "--format", "xml"}).code, 2);
  EXPECT_EQ(run({"table", "--q", "7", "--modulus", "[1,1,1]"}).code, 2);
  EXPECT_EQ(run({"table", "--q", "9", "--modulus", "[1,0,0]"}).code, 2);
  EXPECT_EQ(run({"table", "--q", "9", "--modulus", "[2,0,1]"}).code, 2);
}

TEST(Cli, TableWithOverrides) {
  const auto a = run({"table", "--q", "9", "--format", "csv"});
  const auto b = run({"table", "--q", "9", "--format", "csv", "--alpha-rank", "1"});
  const auto c = run({"table", "--q", "9", "--format", "csv", "--ext-modulus", "[2,0,0,1,1]"});
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(a.out, c.out);
  const auto d = run({"table", "--q", "9", "--format", "csv", "--modulus", "[2,2,1]"});
  EXPECT_EQ(a.out, d.out);
}

TEST(Cli, VerifyRanges) {
  const auto single = run({"verify", "--qmin", "3", "--qmax", "3"});
  EXPECT_EQ(single.code, 0);
  EXPECT_NE(single.out.find("1 prime powers in [3, 3]: 1 passed, 0 failed"), std::string::npos);

  const auto range = run({"verify", "--qmin", "3", "--qmax", "13"});
  EXPECT_NE(range.out.find("8 prime powers in [3, 13]"), std::string::npos);
  EXPECT_EQ(range.code, 1);

  const auto corrected = run({"verify", "--qmin", "3", "--qmax", "13", "--formulas", "corrected"});
  EXPECT_EQ(corrected.code, 0);
  EXPECT_NE(corrected.out.find("8 passed, 0 failed"), std::string::npos);

  EXPECT_EQ(run({"verify", "--qmin", "10", "--qmax", "10"}).code, 2);
  EXPECT_EQ(run({"verify", "--qmin", "2", "--qmax", "5"}).code, 2);
  EXPECT_EQ(run({"verify", "--qmin", "9", "--qmax", "5"}).code, 2);
}

TEST(Cli, VerifyJson) {
  const auto r = run({"verify", "--qmin", "7", "--qmax", "8", "--format", "json"});
  const auto doc = nlohmann::json::parse(r.out);
  ASSERT_EQ(doc["results"].size(), 2u);
  EXPECT_EQ(doc["results"][0]["q"], 7);
  EXPECT_EQ(doc["results"][0]["pass"], true);
  EXPECT_EQ(doc["results"][1]["closed_form_match"], false);
  EXPECT_EQ(doc["failed"], 1);
  EXPECT_EQ(r.code, 1);
}

TEST(Cli, SolveExamples) {
  const auto zero = run({"solve", "--q", "4", "--b1", "[0,0]", "--b2", "[0,0]", "--c", "[0,0]"});
  EXPECT_EQ(zero.code, 0);
  EXPECT_NE(zero.out.find("case: i\n"), std::string::npos);
  EXPECT_NE(zero.out.find("count: 4\n"), std::string::npos);

  const auto iv = run({"solve", "--q", "7", "--b1", "0", "--b2", "1", "--c", "0", "--format",
                       "json"});
  EXPECT_EQ(iv.code, 0);
  const auto doc = nlohmann::json::parse(iv.out);
  EXPECT_EQ(doc["case"], "iv.2");
  EXPECT_EQ(doc["count"], 1);
  EXPECT_EQ(doc["solutions"].size(), 1u);

  const auto odd = run({"solve", "--q", "7", "--b1", "1", "--b2", "0", "--c", "1", "--format",
                        "json"});
  const auto odd_doc = nlohmann::json::parse(odd.out);
  EXPECT_EQ(odd_doc["solutions"].size(), odd_doc["count"].get<std::size_t>());
  EXPECT_TRUE(odd_doc["discriminant"].is_string());
  EXPECT_EQ(odd_doc["oracle_match"], true);
}

TEST(Cli, SolveParseErrors) {
  EXPECT_EQ(run({"solve", "--q", "9", "--b1", "[1]", "--b2", "[0,0]", "--c", "[0,0]"}).code, 2);
  EXPECT_EQ(run({"solve", "--q", "7", "--b1", "[x]", "--b2", "0", "--c", "0"}).code, 2);
  EXPECT_EQ(run({"solve", "--q", "7", "--b1", "9", "--b2", "0", "--c", "0"}).code, 2);
  EXPECT_EQ(run({"solve", "--q", "7", "--b1", "0", "--b2", "0"}).code, 2);
}

TEST(Cli, Census) {
  const auto c4 = run({"census", "--q", "4", "--format", "json"});
  const auto doc4 = nlohmann::json::parse(c4.out);
  EXPECT_EQ(doc4["rows"].size(), 9u);
  EXPECT_EQ(doc4["total"], 64);
  EXPECT_EQ(c4.code, 1);
  EXPECT_EQ(run({"census", "--q", "4", "--formulas", "corrected"}).code, 0);

  const auto c3 = run({"census", "--q", "3", "--format", "json"});
  const auto doc3 = nlohmann::json::parse(c3.out);
  EXPECT_EQ(doc3["rows"].size(), 11u);
  EXPECT_EQ(doc3["total"], 27);
  EXPECT_EQ(c3.code, 0);

  const auto c9 = run({"census", "--q", "9", "--format", "csv"});
  std::istringstream lines(c9.out);
  std::string line;
  std::getline(lines, line);
  EXPECT_EQ(line, "case,tallied,closed_form");
  std::uint64_t total = 0;
  while (std::getline(lines, line)) {
    const auto a = line.find(',');
    total += std::stoull(line.substr(a + 1, line.find(',', a + 1) - a - 1));
  }
  EXPECT_EQ(total, 729u);

  EXPECT_EQ(run({"census", "--q", "12"}).code, 2);
}

TEST(Cli, UsageErrorsAndHelp) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({"--help"}).code, 0);
  EXPECT_EQ(run({"table"}).code, 2);
}

TEST(Cli, OutputIsDeterministic) {
  const std::vector<std::string> args{"table", "--q", "8", "--format", "json"};
  EXPECT_EQ(run(args).out, run(args).out);
  const std::vector<std::string> solve{"solve", "--q", "9", "--b1", "[1,2]", "--b2", "[0,1]",
                                       "--c", "[2,2]"};
  EXPECT_EQ(run(solve).out, run(solve).out);
}

}  // namespace
