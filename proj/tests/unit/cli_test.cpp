/*
 * Copyright 2026 The tforge Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include <gtest/gtest.h>

#include <json.hpp>

#include <cstdlib>
#include <sstream>

#include "tforge/cli.hpp"

namespace tforge {
namespace {

using json = nlohmann::ordered_json;

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run_cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

json run_json(std::vector<std::string> args) {
  args.push_back("--format");
  args.push_back("json");
  const Outcome o = run_cli(std::move(args));
  EXPECT_EQ(o.code, 0) << o.err;
  return json::parse(o.out);
}

std::vector<std::string> strings(std::initializer_list<const char*> xs) { return {xs.begin(), xs.end()}; }

class ScopedEnv {
 public:
  ScopedEnv(const char* name, const char* value) : name_(name) { ::setenv(name, value, 1); }
  ~ScopedEnv() { ::unsetenv(name_); }

 private:
  const char* name_;
};

TEST(CliTest, CatalogListsEntries) {
  const Outcome o = run_cli({"catalog"});
  EXPECT_EQ(o.code, 0);
  EXPECT_NE(o.out.find("stirling2 Sheffer g=1 f=exp(s)-1"), std::string::npos) << o.out;
  EXPECT_NE(o.out.find("pascal Riordan G=1/(1-x) F=x/(1-x)"), std::string::npos) << o.out;
}

TEST(CliTest, CatalogAsJson) {
  const json j = run_json({"catalog"});
  ASSERT_TRUE(j.is_array());
  EXPECT_EQ(j[0]["name"], "stirling2");
  EXPECT_EQ(j[0]["kind"], "Sheffer");
  EXPECT_EQ(j[0]["f"], "exp(s)-1");
}

TEST(CliTest, UnknownFormatIsAnError) {
  const Outcome o = run_cli({"catalog", "--format", "xml"});
  EXPECT_NE(o.code, 0);
  EXPECT_NE(o.err.find("unknown format 'xml'"), std::string::npos);
  EXPECT_TRUE(o.out.empty());
}

TEST(CliTest, TriangleRows) {
  const Outcome o = run_cli({"triangle", "--name", "stirling2", "--rows", "5"});
  EXPECT_EQ(o.code, 0);
  EXPECT_NE(o.out.find("| 4 | 0 1 7 6 1 |"), std::string::npos) << o.out;
  const json j = run_json({"triangle", "--name", "stirling2", "--rows", "5"});
  EXPECT_EQ(j["rows"][4], json::array({"0", "1", "7", "6", "1"}));
}

TEST(CliTest, TriangleFromInlineSpec) {
  const json j = run_json({"triangle", "--spec", "riordan: g=1/(1-x), f=x/(1-x)", "--rows", "4"});
  EXPECT_EQ(j["rows"], json::parse(R"([["1"],["1","1"],["1","2","1"],["1","3","3","1"]])"));
  EXPECT_EQ(j["spec"]["kind"], "Riordan");
}

TEST(CliTest, SyntaxErrorsReportOffsets) {
  const Outcome o = run_cli({"triangle", "--spec", "sheffer: g=1, f=exp(s"});
  EXPECT_EQ(o.code, 2);
  EXPECT_NE(o.err.find("offset 21"), std::string::npos) << o.err;
}

TEST(CliTest, CatalogConstraintError) {
  const Outcome o = run_cli({"triangle", "--name", "S2[2,0]"});
  EXPECT_EQ(o.code, 2);
  EXPECT_NE(o.err.find("catalog-constraint"), std::string::npos) << o.err;
  EXPECT_NE(o.err.find("gcd"), std::string::npos) << o.err;
}

TEST(CliTest, SourceIsRequired) {
  EXPECT_EQ(run_cli({"triangle"}).code, 2);
  EXPECT_EQ(run_cli({"triangle", "--name", "pascal", "--spec", "sheffer: g=1, f=s"}).code, 2);
  EXPECT_EQ(run_cli({}).code, 2);
  EXPECT_EQ(run_cli({"frobnicate"}).code, 2);
}

TEST(CliTest, DiagonalCommand) {
  const json j = run_json({"diagonal", "--name", "pascal", "--d", "3", "--count", "4", "--weighting", "pascal-product"});
  EXPECT_EQ(j["terms"], json::array({"1", "16", "100", "400"}));
  EXPECT_EQ(run_cli({"diagonal", "--name", "pascal", "--weighting", "odd"}).code, 2);
}

TEST(CliTest, DiagGfStirlingSecondKind) {
  const json j = run_json({"diag-gf", "--name", "stirling2", "--dmax", "4"});
  const auto& results = j["results"];
  ASSERT_EQ(results.size(), 5u);
  EXPECT_EQ(results[0]["numerator"], json::array({"1"}));
  EXPECT_EQ(results[4]["numerator"], json::array({"0", "1", "22", "58", "24"}));
  for (std::size_t d = 0; d < 5; ++d) {
    EXPECT_EQ(results[d]["d"], d);
    EXPECT_EQ(results[d]["den_base"], "1");
    EXPECT_EQ(results[d]["den_power"], 2 * d + 1);
  }
  EXPECT_EQ(results[2]["expansion"], json::array({"0", "1", "7", "25", "65", "140", "266", "462"}));
}

TEST(CliTest, DiagGfNarayanaNormalization) {
  const json j = run_json({"diag-gf", "--name", "A097805", "--dmax", "4", "--normalize", "narayana"});
  EXPECT_EQ(j["normalization"], "narayana");
  EXPECT_EQ(j["results"][3]["normalized"], json::array({"1", "3", "1"}));
  EXPECT_EQ(j["results"][4]["normalized"], json::array({"1", "6", "6", "1"}));
}

TEST(CliTest, DiagGfFactorialMode) {
  const json j = run_json({"diag-gf", "--name", "pascal", "--dmax", "3", "--mode", "eegf-factorial", "--terms", "5"});
  EXPECT_EQ(j["source"], "riordan-eegf");
  EXPECT_EQ(j["weighting"], "factorial-product");
  for (std::int64_t d = 0; d <= 3; ++d) {
    const auto& seq = j["results"][static_cast<std::size_t>(d)]["sequence"];
    for (std::int64_t m = 0; m < 5; ++m) {
      const Rational expected = factorial(static_cast<unsigned>(d + m)) * binomial(d + m, m);
      EXPECT_EQ(seq[static_cast<std::size_t>(m)], expected.str());
    }
  }
}

TEST(CliTest, NumeratorsCommand) {
  const json j = run_json({"numerators", "--name", "pascal", "--dmax", "4"});
  EXPECT_EQ(j["rows"][4]["coefficients"], json::array({"1", "16", "36", "16", "1"}));
  const Outcome csv = run_cli({"numerators", "--name", "P.S2", "--dmax", "2", "--normalize", "narayana", "--format", "csv"});
  EXPECT_NE(csv.out.find("1,false,"), std::string::npos) << csv.out;
}

TEST(CliTest, VerifyStirlingDiagonal) {
  const json j = run_json({"verify", "--name", "stirling2", "--dmax", "2", "--mmax", "9"});
  EXPECT_TRUE(j["passed"]);
  const auto& diag = j["reports"][0]["diagonals"][2];
  EXPECT_EQ(diag["direct"], json::array({"0", "1", "7", "25", "65", "140", "266", "462", "750"}));
  EXPECT_EQ(diag["closed"], diag["direct"]);
  const Outcome md = run_cli({"verify", "--name", "stirling2", "--dmax", "2", "--mmax", "9"});
  EXPECT_EQ(md.code, 0);
  EXPECT_NE(md.out.find("0, 1, 7, 25, 65, 140, 266, 462, 750 | pass"), std::string::npos) << md.out;
}

TEST(CliTest, VerifyUnknownNameFails) {
  const Outcome o = run_cli({"verify", "--name", "nosuch"});
  EXPECT_NE(o.code, 0);
  EXPECT_NE(o.err.find("unknown catalog entry"), std::string::npos);
}

TEST(CliTest, VerifyAllPassesInCatalogOrder) {
  const json j = run_json({"verify", "--name", "all", "--dmax", "5", "--mmax", "12"});
  EXPECT_TRUE(j["passed"]);
  const auto names = verification_names();
  ASSERT_EQ(j["reports"].size(), names.size());
  for (std::size_t i = 0; i < names.size(); ++i) {
    EXPECT_EQ(j["reports"][i]["spec"]["name"], names[i]);
    EXPECT_TRUE(j["reports"][i]["passed"]) << names[i];
  }
}

TEST(CliTest, VerifyReportsMisprintsWithoutFailing) {
  const json j = run_json({"verify", "--name", "P.S2", "--dmax", "4", "--mmax", "6"});
  EXPECT_TRUE(j["passed"]);
  bool flagged = false;
  for (const auto& ref : j["reports"][0]["reference"])
    if (ref["d"] == 4) {
      EXPECT_FALSE(ref["match"]);
      EXPECT_EQ(ref["computed"], "(1 + 22*t + 58*t^2 + 24*t^3)/(1 - t)^9");
      flagged = true;
    }
  EXPECT_TRUE(flagged);
}

TEST(CliTest, TruncationOrderFromEnvironment) {
  {
    ScopedEnv env("TFORGE_ORDER", "4");
    EXPECT_EQ(cli::truncation_order(), 4u);
    const Outcome o = run_cli({"diag-gf", "--name", "stirling2", "--dmax", "4"});
    EXPECT_EQ(o.code, 2);
    EXPECT_NE(o.err.find("TFORGE_ORDER"), std::string::npos) << o.err;
    EXPECT_EQ(run_cli({"diag-gf", "--name", "stirling2", "--dmax", "3"}).code, 0);
  }
  {
    ScopedEnv env("TFORGE_ORDER", "twelve");
    EXPECT_EQ(run_cli({"diag-gf", "--name", "stirling2"}).code, 2);
  }
  EXPECT_EQ(cli::truncation_order(), kDefaultOrder);
}

TEST(CliTest, CsvQuotesCommaNames) {
  const Outcome o = run_cli({"verify", "--name", "S2[2,1]", "--dmax", "1", "--mmax", "2", "--format", "csv"});
  EXPECT_EQ(o.code, 0);
  EXPECT_NE(o.out.find("\"S2[2,1]\",0,0,1,1,true"), std::string::npos) << o.out;
}

TEST(CliTest, OutputIsDeterministic) {
  const std::vector<std::vector<std::string>> commands{
      strings({"catalog"}),
      strings({"triangle", "--name", "charlier", "--rows", "8"}),
      strings({"diag-gf", "--name", "S2[2,1]", "--dmax", "3"}),
      strings({"numerators", "--name", "A135278", "--dmax", "3", "--normalize", "index"}),
      strings({"verify", "--name", "pascal", "--dmax", "3", "--mmax", "6"}),
  };
  for (const auto& base : commands) {
    for (const char* format : {"json", "csv", "markdown"}) {
      auto args = base;
      args.push_back("--format");
      args.push_back(format);
      const Outcome a = run_cli(args);
      const Outcome b = run_cli(args);
      EXPECT_EQ(a.code, 0) << a.err;
      EXPECT_EQ(a.out, b.out) << base[0] << " " << format;
    }
  }
}

TEST(CliTest, JsonRoundTripsByteForByte) {
  const std::vector<std::vector<std::string>> commands{
      strings({"catalog", "--format", "json"}),
      strings({"triangle", "--name", "S1phat[2,1]", "--rows", "6", "--format", "json"}),
      strings({"diag-gf", "--name", "charlier", "--dmax", "3", "--format", "json"}),
      strings({"verify", "--name", "charlier", "--dmax", "3", "--mmax", "5", "--format", "json"}),
  };
  for (const auto& args : commands) {
    const Outcome o = run_cli(args);
    ASSERT_EQ(o.code, 0) << o.err;
    EXPECT_EQ(json::parse(o.out).dump(2) + "\n", o.out) << args[0];
  }
}

TEST(CliTest, JsonHoldsNoFloatingPoint) {
  const json j = run_json({"diag-gf", "--name", "S1phat[3,1]", "--dmax", "3", "--mode", "lgf-pascal"});
  std::function<void(const json&)> walk = [&](const json& v) {
    EXPECT_FALSE(v.is_number_float());
    if (v.is_structured())
      for (const auto& c : v) walk(c);
  };
  walk(j);
}

}  // namespace
}  // namespace tforge
