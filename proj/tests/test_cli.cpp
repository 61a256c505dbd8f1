// Copyright 2026 The qmod Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <cstdlib>
#include <sstream>

#include "cli.hpp"

namespace qmod::cli {
namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "qmod");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run_cli(int(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

TEST(CliBuild, AddInHeader) {
  Result r = run({"build", "--op", "add-in", "--k", "3", "--modulus", "5"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out.rfind("qubits 5\n", 0), 0u);
  EXPECT_EQ(parse_text(r.out), add_in_const(3, 5).circuit);
}

TEST(CliBuild, RejectsOutOfRangeK) {
  Result r = run({"build", "--op", "add-in", "--k", "9", "--modulus", "5"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("k out of range"), std::string::npos);
  EXPECT_TRUE(r.out.empty());
}

TEST(CliBuild, RejectsNonInvertible) {
  Result r = run({"build", "--op", "mult-in", "--k", "4", "--modulus", "8"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("not invertible"), std::string::npos);
}

TEST(CliBuild, UsageErrors) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"build", "--op", "add-in"}).code, 2);
  EXPECT_EQ(run({"build", "--op", "nope", "--modulus", "5"}).code, 2);
  EXPECT_EQ(run({"build", "--op", "add-in-qq", "--modulus", "5", "--construction", "x"}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({"--help"}).code, 0);
}

TEST(CliRun, Examples) {
  Result a = run({"run", "--op", "add-in", "--k", "3", "--modulus", "5", "--input", "4", "--shots", "0"});
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, "4 -> 2\n");
  Result e = run({"run", "--op", "exp", "--base", "7", "--modulus", "15", "--input", "0", "--shots", "0"});
  EXPECT_EQ(e.code, 0);
  EXPECT_EQ(e.out, "0 -> 1\n");
  Result m = run({"run", "--op", "mult-out-qq", "--modulus", "5", "--input", "3,4", "--shots", "0"});
  EXPECT_EQ(m.code, 0);
  EXPECT_EQ(m.out, "(3,4) -> 2\n");
}

TEST(CliRun, ShotsPrintHistogram) {
  Result r = run({"run", "--op", "add-in", "--k", "3", "--modulus", "5", "--input", "4", "--shots", "10"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "4 -> 2 : 10\n");
}

TEST(CliRun, InputValidation) {
  EXPECT_EQ(run({"run", "--op", "add-in", "--k", "3", "--modulus", "5", "--input", "5"}).code, 2);
  EXPECT_EQ(run({"run", "--op", "add-in-qq", "--modulus", "5", "--input", "3"}).code, 2);
  EXPECT_EQ(run({"run", "--op", "add-in", "--k", "3", "--modulus", "5", "--input", "x"}).code, 2);
}

TEST(CliResources, SingleReportKeys) {
  Result r = run({"resources", "--op", "add-in", "--k", "3", "--modulus", "5"});
  ASSERT_EQ(r.code, 0);
  auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["qubits"], 5);
  EXPECT_EQ(j["ancilla"], 2);
  EXPECT_TRUE(j["depth"].is_number_integer());
  EXPECT_EQ(j["gates"].size(), 8u);
  EXPECT_FALSE(j.contains("slope"));
  // stable output
  EXPECT_EQ(run({"resources", "--op", "add-in", "--k", "3", "--modulus", "5"}).out, r.out);
}

TEST(CliResources, SweepSlopes) {
  Result add = run({"resources", "--op", "add-in", "--sweep", "3:8"});
  ASSERT_EQ(add.code, 0);
  auto a = nlohmann::json::parse(add.out);
  EXPECT_EQ(a["reports"].size(), 6u);
  EXPECT_NEAR(a["slope"].get<double>(), 1.0, 0.3);
  Result exp = run({"resources", "--op", "exp", "--sweep", "3:6"});
  ASSERT_EQ(exp.code, 0);
  EXPECT_NEAR(nlohmann::json::parse(exp.out)["slope"].get<double>(), 3.0, 0.4);
  EXPECT_EQ(run({"resources", "--op", "exp", "--sweep", "6:3"}).code, 2);
}

TEST(CliShor, Examples) {
  Result r = run({"shor", "--base", "7", "--modulus", "15", "--t", "8", "--shots", "1000", "--seed", "42"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("period 4 verified"), std::string::npos) << r.out;
  Result f = run({"shor", "--base", "4", "--modulus", "15", "--t", "8", "--shots", "1000", "--seed", "42"});
  EXPECT_EQ(f.code, 0);
  EXPECT_NE(f.out.find("period 2 verified"), std::string::npos);
  Result g = run({"shor", "--base", "6", "--modulus", "15"});
  EXPECT_EQ(g.code, 2);
  EXPECT_NE(g.err.find("gcd = 3"), std::string::npos);
}

TEST(CliShor, Factor) {
  Result r = run({"shor", "--base", "7", "--modulus", "15", "--t", "8", "--seed", "1", "--factor"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("factors 3 5"), std::string::npos) << r.out;
}

TEST(CliVerify, Examples) {
  EXPECT_EQ(run({"verify", "--op", "add-in", "--k", "3", "--modulus", "5"}).code, 0);
  EXPECT_EQ(run({"verify", "--op", "mult-in", "--k", "4", "--modulus", "8"}).code, 2);
  Result r = run({"verify", "--op", "add-out-qq", "--modulus", "7"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("49 cases, 49 passed"), std::string::npos) << r.out;
  Result v = run({"verify", "--op", "add-in", "--k", "1", "--modulus", "3", "--verbose"});
  EXPECT_EQ(v.code, 0);
  EXPECT_NE(v.out.find("2 -> 0 fidelity 1 clean 1 PASS"), std::string::npos) << v.out;
  EXPECT_EQ(run({"verify", "--op", "add-in", "--k", "1", "--modulus", "65"}).code, 2);
}

TEST(CliEnv, QubitCeiling) {
  const std::size_t saved = max_qubits();
  ::setenv("QMOD_MAX_QUBITS", "10", 1);
  Result r = run({"shor", "--base", "7", "--modulus", "15"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("qubits"), std::string::npos);
  ::setenv("QMOD_MAX_QUBITS", "ten", 1);
  EXPECT_EQ(run({"build", "--op", "add-in", "--k", "1", "--modulus", "3"}).code, 2);
  ::unsetenv("QMOD_MAX_QUBITS");
  set_max_qubits(saved);
}

}  // namespace
}  // namespace qmod::cli
