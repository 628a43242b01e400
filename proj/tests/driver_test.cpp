// Copyright 2026 The Authors.
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

#include "capalg/driver.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>

#include "capalg/biconvex.hpp"
#include "capalg/errors.hpp"
#include "capalg/json_io.hpp"
#include "doctest.h"

namespace capalg {
namespace {

namespace fs = std::filesystem;

std::string data(const std::string& name) { return std::string(CAPALG_DATA_DIR) + "/" + name; }

std::string temp_file(const std::string& name, const std::string& text) {
  const fs::path p = fs::temp_directory_path() / ("capalg_driver_test_" + name);
  std::ofstream(p) << text;
  return p.string();
}

const LawTally& find(const Report& r, const std::string& name) {
  auto it = std::find_if(r.checks.begin(), r.checks.end(), [&](const LawTally& t) { return t.name == name; });
  REQUIRE(it != r.checks.end());
  return *it;
}

TEST_CASE("names") {
  CHECK(parse_command("full-xi") == Command::kFullXi);
  CHECK(command_name(Command::kEmbedSearch) == "embed-search");
  CHECK_THROWS_AS(parse_command("nope"), ParseError);
  CHECK(parse_mode("random") == RunMode::kRandom);
  CHECK_THROWS_AS(parse_mode("sometimes"), ParseError);
}

TEST_CASE("monad-laws") {
  RunConfig c;
  c.command = Command::kMonadLaws;
  c.space_path = data("space2.json");
  const Report r = run(c);
  CHECK(r.passed());
  CHECK(exit_code(r) == 0);
  CHECK(find(r, "unit-law").checked == 18);
  c.space_path.reset();
  CHECK_THROWS_AS(run(c), ParseError);
}

TEST_CASE("roundtrip on the chain model") {
  RunConfig c;
  c.command = Command::kRoundtrip;
  c.structure_path = data("chain_convex.json");
  const Report r = run(c);
  CHECK(r.passed());
  CHECK(find(r, "ic-xi-ic").checked == 1);
}

TEST_CASE("malformed input") {
  RunConfig c;
  c.command = Command::kRoundtrip;
  c.structure_path = temp_file("bad.json", "{\"chain_k\": 2, ");
  CHECK_THROWS_AS(run(c), ParseError);
  c.structure_path = data("missing.json");
  CHECK_THROWS_AS(run(c), ParseError);
  c.command = Command::kEmbedSearch;
  c.structure_path = data("chain_convex.json");
  CHECK_THROWS_AS(run(c), InvalidInput);
}

TEST_CASE("law failures give exit code 1") {
  const Chain k2(2);
  const BiconvexStructure swapped = BiconvexStructure::from_functions(
      FiniteSpace({"0", "1/2", "1"}), k2, [](int x, int y) { return std::max(x, y); },
      [](int x, int y) { return std::min(x, y); }, [](int a, int x) { return std::max(a, x); },
      [](int a, int x) { return std::min(a, x); });
  RunConfig c;
  c.command = Command::kBiconvexLaws;
  c.structure_path = temp_file("swapped.json", to_json(swapped));
  const Report r = run(c);
  CHECK_FALSE(r.passed());
  CHECK(exit_code(r) == 1);
  CHECK(find(r, "smeet-axiom-6").failed > 0);
  const std::string j = report_json(r, c);
  CHECK(j.find("\"verdict\": \"fail\"") != std::string::npos);
}

TEST_CASE("reports are deterministic") {
  RunConfig c;
  c.command = Command::kFullXi;
  c.structure_path = data("chain_biconvex.json");
  c.mode = RunMode::kRandom;
  c.samples = 50;
  c.seed = 7;
  const Report a = run(c);
  const Report b = run(c);
  CHECK(report_json(a, c) == report_json(b, c));
  CHECK(a.passed());
  CHECK(report_json(a, c).find("\"outcome\": \"agreement\"") != std::string::npos);
}

TEST_CASE("embed-search records the diamond") {
  RunConfig c;
  c.command = Command::kEmbedSearch;
  c.structure_path = data("diamond.json");
  c.max_a = 3;
  const Report r = run(c);
  CHECK(r.passed());
  const std::string j = report_json(r, c);
  CHECK(j.find("\"a_size\": 2") != std::string::npos);
}

TEST_CASE("enumerate") {
  RunConfig c;
  c.command = Command::kEnumerate;
  c.space_path = data("space3.json");
  const Report r = run(c);
  CHECK(r.passed());
  const auto it = std::find_if(r.findings.begin(), r.findings.end(), [](const Finding& f) { return f.key == "capacities"; });
  REQUIRE(it != r.findings.end());
  CHECK(it->json == "129");
}

}  // namespace
}  // namespace capalg
