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

// capalg: runs law suites, round trips and searches on capacity algebras
// and writes a deterministic JSON report.
//
//   capalg monad-laws --space two.json --chain 2 --out report.json
//   capalg full-xi --structure chain.json --mode random --samples 1000
//
// Exit codes: 0 pass, 1 a law failed, 2 malformed or oversized input.

#include <chrono>
#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "capalg/driver.hpp"
#include "capalg/errors.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Law checks for capacity-monad algebras on finite carriers"};
  std::string command;
  std::string mode = "exhaustive";
  std::string space, structure, out;
  capalg::RunConfig config;

  app.add_option("command", command, "monad-laws | algebra-laws | roundtrip | biconvex-laws | full-xi | "
                                     "embed-search | enumerate")
      ->required();
  app.add_option("--space", space, "JSON {\"elements\": [...]} giving the carrier");
  app.add_option("--structure", structure, "JSON convex, semimodule, biconvex, triple or cube structure");
  app.add_option("--chain", config.chain_k, "chain resolution k (levels 0, 1/k, ..., 1)")->capture_default_str();
  app.add_option("--mode", mode, "exhaustive | random")->capture_default_str();
  app.add_option("--samples", config.samples, "random instances per sampled law")->capture_default_str();
  app.add_option("--seed", config.seed, "random seed")->capture_default_str();
  app.add_option("--max-a", config.max_a, "largest cube dimension for embed-search")->capture_default_str();
  app.add_option("--budget", config.budget, "bound on enumerated candidates and searched tuples")
      ->capture_default_str();
  app.add_option("--out", out, "where to write the JSON report");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  const auto start = std::chrono::steady_clock::now();
  capalg::Report report;
  try {
    config.command = capalg::parse_command(command);
    config.mode = capalg::parse_mode(mode);
    if (!space.empty()) config.space_path = space;
    if (!structure.empty()) config.structure_path = structure;
    report = capalg::run(config);
  } catch (const capalg::Error& e) {
    std::cerr << "capalg: " << e.what() << "\n";
    return 2;
  }
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

  if (!out.empty()) {
    std::ofstream file(out, std::ios::binary);
    if (!file) {
      std::cerr << "capalg: cannot write " << out << "\n";
      return 2;
    }
    file << capalg::report_json(report, config);
  }
  std::cout << capalg::report_summary(report);
  std::cout << "time: " << seconds << " s\n";
  return capalg::exit_code(report);
}
