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

#ifndef CAPALG_DRIVER_HPP
#define CAPALG_DRIVER_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "capalg/law_tally.hpp"

namespace capalg {

enum class Command { kMonadLaws, kAlgebraLaws, kRoundtrip, kBiconvexLaws, kFullXi, kEmbedSearch, kEnumerate };
enum class RunMode { kExhaustive, kRandom };

/// Throws ParseError for an unknown name.
Command parse_command(const std::string& name);
std::string command_name(Command c);
RunMode parse_mode(const std::string& name);
std::string mode_name(RunMode m);

struct RunConfig {
  Command command = Command::kMonadLaws;
  /// {"elements": [...]}; gives the carrier for commands without a
  /// structure.
  std::optional<std::string> space_path;
  /// A convex, semimodule, biconvex, triple or cube document.
  std::optional<std::string> structure_path;
  int chain_k = 2;
  RunMode mode = RunMode::kExhaustive;
  std::size_t samples = 500;
  std::uint64_t seed = 0;
  int max_a = 2;
  /// Bound on enumerated candidates and searched tuples.
  std::size_t budget = 5'000'000;
};

/// A value worth reporting that is not a pass/fail count. `json` holds a
/// JSON text (number, string literal, object, ...).
struct Finding {
  std::string key;
  std::string json;
};

struct Report {
  Command command = Command::kMonadLaws;
  std::vector<LawTally> checks;
  std::vector<Finding> findings;
  std::vector<std::string> notes;

  std::size_t checked() const;
  std::size_t failed() const;
  bool passed() const { return failed() == 0; }
};

/// Runs one command. Throws Error (ParseError, InvalidInput,
/// UnknownElement, BudgetExceeded, ...) when inputs are missing, malformed
/// or past the size guards; law failures are reported, never thrown.
Report run(const RunConfig& config);

/// Deterministic JSON: command, config, checks (witnesses sorted by length
/// then text), totals, findings, notes, verdict. No timing.
std::string report_json(const Report& report, const RunConfig& config);

/// A few human-readable lines.
std::string report_summary(const Report& report);

/// 0 on pass, 1 on any law failure.
int exit_code(const Report& report);

}  // namespace capalg

#endif  // CAPALG_DRIVER_HPP
