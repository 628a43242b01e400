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

#ifndef CAPALG_LAW_TALLY_HPP
#define CAPALG_LAW_TALLY_HPP

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "capalg/errors.hpp"

namespace capalg {

/// Case counts for one named law, with the first few failures kept as
/// witnesses in the order the cases were visited.
struct LawTally {
  static constexpr std::size_t kMaxWitnesses = 10;

  std::string name;
  std::size_t checked = 0;
  std::size_t failed = 0;
  std::vector<std::string> witnesses;

  explicit LawTally(std::string law) : name(std::move(law)) {}

  bool ok() const { return failed == 0; }

  /// `describe` is only called for failures.
  template <class Describe>
  void record(bool holds, Describe&& describe) {
    ++checked;
    if (holds) return;
    ++failed;
    if (witnesses.size() < kMaxWitnesses) witnesses.push_back(describe());
  }
};

/// One diagnostic per kept witness, coded by law name.
inline Diagnostics to_diagnostics(const std::vector<LawTally>& tallies) {
  Diagnostics out;
  for (const auto& t : tallies) {
    for (const auto& w : t.witnesses) out.push_back({t.name, w});
  }
  return out;
}

}  // namespace capalg

#endif  // CAPALG_LAW_TALLY_HPP
