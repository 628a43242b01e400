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

#ifndef CAPALG_RANDOM_HPP
#define CAPALG_RANDOM_HPP

#include <cstdint>
#include <random>

namespace capalg {

// Seeded generator with a platform-independent draw; std::mt19937_64 is
// fully specified, the std distributions are not.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  // Uniform-ish integer in [0, n). n > 0.
  std::uint64_t below(std::uint64_t n) { return engine_() % n; }
  int between(int lo, int hi) {  // inclusive
    return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi - lo + 1)));
  }
  bool coin() { return (engine_() >> 17) & 1U; }

 private:
  std::mt19937_64 engine_;
};

}  // namespace capalg

#endif  // CAPALG_RANDOM_HPP
