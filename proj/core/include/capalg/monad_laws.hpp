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

#ifndef CAPALG_MONAD_LAWS_HPP
#define CAPALG_MONAD_LAWS_HPP

#include <cstdint>
#include <vector>

#include "capalg/chain.hpp"
#include "capalg/law_tally.hpp"

namespace capalg {

/// Idempotent-semiring, lattice and complement laws on every level pair
/// and triple of the chain. Laws: "join-monoid", "meet-monoid",
/// "distributivity", "absorption", "zero-annihilates", "complement".
std::vector<LawTally> tally_chain_laws(Chain chain);

struct MonadLawOptions {
  /// Enumerate where feasible; otherwise everything is sampled.
  bool exhaustive = true;
  std::size_t samples = 1000;
  std::uint64_t seed = 0;
};

/// Laws of the inclusion hyperspace monad on an n-point carrier, n <= 4.
/// "g-unit-law": both unit laws on elements of GX (all of them when
/// exhaustive) and "g-unit-law-2" the same on elements of G^2 X;
/// "g-multiplication-law": associativity on elements of G^3 X. Exhaustive
/// mode covers every element of G^3 X generated by one set of at most two
/// elements of G^2 X (n <= 2), plus `samples` random elements.
std::vector<LawTally> tally_g_monad_laws(int n, const MonadLawOptions& options = {});

/// Laws of the capacity monad on n points. "unit-law": both unit laws per
/// capacity (every capacity when exhaustive); "multiplication-law":
/// associativity on `samples` random elements of M^3 X built over random
/// finite index collections.
std::vector<LawTally> tally_capacity_monad_laws(int n, Chain chain, const MonadLawOptions& options = {});

}  // namespace capalg

#endif  // CAPALG_MONAD_LAWS_HPP
