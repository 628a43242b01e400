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

#ifndef CAPALG_CHAIN_HPP
#define CAPALG_CHAIN_HPP

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace capalg {

class Chain;

/// An element i/k of a uniform finite chain {0, 1/k, ..., 1}.
///
/// Levels are exact rationals: equality and ordering compare the rational
/// values, so 1/2 on the k=2 chain equals 2/4 on the k=4 chain. The lattice
/// operations, however, refuse to mix chains.
class Level {
 public:
  int index() const { return index_; }
  int resolution() const { return resolution_; }

  /// Reduced numerator and denominator of index/resolution.
  int numerator() const;
  int denominator() const;

  bool is_zero() const { return index_ == 0; }
  bool is_one() const { return index_ == resolution_; }

  /// "0", "1" or reduced "p/q".
  std::string to_string() const;

  friend bool operator==(Level a, Level b) {
    return static_cast<long>(a.index_) * b.resolution_ ==
           static_cast<long>(b.index_) * a.resolution_;
  }
  friend std::strong_ordering operator<=>(Level a, Level b) {
    return static_cast<long>(a.index_) * b.resolution_ <=>
           static_cast<long>(b.index_) * a.resolution_;
  }

 private:
  friend class Chain;
  Level(int index, int resolution) : index_(index), resolution_(resolution) {}

  int index_;
  int resolution_;
};

/// The (max, min) idempotent semiring on k+1 equally spaced levels of [0, 1].
class Chain {
 public:
  /// Largest supported resolution; level indices are stored in one byte.
  static constexpr int kMaxResolution = 64;

  /// Throws InvalidResolution unless 1 <= k <= kMaxResolution.
  explicit Chain(int k);

  int resolution() const { return k_; }
  int size() const { return k_ + 1; }
  int top_index() const { return k_; }

  /// Throws InvalidInput if the index is outside [0, k].
  Level level(int index) const;
  Level zero() const { return Level(0, k_); }
  Level one() const { return Level(k_, k_); }
  std::vector<Level> levels() const;

  bool contains(Level a) const { return a.resolution_ == k_; }

  /// Parses "0", "1" or "p/q". The value must lie on this chain (1/2 is
  /// accepted on k=4 as index 2, rejected on k=3). Throws ParseError.
  Level parse(std::string_view text) const;

  friend bool operator==(const Chain&, const Chain&) = default;

 private:
  int k_;
};

/// Same as Chain(k).
Chain make_chain(int k);

/// max(a, b); throws ChainMismatch when a and b come from different chains.
Level join(Level a, Level b);
/// min(a, b); throws ChainMismatch when a and b come from different chains.
Level meet(Level a, Level b);
/// 1 - a on the same chain.
Level complement(Level a);

}  // namespace capalg

#endif  // CAPALG_CHAIN_HPP
