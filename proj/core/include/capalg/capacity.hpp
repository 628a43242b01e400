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

#ifndef CAPALG_CAPACITY_HPP
#define CAPALG_CAPACITY_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <variant>
#include <vector>

#include "capalg/chain.hpp"
#include "capalg/errors.hpp"
#include "capalg/finite_space.hpp"
#include "capalg/random.hpp"

namespace capalg {

/// Largest carrier for which a set function is stored as a full table.
inline constexpr int kMaxTableCarrier = 20;

/// Default bound on the index carrier of a second-order capacity.
inline constexpr int kDefaultIndexBudget = 64;

/// A chain-valued function on every subset (including the empty set) of an
/// n-point carrier. No invariants: subnormal and non-monotone functions are
/// representable so that intermediate expressions and bad inputs can be
/// inspected with validate().
class SetFunction {
 public:
  /// The zero function. n <= kMaxTableCarrier.
  SetFunction(int carrier_size, Chain chain);
  /// Raw level indices, one per subset bit pattern.
  SetFunction(int carrier_size, Chain chain, std::vector<std::uint8_t> raw);

  int carrier_size() const { return n_; }
  const Chain& chain() const { return chain_; }

  Level value(Subset s) const { return chain_.level(raw_[s.bits()]); }
  int raw(Subset s) const { return raw_[s.bits()]; }
  /// Throws ChainMismatch for a level from another chain.
  void set(Subset s, Level v);
  void set_raw(Subset s, int v) { raw_[s.bits()] = static_cast<std::uint8_t>(v); }
  const std::vector<std::uint8_t>& raw_values() const { return raw_; }

  friend bool operator==(const SetFunction&, const SetFunction&) = default;

 private:
  int n_;
  Chain chain_;
  std::vector<std::uint8_t> raw_;
};

/// Empty list iff sf(empty) = 0, sf is monotone, and (when required)
/// sf(X) = 1. Codes: "empty-set-nonzero", "not-normalized", "monotonicity".
Diagnostics validate(const SetFunction& sf, bool require_normalized);
Diagnostics validate(const SetFunction& sf, bool require_normalized, const FiniteSpace& names);

/// A possibility (union) capacity given by its density on points.
class PossibilityCapacity {
 public:
  /// Throws InvalidInput unless the density reaches 1.
  PossibilityCapacity(Chain chain, std::vector<std::uint8_t> density);
  PossibilityCapacity(Chain chain, const std::vector<Level>& density);

  int carrier_size() const { return static_cast<int>(density_.size()); }
  const Chain& chain() const { return chain_; }
  int raw_density(int x) const { return density_[x]; }
  Level density(int x) const { return chain_.level(density_[x]); }
  const std::vector<std::uint8_t>& raw_densities() const { return density_; }
  /// max of the density over s; 0 on the empty set.
  int raw(Subset s) const;

  friend bool operator==(const PossibilityCapacity&, const PossibilityCapacity&) = default;

 private:
  Chain chain_;
  std::vector<std::uint8_t> density_;
};

/// A necessity (intersection) capacity given by its codensity
/// x -> c(X \ {x}).
class NecessityCapacity {
 public:
  /// Throws InvalidInput unless the codensity reaches 0.
  NecessityCapacity(Chain chain, std::vector<std::uint8_t> codensity);
  NecessityCapacity(Chain chain, const std::vector<Level>& codensity);

  int carrier_size() const { return static_cast<int>(codensity_.size()); }
  const Chain& chain() const { return chain_; }
  int raw_codensity(int x) const { return codensity_[x]; }
  Level codensity(int x) const { return chain_.level(codensity_[x]); }
  const std::vector<std::uint8_t>& raw_codensities() const { return codensity_; }
  /// min of the codensity outside s; 1 on the whole carrier.
  int raw(Subset s) const;

  friend bool operator==(const NecessityCapacity&, const NecessityCapacity&) = default;

 private:
  Chain chain_;
  std::vector<std::uint8_t> codensity_;
};

/// A normalized monotone chain-valued set function on a carrier of up to
/// 64 points.
///
/// Small capacities are tables. Capacities on large index carriers (the
/// second-order capacities whose points are themselves capacities) are kept
/// symbolic: as a density, a codensity, a pushforward, a monad product or a
/// conjugate of other capacities, and are evaluated on demand.
class Capacity {
 public:
  /// Throws InvalidInput when validate(sf, true) reports anything.
  static Capacity from_table(SetFunction sf);
  /// Skips validation. For values already known to be capacities.
  static Capacity from_table_unchecked(SetFunction sf);

  Capacity(const PossibilityCapacity& c);  // NOLINT(google-explicit-constructor)
  Capacity(const NecessityCapacity& c);    // NOLINT(google-explicit-constructor)

  /// Lazy pushforward of `base` along `f`.
  static Capacity image(const Capacity& base, const PointMap& f);
  /// Lazy monad product of `outer` (a capacity on the index) over `index`.
  static Capacity lazy_mult(const Capacity& outer, std::vector<Capacity> index);
  /// Lazy conjugate F -> 1 - base(X \ F).
  static Capacity conjugate(const Capacity& base);

  int carrier_size() const { return n_; }
  const Chain& chain() const { return chain_; }

  int raw(Subset s) const;
  Level value(Subset s) const { return chain_.level(raw(s)); }

  /// Full table. Throws BudgetExceeded above kMaxTableCarrier points.
  SetFunction table() const;
  /// Same capacity stored as a table.
  Capacity materialized() const;
  bool is_table() const;

  /// Compares every value; both sides must fit in a table.
  friend bool operator==(const Capacity& a, const Capacity& b);

 private:
  struct TableRep {
    std::vector<std::uint8_t> values;
  };
  struct DensityRep {
    std::vector<std::uint8_t> density;
  };
  struct CodensityRep {
    std::vector<std::uint8_t> codensity;
  };
  struct ImageRep {
    std::shared_ptr<const Capacity> base;
    std::vector<int> map;
  };
  struct MultRep {
    std::shared_ptr<const Capacity> outer;
    std::shared_ptr<const std::vector<Capacity>> index;
  };
  struct ConjugateRep {
    std::shared_ptr<const Capacity> base;
  };
  using Rep = std::variant<TableRep, DensityRep, CodensityRep, ImageRep, MultRep, ConjugateRep>;

  Capacity(int n, Chain chain, Rep rep) : n_(n), chain_(chain), rep_(std::move(rep)) {}

  int n_;
  Chain chain_;
  Rep rep_;
};

/// Dirac capacity at x. Throws UnknownElement for x outside [0, n).
Capacity unit_dirac(int n, Chain chain, int x);
Capacity unit_dirac(const FiniteSpace& space, Chain chain, std::string_view name);

/// Mf(c)(F) = c(f^-1(F)). Throws CarrierMismatch.
Capacity pushforward(const PointMap& f, const Capacity& c);

/// The monad multiplication. `outer` is a capacity whose i-th point is
/// index[i]; the result maps F to the largest level a with
/// outer({i : index[i](F) >= a}) >= a. The index may be all capacities on X
/// or any sub-collection (the product then equals mu composed with the
/// inclusion's pushforward). Throws CarrierMismatch, ChainMismatch and
/// BudgetExceeded (index larger than `index_budget`).
Capacity mult(const Capacity& outer, std::span<const Capacity> index,
              int index_budget = kDefaultIndexBudget);

struct Classification {
  bool is_union = false;
  bool is_intersection = false;
  friend bool operator==(const Classification&, const Classification&) = default;
};

/// Checks c(A u B) = max and c(A n B) = min over every pair of subsets,
/// including disjoint pairs (where the second equation forces min = 0).
Classification classify(const Capacity& c);

/// Density of a union capacity; nullopt if c is not one.
std::optional<PossibilityCapacity> as_possibility(const Capacity& c);
/// Codensity of an intersection capacity; nullopt if c is not one.
std::optional<NecessityCapacity> as_necessity(const Capacity& c);

/// kappa(c)(F) = 1 - c(X \ F), as a table.
Capacity kappa_dual(const Capacity& c);

/// The {0,1}-valued capacity that is 1 exactly on members of h.
Capacity embed_inclusion_hyperspace(const InclusionHyperspace& h, int n, Chain chain);

SetFunction pointwise_join(const SetFunction& a, const SetFunction& b);
SetFunction pointwise_meet(const SetFunction& a, const SetFunction& b);
/// F -> min(alpha, sf(F)).
SetFunction scale_meet(Level alpha, const SetFunction& sf);
/// F -> max(alpha, sf(F)).
SetFunction scale_join(Level alpha, const SetFunction& sf);

enum class CapacityClass { kAll, kUnion, kIntersection };

/// Every capacity of the class on n points, each once, as tables.
/// Union and intersection capacities come in lexicographic order of their
/// (co)densities; general capacities in lexicographic order of the values
/// on nonempty proper subsets taken in canonical subset order.
/// Throws BudgetExceeded past `max_count` results or n > 6.
std::vector<Capacity> enumerate_capacities(int n, Chain chain, CapacityClass cls,
                                           std::size_t max_count = 1'000'000);

/// A random capacity: subsets are visited in canonical order and each gets a
/// uniform level between the largest value already fixed on its one-point
/// shrinks and 1; the carrier is fixed to 1.
Capacity random_capacity(int n, Chain chain, Rng& rng);
/// Random density with maximum 1 / codensity with minimum 0.
PossibilityCapacity random_possibility(int n, Chain chain, Rng& rng);
NecessityCapacity random_necessity(int n, Chain chain, Rng& rng);

/// Position lookup for a list of table capacities on a common carrier.
class CapacityCatalog {
 public:
  explicit CapacityCatalog(std::vector<Capacity> items);

  const std::vector<Capacity>& items() const { return items_; }
  std::size_t size() const { return items_.size(); }
  const Capacity& operator[](std::size_t i) const { return items_[i]; }
  /// Position of c, or -1.
  int find(const Capacity& c) const;

 private:
  std::vector<Capacity> items_;
  std::unordered_map<std::string, int> positions_;
};

/// Text form {a:1/2, b:1, ...} of the values on nonempty subsets; used in
/// diagnostics and witnesses.
std::string describe(const Capacity& c, const FiniteSpace& names);
std::string describe(const Capacity& c);

}  // namespace capalg

#endif  // CAPALG_CAPACITY_HPP
