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

#ifndef CAPALG_CONVEXITY_HPP
#define CAPALG_CONVEXITY_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "capalg/capacity.hpp"
#include "capalg/chain.hpp"
#include "capalg/errors.hpp"
#include "capalg/finite_space.hpp"
#include "capalg/law_tally.hpp"

namespace capalg {

/// A ternary table ic(x, a, y) = "x + a*y" on a finite carrier, with a a
/// chain level. Whether it is an idempotent convex combination is decided
/// by check_ic_axioms(), not at construction.
class ConvexStructure {
 public:
  /// `table` is indexed [(x * levels + a) * n + y]. Throws InvalidInput on a
  /// wrong size or out-of-range entry.
  ConvexStructure(FiniteSpace space, Chain chain, std::vector<std::uint8_t> table);

  template <class Fn>
  static ConvexStructure from_function(FiniteSpace space, Chain chain, Fn&& fn) {
    const int n = space.size();
    std::vector<std::uint8_t> t(static_cast<std::size_t>(n) * chain.size() * n);
    for (int x = 0; x < n; ++x)
      for (int a = 0; a < chain.size(); ++a)
        for (int y = 0; y < n; ++y) t[(x * chain.size() + a) * n + y] = static_cast<std::uint8_t>(fn(x, a, y));
    return ConvexStructure(std::move(space), chain, std::move(t));
  }

  const FiniteSpace& space() const { return space_; }
  int size() const { return space_.size(); }
  const Chain& chain() const { return chain_; }
  const std::vector<std::uint8_t>& table() const { return table_; }

  int ic(int x, int a, int y) const { return table_[(x * chain_.size() + a) * size() + y]; }
  /// x v y = ic(x, 1, y).
  int join(int x, int y) const { return ic(x, chain_.top_index(), y); }

  friend bool operator==(const ConvexStructure&, const ConvexStructure&) = default;

 private:
  FiniteSpace space_;
  Chain chain_;
  std::vector<std::uint8_t> table_;
};

/// Axioms 1) to 5) over every x, y, z, a, b, plus the semilattice laws of
/// the derived join (implied by 1) to 4); a failure there is reported too).
/// Codes "axiom-1" ... "axiom-5", "join-semilattice".
Diagnostics check_ic_axioms(const ConvexStructure& s);
/// Per-axiom case counts behind check_ic_axioms.
std::vector<LawTally> tally_ic_axioms(const ConvexStructure& s);

/// Topological conditions that hold vacuously on finite discrete carriers,
/// listed in reports as such.
std::vector<std::string> vacuous_conditions();

/// y + a*sup(F) = sup{y + a*x : x in F} for every nonempty F, y, a.
Diagnostics check_distributive_law(const ConvexStructure& s);

/// The dual table ci(x, a, y) = "x * (a + y)".
class DualConvexStructure {
 public:
  DualConvexStructure(FiniteSpace space, Chain chain, std::vector<std::uint8_t> table);

  template <class Fn>
  static DualConvexStructure from_function(FiniteSpace space, Chain chain, Fn&& fn) {
    const int n = space.size();
    std::vector<std::uint8_t> t(static_cast<std::size_t>(n) * chain.size() * n);
    for (int x = 0; x < n; ++x)
      for (int a = 0; a < chain.size(); ++a)
        for (int y = 0; y < n; ++y) t[(x * chain.size() + a) * n + y] = static_cast<std::uint8_t>(fn(x, a, y));
    return DualConvexStructure(std::move(space), chain, std::move(t));
  }

  const FiniteSpace& space() const { return space_; }
  int size() const { return space_.size(); }
  const Chain& chain() const { return chain_; }

  int ci(int x, int a, int y) const { return table_[(x * chain_.size() + a) * size() + y]; }
  /// x ^ y = ci(x, 0, y).
  int meet(int x, int y) const { return ci(x, 0, y); }

  friend bool operator==(const DualConvexStructure&, const DualConvexStructure&) = default;

 private:
  FiniteSpace space_;
  Chain chain_;
  std::vector<std::uint8_t> table_;
};

/// The dual axioms: ci(x,a,x) = x; ci(ci(x,a,y),b,z) = ci(ci(x,b,z),a,y);
/// ci(x,a,ci(y,b,z)) = ci(ci(x,a,y),max(a,b),z); ci(x,0,y) = ci(y,0,x);
/// ci(x,1,y) = x.
Diagnostics check_ci_axioms(const DualConvexStructure& s);

/// The chain itself as carrier (points named by their levels) with
/// ic(x, a, y) = max(x, min(a, y)).
ConvexStructure chain_model_convex(Chain chain);
/// Chain carrier with ci(x, a, y) = min(x, max(a, y)).
DualConvexStructure chain_model_dual_convex(Chain chain);

/// Coefficients of an n-ary combination.
class SimplexPoint {
 public:
  /// Max of the coefficients is 1. Throws InvalidInput otherwise.
  static SimplexPoint join_simplex(Chain chain, std::vector<int> coefficients);
  /// Min of the coefficients is 0. Throws InvalidInput otherwise.
  static SimplexPoint meet_simplex(Chain chain, std::vector<int> coefficients);

  const Chain& chain() const { return chain_; }
  const std::vector<int>& coefficients() const { return coefficients_; }
  bool is_join_simplex() const { return join_; }

 private:
  SimplexPoint(Chain chain, std::vector<int> c, bool join)
      : chain_(chain), coefficients_(std::move(c)), join_(join) {}

  Chain chain_;
  std::vector<int> coefficients_;
  bool join_;
};

/// a0 x0 + ... + an xn: starting from the first point whose coefficient is
/// 1, fold the remaining summands in index order with ic. Throws
/// InvalidInput unless the coefficients lie in the join simplex and the
/// lengths match.
int nary_combination(const ConvexStructure& s, const SimplexPoint& coefficients, std::span<const int> points);

/// sup{ x0 + a*x : x in X, a <= c(x) } in the derived semilattice, where
/// c(x0) = 1. `base` picks x0; by default the first point of density 1.
/// Throws InvalidInput if `base` has density below 1 and CarrierMismatch /
/// ChainMismatch on mismatched inputs.
int structure_map_from_ic(const ConvexStructure& s, const PossibilityCapacity& c,
                          std::optional<int> base = std::nullopt);

/// inf{ ci(x0, a, x) : x in X, a >= c(X \ {x}) } where c(X \ {x0}) = 0.
int dual_structure_map(const DualConvexStructure& s, const NecessityCapacity& c,
                       std::optional<int> base = std::nullopt);

/// Every base choice gives the same value, for every union capacity on the
/// carrier. Code "base-dependence".
Diagnostics check_base_independence(const ConvexStructure& s);
/// Dual counterpart over every intersection capacity.
Diagnostics check_base_independence(const DualConvexStructure& s);

/// A map from the union capacities on X into X, as a table over
/// enumerate_capacities(n, chain, kUnion).
class StructureMapUnion {
 public:
  /// Throws InvalidInput on a wrong-sized table or out-of-range value.
  StructureMapUnion(FiniteSpace space, Chain chain, std::vector<int> table);
  /// The map c -> structure_map_from_ic(s, c).
  static StructureMapUnion from_convex(const ConvexStructure& s);

  const FiniteSpace& space() const { return space_; }
  const Chain& chain() const { return chain_; }
  const CapacityCatalog& domain() const { return *domain_; }
  const std::vector<int>& table() const { return table_; }

  /// Throws InvalidInput for a capacity outside the domain.
  int operator()(const PossibilityCapacity& c) const;
  int operator()(const Capacity& c) const;

  friend bool operator==(const StructureMapUnion& a, const StructureMapUnion& b) {
    return a.space_ == b.space_ && a.chain_ == b.chain_ && a.table_ == b.table_;
  }

 private:
  FiniteSpace space_;
  Chain chain_;
  std::shared_ptr<const CapacityCatalog> domain_;
  std::vector<int> table_;
};

/// The shared, cached catalog of union capacities on n points.
std::shared_ptr<const CapacityCatalog> union_catalog(int n, Chain chain);

struct LawCheckOptions {
  /// Second-order inputs are enumerated when there are at most this many,
  /// otherwise sampled.
  std::size_t exhaustive_limit = 5000;
  std::size_t samples = 500;
  std::uint64_t seed = 0;
};

/// Unit law xi(delta_x) = x for every x and the multiplication law
/// xi(M xi (C)) = xi(mu(C)) over second-order union capacities C (whose
/// points are the union capacities on X). Codes "unit-law",
/// "multiplication-law", "submonad-closure".
Diagnostics check_algebra_laws(const StructureMapUnion& xi, const LawCheckOptions& options = {});
std::vector<LawTally> tally_algebra_laws(const StructureMapUnion& xi, const LawCheckOptions& options = {});

/// ic(x, a, y) = xi(delta_x v a*delta_y). Throws InvalidInput if xi fails
/// the algebra laws.
ConvexStructure ic_from_structure_map(const StructureMapUnion& xi, const LawCheckOptions& options = {});

/// f(ic(x, a, y)) = ic'(f(x), a, f(y)) for all x, a, y.
bool is_affine(const PointMap& f, const ConvexStructure& s, const ConvexStructure& t);

struct MorphismCheck {
  bool is_morphism = false;
  bool is_affine = false;
  /// A union capacity where f xi != xi' Mf, or a triple where affinity
  /// fails; empty when both sides hold.
  std::string witness;
  bool agree() const { return is_morphism == is_affine; }
};

/// Compares "f is an algebra morphism" with "f is affine for the derived
/// combinations".
MorphismCheck morphism_equivalence_check(const PointMap& f, const StructureMapUnion& xi,
                                         const StructureMapUnion& xi_prime);
/// Same with the convex structures already at hand.
MorphismCheck morphism_equivalence_check(const PointMap& f, const ConvexStructure& s, const StructureMapUnion& xi,
                                         const ConvexStructure& t, const StructureMapUnion& xi_prime);

/// Scalars acting on a semimodule: (max, min, 0, 1) or (min, max, 1, 0).
enum class ScalarSemiring { kMaxMin, kMinMax };

/// An idempotent semimodule over the chain: `add` is the module addition
/// and `scale` the scalar action.
class Semimodule {
 public:
  /// add indexed [x * m + y], scale indexed [a * m + x].
  Semimodule(FiniteSpace space, Chain chain, std::vector<std::uint8_t> add, std::vector<std::uint8_t> scale,
             int zero);

  const FiniteSpace& space() const { return space_; }
  int size() const { return space_.size(); }
  const Chain& chain() const { return chain_; }
  int zero() const { return zero_; }
  int add(int x, int y) const { return add_[x * size() + y]; }
  int scale(int a, int x) const { return scale_[a * size() + x]; }
  const std::vector<std::uint8_t>& add_table() const { return add_; }
  const std::vector<std::uint8_t>& scale_table() const { return scale_; }

  friend bool operator==(const Semimodule&, const Semimodule&) = default;

 private:
  FiniteSpace space_;
  Chain chain_;
  std::vector<std::uint8_t> add_;
  std::vector<std::uint8_t> scale_;
  int zero_;
};

/// Axioms 1) to 7), exhaustively. Codes "axiom-1" ... "axiom-7".
Diagnostics check_semimodule_axioms(const Semimodule& m,
                                    ScalarSemiring semiring = ScalarSemiring::kMaxMin);
std::vector<LawTally> tally_semimodule_axioms(const Semimodule& m,
                                              ScalarSemiring semiring = ScalarSemiring::kMaxMin);

/// The semimodule of profiles gr(x, a) = (ic(t, a, x))_t together with the
/// embedding x -> [(x, 1)].
struct QuotientSemimodule {
  Semimodule module;
  PointMap embedding;
  /// profiles[q] is the profile of class q.
  std::vector<std::vector<int>> profiles;
  /// (x, a) -> class, indexed [x * levels + a].
  std::vector<int> class_of;
  /// Representative-dependence of the operations, if any.
  Diagnostics consistency;
};

/// Throws InvalidInput if s fails check_ic_axioms.
QuotientSemimodule quotient_semimodule(const ConvexStructure& s);

/// i(ic(x, a, y)) = i(x) + a*i(y) for all x, a, y, injectivity of i, and
/// convexity of its image.
Diagnostics check_quotient_embedding(const ConvexStructure& s, const QuotientSemimodule& q);

/// Every convex structure on n points (named x0, ...) for the chain.
/// Throws BudgetExceeded when the candidate space passes `max_candidates`.
std::vector<ConvexStructure> enumerate_convex_structures(int n, Chain chain,
                                                         std::size_t max_candidates = 5'000'000);

}  // namespace capalg

#endif  // CAPALG_CONVEXITY_HPP
