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

#ifndef CAPALG_BICONVEX_HPP
#define CAPALG_BICONVEX_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "capalg/capacity.hpp"
#include "capalg/chain.hpp"
#include "capalg/convexity.hpp"
#include "capalg/errors.hpp"
#include "capalg/finite_space.hpp"
#include "capalg/law_tally.hpp"

namespace capalg {

/// Four operation tables on a finite carrier: lattice join and meet, the
/// scalar meet action a (.) x and the scalar join action a (+) x.
class BiconvexStructure {
 public:
  /// Binary tables indexed [x * n + y], actions indexed [a * n + x].
  /// Throws InvalidInput on wrong sizes or out-of-range values.
  BiconvexStructure(FiniteSpace space, Chain chain, std::vector<std::uint8_t> bjoin, std::vector<std::uint8_t> bmeet,
                    std::vector<std::uint8_t> smeet, std::vector<std::uint8_t> sjoin);

  template <class J, class M, class S, class P>
  static BiconvexStructure from_functions(FiniteSpace space, Chain chain, J&& j, M&& m, S&& s, P&& p) {
    const int n = space.size();
    std::vector<std::uint8_t> bj, bm, sm, sj;
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y) {
        bj.push_back(static_cast<std::uint8_t>(j(x, y)));
        bm.push_back(static_cast<std::uint8_t>(m(x, y)));
      }
    for (int a = 0; a < chain.size(); ++a)
      for (int x = 0; x < n; ++x) {
        sm.push_back(static_cast<std::uint8_t>(s(a, x)));
        sj.push_back(static_cast<std::uint8_t>(p(a, x)));
      }
    return BiconvexStructure(std::move(space), chain, std::move(bj), std::move(bm), std::move(sm), std::move(sj));
  }

  const FiniteSpace& space() const { return space_; }
  int size() const { return space_.size(); }
  const Chain& chain() const { return chain_; }

  int bjoin(int x, int y) const { return bjoin_[x * size() + y]; }
  int bmeet(int x, int y) const { return bmeet_[x * size() + y]; }
  int smeet(int a, int x) const { return smeet_[a * size() + x]; }
  int sjoin(int a, int x) const { return sjoin_[a * size() + x]; }

  const std::vector<std::uint8_t>& bjoin_table() const { return bjoin_; }
  const std::vector<std::uint8_t>& bmeet_table() const { return bmeet_; }
  const std::vector<std::uint8_t>& smeet_table() const { return smeet_; }
  const std::vector<std::uint8_t>& sjoin_table() const { return sjoin_; }

  /// Least and greatest elements for the join table, or -1.
  int bottom() const { return bottom_; }
  int top() const { return top_; }

  /// ic(x, a, y) = x [+] (a (.) y).
  ConvexStructure convex() const;
  /// ci(x, a, y) = x [-] (a (+) y).
  DualConvexStructure dual_convex() const;

  friend bool operator==(const BiconvexStructure& a, const BiconvexStructure& b) {
    return a.space_ == b.space_ && a.chain_ == b.chain_ && a.bjoin_ == b.bjoin_ && a.bmeet_ == b.bmeet_ &&
           a.smeet_ == b.smeet_ && a.sjoin_ == b.sjoin_;
  }

 private:
  FiniteSpace space_;
  Chain chain_;
  std::vector<std::uint8_t> bjoin_, bmeet_, smeet_, sjoin_;
  int bottom_ = -1;
  int top_ = -1;
};

/// The chain as carrier with max, min, min, max.
BiconvexStructure chain_model_biconvex(Chain chain);

/// Lattice laws, both semimodule structures (the meet action over
/// (max, min), the join action over (min, max)), and the mixed associative
/// and distributive laws.
std::vector<LawTally> tally_biconvex(const BiconvexStructure& b);
Diagnostics check_biconvex(const BiconvexStructure& b);

/// Whether the lattice is distributive. Not part of the definition, but
/// the two closed forms of the union and intersection structure maps rely
/// on it.
bool is_distributive_lattice(const BiconvexStructure& b);

/// A lattice with two level maps p (into joins) and m (into meets).
struct TripleStructure {
  FiniteSpace space;
  Chain chain;
  std::vector<std::uint8_t> bjoin;  // [x * n + y]
  std::vector<std::uint8_t> bmeet;
  std::vector<int> p;  // one entry per level
  std::vector<int> m;

  friend bool operator==(const TripleStructure&, const TripleStructure&) = default;
};

/// Lattice laws; p preserves joins and the top; m preserves meets and the
/// bottom; m(a) [-] p(b) = p(min(a, b)) and m(a) [+] p(b) = m(max(a, b)).
Diagnostics check_triple(const TripleStructure& t);

/// p(a) = a (+) bottom, m(a) = a (.) top. Throws InvalidInput for an
/// invalid source.
TripleStructure triple_from_biconvex(const BiconvexStructure& b);
/// a (.) x = m(a) [-] x, a (+) x = p(a) [+] x. Throws InvalidInput for an
/// invalid source.
BiconvexStructure biconvex_from_triple(const TripleStructure& t);

/// The union structure map: value of sup{c(x) (.) x}, and the dual form
/// inf{c(X \ A) (+) sup A} over nonempty A.
struct ClosedForms {
  int value = 0;
  int dual_form = 0;
  bool agree() const { return value == dual_form; }
};
ClosedForms possibility_closed_forms(const BiconvexStructure& b, const PossibilityCapacity& c);
/// inf{c(X \ {x}) (+) x}, and the dual form sup{c(A) (.) inf A} over nonempty A.
/// (The variant with c(X \ A) already fails on the Dirac measure at 0.)
ClosedForms necessity_closed_forms(const BiconvexStructure& b, const NecessityCapacity& c);
int structure_map_possibility(const BiconvexStructure& b, const PossibilityCapacity& c);
int structure_map_necessity(const BiconvexStructure& b, const NecessityCapacity& c);

/// Which factorization of the monad product is used to reach an arbitrary
/// capacity: union capacities over intersection capacities, or the dual.
enum class Diagram { kUnionOverIntersection, kIntersectionOverUnion };

/// The finite sets of union and intersection capacities on a carrier, with
/// preimage search under the monad product.
class PreimageAtlas {
 public:
  PreimageAtlas(int n, Chain chain);

  int carrier_size() const { return n_; }
  const Chain& chain() const { return chain_; }
  const CapacityCatalog& unions() const { return unions_; }
  const CapacityCatalog& intersections() const { return intersections_; }
  /// The index the second-order capacities of `d` live on.
  const CapacityCatalog& index(Diagram d) const {
    return d == Diagram::kUnionOverIntersection ? intersections_ : unions_;
  }

  /// Second-order capacities C over index(d) (union ones given by density
  /// for the first diagram, intersection ones by codensity for the second)
  /// with mult(C) = c. The extremal preimage comes first, then preimages
  /// of smallest support in increasing size and lexicographic order, each
  /// confirmed with mult(). At most `limit`; empty when c has none.
  std::vector<Capacity> preimages(const Capacity& c, Diagram d, std::size_t limit = 8) const;

 private:
  int n_;
  Chain chain_;
  CapacityCatalog unions_;
  CapacityCatalog intersections_;
};

/// Shared atlas per (n, k).
std::shared_ptr<const PreimageAtlas> preimage_atlas(int n, Chain chain);

/// xi(c) through the chosen diagram and the first preimage found: the union
/// structure map applied to the pushforward of C along the intersection
/// structure map (or dually). nullopt when no preimage exists.
std::optional<int> structure_map_full(const BiconvexStructure& b, const Capacity& c,
                                      Diagram d = Diagram::kUnionOverIntersection);
/// Value through a given preimage.
int structure_map_through(const BiconvexStructure& b, const Capacity& preimage, Diagram d);

/// sup over nonempty F of c(F) (.) inf F.
int sugeno_form(const BiconvexStructure& b, const Capacity& c);

/// A map from all capacities on X into X, as a table over
/// enumerate_capacities(n, chain, kAll).
class FullStructureMap {
 public:
  FullStructureMap(FiniteSpace space, Chain chain, std::vector<int> table);
  /// Throws InvalidInput when some capacity has no preimage.
  static FullStructureMap from_biconvex(const BiconvexStructure& b, Diagram d = Diagram::kUnionOverIntersection);

  const FiniteSpace& space() const { return space_; }
  const Chain& chain() const { return chain_; }
  const CapacityCatalog& domain() const { return *domain_; }
  const std::vector<int>& table() const { return table_; }
  int operator()(const Capacity& c) const;

  friend bool operator==(const FullStructureMap& a, const FullStructureMap& b) {
    return a.space_ == b.space_ && a.chain_ == b.chain_ && a.table_ == b.table_;
  }

 private:
  FiniteSpace space_;
  Chain chain_;
  std::shared_ptr<const CapacityCatalog> domain_;
  std::vector<int> table_;
};

/// The shared catalog of all capacities on n points.
std::shared_ptr<const CapacityCatalog> capacity_catalog(int n, Chain chain);

/// Unit law on every point; multiplication law on sampled second-order
/// capacities over small random sub-collections of MX, drawn as union,
/// intersection and general capacities.
std::vector<LawTally> tally_full_algebra_laws(const FullStructureMap& xi, const LawCheckOptions& options = {});
Diagnostics check_full_algebra_laws(const FullStructureMap& xi, const LawCheckOptions& options = {});

struct LatticeTables {
  std::vector<std::uint8_t> bjoin;
  std::vector<std::uint8_t> bmeet;
};
/// x [+] y = xi(delta_x v delta_y), x [-] y = xi(delta_x ^ delta_y).
/// Throws InvalidInput, naming a witness, when these fail the lattice laws.
LatticeTables lattice_from_algebra(const FullStructureMap& xi);
/// All four operations read back from xi (lattice, then p and m).
BiconvexStructure biconvex_from_algebra(const FullStructureMap& xi);

/// f(x [+] (a (.) y)) = f(x) [+] (a (.) f(y)) and the dual, for all x, a, y.
bool is_biaffine(const PointMap& f, const BiconvexStructure& b, const BiconvexStructure& b_prime);
bool preserves_smeet(const PointMap& f, const BiconvexStructure& b, const BiconvexStructure& b_prime);
bool preserves_sjoin(const PointMap& f, const BiconvexStructure& b, const BiconvexStructure& b_prime);

/// "f xi = xi' Mf on every capacity" against "f is biaffine".
MorphismCheck morphism_equivalence_full(const PointMap& f, const FullStructureMap& xi, const BiconvexStructure& b,
                                        const FullStructureMap& xi_prime, const BiconvexStructure& b_prime);

/// Index count and per-coordinate monotone level maps with phi(0) = 0,
/// phi(1) = 1.
struct CubeStructure {
  int a_size = 1;
  Chain chain{1};
  std::vector<std::vector<int>> phi;

  friend bool operator==(const CubeStructure&, const CubeStructure&) = default;
};

/// Throws InvalidInput for a bad level map.
void validate_cube(const CubeStructure& cube);

/// Coordinatewise operations on chain^A; points are level tuples in
/// lexicographic order, named "l1;l2;...".
BiconvexStructure cube_structure(const CubeStructure& cube);

/// Every monotone level map with fixed endpoints, lexicographically.
std::vector<std::vector<int>> monotone_level_maps(Chain chain);

/// {0, 1}^2 with coordinatewise max and min and the actions
/// a (.) x = (min(phi_i(a), x_i)), a (+) x = (max(phi_i(a), x_i)), where
/// phi_i is a monotone map of the chain onto {0, 1}, given by its values.
BiconvexStructure diamond_structure(Chain chain, const std::vector<int>& phi1, const std::vector<int>& phi2);

enum class EmbeddingMode {
  /// Every coordinate preserves all four operations.
  kAllOperations,
  /// Every coordinate is biaffine: preserves the combination and its dual.
  kBiaffine,
};

struct EmbeddingCertificate {
  CubeStructure cube;
  /// coordinates[a][x] = level of x at coordinate a.
  std::vector<std::vector<int>> coordinates;
};

struct EmbeddingSearchResult {
  std::optional<EmbeddingCertificate> certificate;
  int max_a = 0;
  /// Coordinate maps found valid on their own.
  std::size_t coordinate_candidates = 0;
  /// Coordinate tuples examined for injectivity.
  std::size_t tuples_examined = 0;
};

/// The lexicographically least injective tuple of valid coordinates with
/// at most `max_a` coordinates, fewest coordinates first. Throws
/// BudgetExceeded past `max_tuples` examined tuples.
EmbeddingSearchResult embedding_search(const BiconvexStructure& b, int max_a,
                                       EmbeddingMode mode = EmbeddingMode::kAllOperations,
                                       std::size_t max_tuples = 50'000'000);

/// Injectivity and per-coordinate preservation.
Diagnostics verify_certificate(const BiconvexStructure& b, const EmbeddingCertificate& cert,
                               EmbeddingMode mode = EmbeddingMode::kAllOperations);

/// Every lattice on n labeled points (n <= 5) as (join, meet) tables.
std::vector<LatticeTables> enumerate_lattices(int n);

/// Every biconvex structure on n labeled points (named x0, ...).
/// Throws BudgetExceeded past `max_candidates` action tables.
std::vector<BiconvexStructure> enumerate_biconvex_structures(int n, Chain chain,
                                                             std::size_t max_candidates = 5'000'000);

}  // namespace capalg

#endif  // CAPALG_BICONVEX_HPP
