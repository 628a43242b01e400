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

#ifndef CAPALG_FINITE_SPACE_HPP
#define CAPALG_FINITE_SPACE_HPP

#include <algorithm>
#include <bit>
#include <compare>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "capalg/errors.hpp"

namespace capalg {

/// A subset of a carrier with at most 64 points, stored as a bit set over
/// point positions.
class Subset {
 public:
  constexpr Subset() = default;
  constexpr explicit Subset(std::uint64_t bits) : bits_(bits) {}

  static constexpr Subset singleton(int i) { return Subset(std::uint64_t{1} << i); }
  /// {0, ..., n-1}.
  static constexpr Subset full(int n) {
    return Subset(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool contains(int i) const { return (bits_ >> i) & 1U; }
  constexpr bool is_subset_of(Subset other) const {
    return (bits_ & ~other.bits_) == 0;
  }

  /// Member positions in increasing order.
  std::vector<int> members() const;

  constexpr Subset operator|(Subset o) const { return Subset(bits_ | o.bits_); }
  constexpr Subset operator&(Subset o) const { return Subset(bits_ & o.bits_); }
  /// Set difference.
  constexpr Subset operator-(Subset o) const { return Subset(bits_ & ~o.bits_); }
  constexpr Subset with(int i) const { return *this | singleton(i); }

  friend constexpr bool operator==(Subset, Subset) = default;
  /// Canonical order: by size, then lexicographically by member positions.
  friend std::strong_ordering operator<=>(Subset a, Subset b);

 private:
  std::uint64_t bits_ = 0;
};

/// Every subset of an n-point carrier in canonical order, optionally
/// including the empty set. n <= 20.
std::vector<Subset> canonical_subsets(int n, bool include_empty);

/// A finite discrete space: a nonempty list of distinct point names.
/// Point positions follow the declared order.
class FiniteSpace {
 public:
  static constexpr int kMaxSize = 64;

  /// Throws InvalidInput on an empty list, duplicate names, more than
  /// kMaxSize points, or names containing the reserved characters ',' '|'.
  explicit FiniteSpace(std::vector<std::string> names);

  /// Points named "x0", "x1", ...
  static FiniteSpace of_size(int n);

  int size() const { return static_cast<int>(names_.size()); }
  const std::vector<std::string>& names() const { return names_; }
  const std::string& name(int i) const { return names_.at(i); }

  /// Throws UnknownElement.
  int index_of(std::string_view name) const;
  Subset subset_of(const std::vector<std::string>& names) const;
  std::vector<std::string> names_of(Subset s) const;
  /// Comma-joined names in declared order; "" for the empty set.
  std::string key_of(Subset s) const;
  /// Inverse of key_of.
  Subset parse_key(std::string_view key) const;
  Subset full() const { return Subset::full(size()); }

  friend bool operator==(const FiniteSpace&, const FiniteSpace&) = default;

 private:
  std::vector<std::string> names_;
};

/// A family of nonempty subsets of an n-point carrier.
struct SubsetFamily {
  int carrier_size = 0;
  std::vector<Subset> members;  // sorted canonically, no duplicates
};

/// All 2^n - 1 nonempty subsets.
SubsetFamily exp_space(const FiniteSpace& space);
SubsetFamily exp_space(int n);

/// True iff the family is nonempty, has no empty member, and is closed
/// upward inside exp X.
bool is_inclusion_hyperspace(const SubsetFamily& family);

/// A total map between finite carriers, by point position.
class PointMap {
 public:
  /// Throws InvalidInput if an image lies outside the codomain.
  PointMap(int domain_size, int codomain_size, std::vector<int> assignment);

  static PointMap identity(int n);
  static PointMap constant(int domain_size, int codomain_size, int value);

  int domain_size() const { return static_cast<int>(assignment_.size()); }
  int codomain_size() const { return codomain_size_; }
  int operator()(int x) const { return assignment_[x]; }
  const std::vector<int>& assignment() const { return assignment_; }

  Subset image(Subset s) const;
  Subset preimage(Subset s) const;
  bool injective() const;

  friend bool operator==(const PointMap&, const PointMap&) = default;

 private:
  int codomain_size_;
  std::vector<int> assignment_;
};

/// g after f. Throws CarrierMismatch.
PointMap compose(const PointMap& g, const PointMap& f);

/// Every total map from an n-point set to an m-point set, in lexicographic
/// order of the assignment vector.
std::vector<PointMap> all_point_maps(int n, int m);

/// An inclusion hyperspace (nonempty up-closed family of nonempty finite
/// sets) over points of type T, held as the antichain of its minimal
/// members. T needs a strict weak order; nesting Hyperspace<Hyperspace<T>>
/// gives the iterated hyperspaces G^2, G^3.
template <class T>
class Hyperspace {
 public:
  using Set = std::vector<T>;  // sorted, unique

  /// Up-closure of the given generators. Throws InvalidInput when there
  /// are no generators or one of them is empty.
  static Hyperspace generated_by(std::vector<Set> generators) {
    if (generators.empty()) {
      throw InvalidInput("an inclusion hyperspace needs at least one member");
    }
    for (auto& g : generators) {
      if (g.empty()) throw InvalidInput("inclusion hyperspaces hold nonempty sets");
      std::sort(g.begin(), g.end());
      g.erase(std::unique(g.begin(), g.end()), g.end());
    }
    std::sort(generators.begin(), generators.end());
    generators.erase(std::unique(generators.begin(), generators.end()),
                     generators.end());
    Hyperspace h;
    for (const auto& g : generators) {
      const bool dominated = std::any_of(
          generators.begin(), generators.end(), [&](const Set& other) {
            return other != g && includes(g, other);
          });
      if (!dominated) h.minimal_.push_back(g);
    }
    return h;
  }

  const std::vector<Set>& minimal() const { return minimal_; }

  /// Membership of an arbitrary (sorted) set.
  bool contains(const Set& s) const {
    return std::any_of(minimal_.begin(), minimal_.end(),
                       [&](const Set& m) { return includes(s, m); });
  }

  /// Intersection of up-sets: generated by pairwise unions of generators.
  Hyperspace intersect(const Hyperspace& other) const {
    std::vector<Set> gens;
    for (const auto& a : minimal_) {
      for (const auto& b : other.minimal_) {
        Set u;
        std::set_union(a.begin(), a.end(), b.begin(), b.end(),
                       std::back_inserter(u));
        gens.push_back(std::move(u));
      }
    }
    return generated_by(std::move(gens));
  }

  /// Union of up-sets.
  Hyperspace unite(const Hyperspace& other) const {
    std::vector<Set> gens = minimal_;
    gens.insert(gens.end(), other.minimal_.begin(), other.minimal_.end());
    return generated_by(std::move(gens));
  }

  friend bool operator==(const Hyperspace&, const Hyperspace&) = default;
  friend auto operator<=>(const Hyperspace&, const Hyperspace&) = default;

 private:
  // Does `big` include `small`? Both sorted.
  static bool includes(const Set& big, const Set& small) {
    return std::includes(big.begin(), big.end(), small.begin(), small.end());
  }

  std::vector<Set> minimal_;
};

using InclusionHyperspace = Hyperspace<int>;

/// eta_G(x): every set containing x.
template <class T>
Hyperspace<T> g_unit(const T& x) {
  return Hyperspace<T>::generated_by({{x}});
}

/// G f: sets containing f(A) for some member A.
template <class T, class F>
auto g_map(const F& f, const Hyperspace<T>& h) {
  using U = std::decay_t<decltype(f(std::declval<const T&>()))>;
  std::vector<std::vector<U>> gens;
  for (const auto& a : h.minimal()) {
    std::vector<U> image;
    for (const auto& x : a) image.push_back(f(x));
    gens.push_back(std::move(image));
  }
  return Hyperspace<U>::generated_by(std::move(gens));
}

/// mu_G: union over members A of the intersection of the hyperspaces in A.
/// The intersection shrinks as A grows, so minimal members suffice.
template <class T>
Hyperspace<T> g_mult(const Hyperspace<Hyperspace<T>>& hh) {
  std::vector<std::vector<T>> gens;
  for (const auto& family : hh.minimal()) {
    Hyperspace<T> meet = family.front();
    for (std::size_t i = 1; i < family.size(); ++i) meet = meet.intersect(family[i]);
    gens.insert(gens.end(), meet.minimal().begin(), meet.minimal().end());
  }
  return Hyperspace<T>::generated_by(std::move(gens));
}

/// Named-point unit. Throws UnknownElement.
InclusionHyperspace g_unit(const FiniteSpace& space, std::string_view name);

/// G f on an n-point carrier.
InclusionHyperspace g_map(const PointMap& f, const InclusionHyperspace& h);

/// Throws InvalidInput unless the family is an inclusion hyperspace.
InclusionHyperspace to_hyperspace(const SubsetFamily& family);
SubsetFamily up_closure(const InclusionHyperspace& h, int carrier_size);

/// Every inclusion hyperspace over the given points (at most 4), ordered
/// by their up-closures in canonical family order.
template <class T>
std::vector<Hyperspace<T>> all_hyperspaces(const std::vector<T>& points);

/// Every inclusion hyperspace on an n-point carrier, n <= 4.
std::vector<InclusionHyperspace> all_inclusion_hyperspaces(int n);

}  // namespace capalg

#include "capalg/detail/hyperspace_enum.hpp"

#endif  // CAPALG_FINITE_SPACE_HPP
