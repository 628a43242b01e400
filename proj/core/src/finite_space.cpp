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

#include "capalg/finite_space.hpp"

#include <map>
#include <mutex>

namespace capalg {

std::vector<int> Subset::members() const {
  std::vector<int> out;
  for (std::uint64_t b = bits_; b != 0; b &= b - 1) out.push_back(std::countr_zero(b));
  return out;
}

std::strong_ordering operator<=>(Subset a, Subset b) {
  if (auto c = a.size() <=> b.size(); c != 0) return c;
  // Equal sizes: lexicographic on sorted member positions. The first
  // differing position decides; the set holding the smaller one comes first.
  const std::uint64_t diff = a.bits_ ^ b.bits_;
  if (diff == 0) return std::strong_ordering::equal;
  const int low = std::countr_zero(diff);
  return a.contains(low) ? std::strong_ordering::less : std::strong_ordering::greater;
}

std::vector<Subset> canonical_subsets(int n, bool include_empty) {
  if (n < 0 || n > 20) throw InvalidInput("canonical_subsets supports n <= 20");
  std::vector<Subset> out;
  out.reserve(std::size_t{1} << n);
  for (std::uint64_t b = include_empty ? 0 : 1; b < (std::uint64_t{1} << n); ++b) {
    out.emplace_back(b);
  }
  std::sort(out.begin(), out.end());
  return out;
}

FiniteSpace::FiniteSpace(std::vector<std::string> names) : names_(std::move(names)) {
  if (names_.empty()) throw InvalidInput("a finite space needs at least one point");
  if (size() > kMaxSize) {
    throw InvalidInput("finite spaces hold at most " + std::to_string(kMaxSize) + " points");
  }
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (names_[i].empty() || names_[i].find_first_of(",|") != std::string::npos) {
      throw InvalidInput("invalid point name \"" + names_[i] + "\"");
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (names_[i] == names_[j]) throw InvalidInput("duplicate point name \"" + names_[i] + "\"");
    }
  }
}

FiniteSpace FiniteSpace::of_size(int n) {
  std::vector<std::string> names;
  for (int i = 0; i < n; ++i) names.push_back("x" + std::to_string(i));
  return FiniteSpace(std::move(names));
}

int FiniteSpace::index_of(std::string_view name) const {
  for (int i = 0; i < size(); ++i) {
    if (names_[i] == name) return i;
  }
  throw UnknownElement("unknown point \"" + std::string(name) + "\"");
}

Subset FiniteSpace::subset_of(const std::vector<std::string>& names) const {
  Subset s;
  for (const auto& n : names) s = s.with(index_of(n));
  return s;
}

std::vector<std::string> FiniteSpace::names_of(Subset s) const {
  std::vector<std::string> out;
  for (int i : s.members()) out.push_back(name(i));
  return out;
}

std::string FiniteSpace::key_of(Subset s) const {
  std::string key;
  for (int i : s.members()) {
    if (!key.empty()) key += ',';
    key += name(i);
  }
  return key;
}

Subset FiniteSpace::parse_key(std::string_view key) const {
  Subset s;
  while (!key.empty()) {
    const auto comma = key.find(',');
    const auto part = key.substr(0, comma);
    s = s.with(index_of(part));
    if (comma == std::string_view::npos) break;
    key.remove_prefix(comma + 1);
  }
  return s;
}

SubsetFamily exp_space(int n) {
  return SubsetFamily{n, canonical_subsets(n, false)};
}

SubsetFamily exp_space(const FiniteSpace& space) { return exp_space(space.size()); }

bool is_inclusion_hyperspace(const SubsetFamily& family) {
  if (family.members.empty()) return false;
  const Subset top = Subset::full(family.carrier_size);
  auto has = [&](Subset s) {
    return std::find(family.members.begin(), family.members.end(), s) != family.members.end();
  };
  for (Subset a : family.members) {
    if (a.empty() || !a.is_subset_of(top)) return false;
    // Up-closure only needs one-point extensions.
    for (int i = 0; i < family.carrier_size; ++i) {
      if (!a.contains(i) && !has(a.with(i))) return false;
    }
  }
  return true;
}

PointMap::PointMap(int domain_size, int codomain_size, std::vector<int> assignment)
    : codomain_size_(codomain_size), assignment_(std::move(assignment)) {
  if (static_cast<int>(assignment_.size()) != domain_size) {
    throw InvalidInput("point map is not total on its domain");
  }
  for (int v : assignment_) {
    if (v < 0 || v >= codomain_size) throw InvalidInput("point map value outside codomain");
  }
}

PointMap PointMap::identity(int n) {
  std::vector<int> a(n);
  for (int i = 0; i < n; ++i) a[i] = i;
  return PointMap(n, n, std::move(a));
}

PointMap PointMap::constant(int domain_size, int codomain_size, int value) {
  return PointMap(domain_size, codomain_size, std::vector<int>(domain_size, value));
}

Subset PointMap::image(Subset s) const {
  Subset out;
  for (int i : s.members()) out = out.with(assignment_[i]);
  return out;
}

Subset PointMap::preimage(Subset s) const {
  Subset out;
  for (int i = 0; i < domain_size(); ++i) {
    if (s.contains(assignment_[i])) out = out.with(i);
  }
  return out;
}

bool PointMap::injective() const {
  Subset seen;
  for (int v : assignment_) {
    if (seen.contains(v)) return false;
    seen = seen.with(v);
  }
  return true;
}

PointMap compose(const PointMap& g, const PointMap& f) {
  if (f.codomain_size() != g.domain_size()) {
    throw CarrierMismatch("cannot compose maps with mismatched carriers");
  }
  std::vector<int> a(f.domain_size());
  for (int i = 0; i < f.domain_size(); ++i) a[i] = g(f(i));
  return PointMap(f.domain_size(), g.codomain_size(), std::move(a));
}

std::vector<PointMap> all_point_maps(int n, int m) {
  std::vector<PointMap> out;
  std::vector<int> a(n, 0);
  while (true) {
    out.emplace_back(n, m, a);
    int i = n - 1;
    while (i >= 0 && a[i] == m - 1) a[i--] = 0;
    if (i < 0) break;
    ++a[i];
  }
  return out;
}

InclusionHyperspace g_unit(const FiniteSpace& space, std::string_view name) {
  return g_unit(space.index_of(name));
}

InclusionHyperspace g_map(const PointMap& f, const InclusionHyperspace& h) {
  for (const auto& a : h.minimal()) {
    for (int x : a) {
      if (x < 0 || x >= f.domain_size()) throw CarrierMismatch("hyperspace point outside map domain");
    }
  }
  return g_map([&f](int x) { return f(x); }, h);
}

InclusionHyperspace to_hyperspace(const SubsetFamily& family) {
  if (!is_inclusion_hyperspace(family)) {
    throw InvalidInput("family is not an inclusion hyperspace");
  }
  std::vector<std::vector<int>> gens;
  for (Subset s : family.members) gens.push_back(s.members());
  return InclusionHyperspace::generated_by(std::move(gens));
}

SubsetFamily up_closure(const InclusionHyperspace& h, int carrier_size) {
  SubsetFamily f{carrier_size, {}};
  for (Subset s : canonical_subsets(carrier_size, false)) {
    if (h.contains(s.members())) f.members.push_back(s);
  }
  return f;
}

namespace detail {

const std::vector<std::vector<Subset>>& hyperspace_antichains(int m) {
  if (m < 1 || m > 4) throw InvalidInput("hyperspace enumeration supports 1..4 points");
  static std::mutex mu;
  static std::map<int, std::vector<std::vector<Subset>>> cache;
  std::lock_guard lock(mu);
  if (auto it = cache.find(m); it != cache.end()) return it->second;

  const auto subsets = canonical_subsets(m, false);
  const int count = static_cast<int>(subsets.size());
  std::vector<std::vector<Subset>> out;
  for (std::uint64_t pick = 1; pick < (std::uint64_t{1} << count); ++pick) {
    SubsetFamily fam{m, {}};
    for (int i = 0; i < count; ++i) {
      if ((pick >> i) & 1U) fam.members.push_back(subsets[i]);
    }
    if (!is_inclusion_hyperspace(fam)) continue;
    std::vector<Subset> minimal;
    for (Subset a : fam.members) {
      bool is_min = true;
      for (Subset b : fam.members) {
        if (b != a && b.is_subset_of(a)) is_min = false;
      }
      if (is_min) minimal.push_back(a);
    }
    out.push_back(std::move(minimal));
  }
  return cache.emplace(m, std::move(out)).first->second;
}

}  // namespace detail

std::vector<InclusionHyperspace> all_inclusion_hyperspaces(int n) {
  std::vector<int> points(n);
  for (int i = 0; i < n; ++i) points[i] = i;
  return all_hyperspaces(points);
}

}  // namespace capalg
