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

#include "capalg/convexity.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <utility>

#include "capalg/law_tally.hpp"
#include "capalg/random.hpp"

namespace capalg {
namespace {

void check_table(const FiniteSpace& space, const Chain& chain, const std::vector<std::uint8_t>& table,
                 const char* what) {
  const std::size_t n = static_cast<std::size_t>(space.size());
  if (table.size() != n * static_cast<std::size_t>(chain.size()) * n) {
    throw InvalidInput(std::string(what) + " table has " + std::to_string(table.size()) + " entries, expected " +
                       std::to_string(n * chain.size() * n));
  }
  for (auto v : table) {
    if (v >= n) throw InvalidInput(std::string(what) + " table value outside the carrier");
  }
}

std::string lvl(const Chain& chain, int a) { return chain.level(a).to_string(); }

// "name(x, a, y) = z"-style text for witnesses.
std::string triple_text(const FiniteSpace& s, const Chain& chain, int x, int a, int y) {
  return "x=" + s.name(x) + ", alpha=" + lvl(chain, a) + ", y=" + s.name(y);
}

template <class S>
void require_same_shape(const S& s, int carrier_size, const Chain& chain) {
  if (carrier_size != s.size()) {
    throw CarrierMismatch("capacity on " + std::to_string(carrier_size) + " points, structure on " +
                          std::to_string(s.size()));
  }
  if (!(chain == s.chain())) throw ChainMismatch("capacity and structure use different chains");
}

// Fast axiom test for enumeration: stops at the first failure.
bool satisfies_ic_axioms(const ConvexStructure& s) {
  const int n = s.size();
  const int top = s.chain().top_index();
  for (int x = 0; x < n; ++x) {
    for (int a = 0; a <= top; ++a) {
      if (s.ic(x, a, x) != x) return false;
    }
    for (int y = 0; y < n; ++y) {
      if (s.ic(x, 0, y) != x || s.ic(x, top, y) != s.ic(y, top, x)) return false;
    }
  }
  for (int x = 0; x < n; ++x)
    for (int a = 0; a <= top; ++a)
      for (int y = 0; y < n; ++y)
        for (int b = 0; b <= top; ++b)
          for (int z = 0; z < n; ++z) {
            if (s.ic(s.ic(x, a, y), b, z) != s.ic(s.ic(x, b, z), a, y)) return false;
            if (s.ic(x, a, s.ic(y, b, z)) != s.ic(s.ic(x, a, y), std::min(a, b), z)) return false;
          }
  return true;
}

}  // namespace

ConvexStructure::ConvexStructure(FiniteSpace space, Chain chain, std::vector<std::uint8_t> table)
    : space_(std::move(space)), chain_(chain), table_(std::move(table)) {
  check_table(space_, chain_, table_, "ic");
}

DualConvexStructure::DualConvexStructure(FiniteSpace space, Chain chain, std::vector<std::uint8_t> table)
    : space_(std::move(space)), chain_(chain), table_(std::move(table)) {
  check_table(space_, chain_, table_, "ci");
}

std::vector<LawTally> tally_ic_axioms(const ConvexStructure& s) {
  const int n = s.size();
  const int top = s.chain().top_index();
  const auto& sp = s.space();
  const auto& ch = s.chain();
  std::vector<LawTally> t;
  for (const char* name : {"axiom-1", "axiom-2", "axiom-3", "axiom-4", "axiom-5", "join-semilattice"}) {
    t.emplace_back(name);
  }
  for (int x = 0; x < n; ++x)
    for (int a = 0; a <= top; ++a)
      t[0].record(s.ic(x, a, x) == x, [&] { return "ic(x,alpha,x) != x at " + triple_text(sp, ch, x, a, x); });
  for (int x = 0; x < n; ++x)
    for (int a = 0; a <= top; ++a)
      for (int y = 0; y < n; ++y)
        for (int b = 0; b <= top; ++b)
          for (int z = 0; z < n; ++z) {
            t[1].record(s.ic(s.ic(x, a, y), b, z) == s.ic(s.ic(x, b, z), a, y), [&] {
              return triple_text(sp, ch, x, a, y) + ", beta=" + lvl(ch, b) + ", z=" + sp.name(z);
            });
            t[2].record(s.ic(x, a, s.ic(y, b, z)) == s.ic(s.ic(x, a, y), std::min(a, b), z), [&] {
              return triple_text(sp, ch, x, a, y) + ", beta=" + lvl(ch, b) + ", z=" + sp.name(z);
            });
          }
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      t[3].record(s.ic(x, top, y) == s.ic(y, top, x),
                  [&] { return "ic(x,1,y) != ic(y,1,x) at x=" + sp.name(x) + ", y=" + sp.name(y); });
      t[4].record(s.ic(x, 0, y) == x,
                  [&] { return "ic(x,0,y) != x at x=" + sp.name(x) + ", y=" + sp.name(y); });
    }
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z) {
        const bool ok = s.join(s.join(x, y), z) == s.join(x, s.join(y, z)) && s.join(x, y) == s.join(y, x) &&
                        s.join(x, x) == x;
        t[5].record(ok, [&] { return "x=" + sp.name(x) + ", y=" + sp.name(y) + ", z=" + sp.name(z); });
      }
  return t;
}

Diagnostics check_ic_axioms(const ConvexStructure& s) { return to_diagnostics(tally_ic_axioms(s)); }

std::vector<std::string> vacuous_conditions() {
  return {
      "neighborhood conditions on the combination hold vacuously: singletons are open in a finite discrete carrier",
      "upper semicontinuity of capacities holds vacuously on finite discrete carriers",
      "local biconvexity holds vacuously on finite discrete carriers",
  };
}

Diagnostics check_distributive_law(const ConvexStructure& s) {
  const int n = s.size();
  if (n > kMaxTableCarrier) throw BudgetExceeded("distributive law check needs at most 20 points");
  LawTally t("distributive-law");
  for (const Subset f : canonical_subsets(n, false)) {
    const auto members = f.members();
    int sup = members.front();
    for (int x : members) sup = s.join(sup, x);
    for (int y = 0; y < n; ++y) {
      for (int a = 0; a <= s.chain().top_index(); ++a) {
        int rhs = s.ic(y, a, members.front());
        for (int x : members) rhs = s.join(rhs, s.ic(y, a, x));
        t.record(s.ic(y, a, sup) == rhs, [&] {
          return "F={" + s.space().key_of(f) + "}, y=" + s.space().name(y) + ", alpha=" + lvl(s.chain(), a);
        });
      }
    }
  }
  return to_diagnostics({t});
}

Diagnostics check_ci_axioms(const DualConvexStructure& s) {
  const int n = s.size();
  const int top = s.chain().top_index();
  const auto& sp = s.space();
  const auto& ch = s.chain();
  std::vector<LawTally> t;
  for (const char* name : {"axiom-1", "axiom-2", "axiom-3", "axiom-4", "axiom-5", "meet-semilattice"}) {
    t.emplace_back(name);
  }
  for (int x = 0; x < n; ++x)
    for (int a = 0; a <= top; ++a)
      t[0].record(s.ci(x, a, x) == x, [&] { return triple_text(sp, ch, x, a, x); });
  for (int x = 0; x < n; ++x)
    for (int a = 0; a <= top; ++a)
      for (int y = 0; y < n; ++y)
        for (int b = 0; b <= top; ++b)
          for (int z = 0; z < n; ++z) {
            t[1].record(s.ci(s.ci(x, a, y), b, z) == s.ci(s.ci(x, b, z), a, y), [&] {
              return triple_text(sp, ch, x, a, y) + ", beta=" + lvl(ch, b) + ", z=" + sp.name(z);
            });
            t[2].record(s.ci(x, a, s.ci(y, b, z)) == s.ci(s.ci(x, a, y), std::max(a, b), z), [&] {
              return triple_text(sp, ch, x, a, y) + ", beta=" + lvl(ch, b) + ", z=" + sp.name(z);
            });
          }
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      t[3].record(s.ci(x, 0, y) == s.ci(y, 0, x), [&] { return "x=" + sp.name(x) + ", y=" + sp.name(y); });
      t[4].record(s.ci(x, top, y) == x, [&] { return "x=" + sp.name(x) + ", y=" + sp.name(y); });
    }
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z) {
        const bool ok = s.meet(s.meet(x, y), z) == s.meet(x, s.meet(y, z)) && s.meet(x, y) == s.meet(y, x) &&
                        s.meet(x, x) == x;
        t[5].record(ok, [&] { return "x=" + sp.name(x) + ", y=" + sp.name(y) + ", z=" + sp.name(z); });
      }
  return to_diagnostics(t);
}

namespace {

FiniteSpace chain_carrier(const Chain& chain) {
  std::vector<std::string> names;
  for (Level l : chain.levels()) names.push_back(l.to_string());
  return FiniteSpace(std::move(names));
}

}  // namespace

ConvexStructure chain_model_convex(Chain chain) {
  return ConvexStructure::from_function(chain_carrier(chain), chain,
                                        [](int x, int a, int y) { return std::max(x, std::min(a, y)); });
}

DualConvexStructure chain_model_dual_convex(Chain chain) {
  return DualConvexStructure::from_function(chain_carrier(chain), chain,
                                            [](int x, int a, int y) { return std::min(x, std::max(a, y)); });
}

SimplexPoint SimplexPoint::join_simplex(Chain chain, std::vector<int> coefficients) {
  if (coefficients.empty()) throw InvalidInput("a simplex point needs at least one coefficient");
  for (int a : coefficients) chain.level(a);
  if (*std::max_element(coefficients.begin(), coefficients.end()) != chain.top_index()) {
    throw InvalidInput("coefficients of a join simplex point must reach 1");
  }
  return SimplexPoint(chain, std::move(coefficients), true);
}

SimplexPoint SimplexPoint::meet_simplex(Chain chain, std::vector<int> coefficients) {
  if (coefficients.empty()) throw InvalidInput("a simplex point needs at least one coefficient");
  for (int a : coefficients) chain.level(a);
  if (*std::min_element(coefficients.begin(), coefficients.end()) != 0) {
    throw InvalidInput("coefficients of a meet simplex point must reach 0");
  }
  return SimplexPoint(chain, std::move(coefficients), false);
}

int nary_combination(const ConvexStructure& s, const SimplexPoint& coefficients, std::span<const int> points) {
  const auto& c = coefficients.coefficients();
  if (!coefficients.is_join_simplex()) throw InvalidInput("combination needs a join simplex point");
  if (!(coefficients.chain() == s.chain())) throw ChainMismatch("coefficients from another chain");
  if (c.size() != points.size()) {
    throw InvalidInput("got " + std::to_string(c.size()) + " coefficients for " + std::to_string(points.size()) +
                       " points");
  }
  for (int p : points) {
    if (p < 0 || p >= s.size()) throw UnknownElement("point index " + std::to_string(p));
  }
  const auto base = static_cast<std::size_t>(std::find(c.begin(), c.end(), s.chain().top_index()) - c.begin());
  int acc = points[base];
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i != base) acc = s.ic(acc, c[i], points[i]);
  }
  return acc;
}

int structure_map_from_ic(const ConvexStructure& s, const PossibilityCapacity& c, std::optional<int> base) {
  require_same_shape(s, c.carrier_size(), c.chain());
  const int top = s.chain().top_index();
  int x0 = 0;
  if (base) {
    if (*base < 0 || *base >= s.size()) throw UnknownElement("base point " + std::to_string(*base));
    if (c.raw_density(*base) != top) throw InvalidInput("base point " + s.space().name(*base) + " has density below 1");
    x0 = *base;
  } else {
    while (c.raw_density(x0) != top) ++x0;
  }
  int acc = x0;
  for (int x = 0; x < s.size(); ++x) {
    for (int a = 0; a <= c.raw_density(x); ++a) acc = s.join(acc, s.ic(x0, a, x));
  }
  return acc;
}

int dual_structure_map(const DualConvexStructure& s, const NecessityCapacity& c, std::optional<int> base) {
  require_same_shape(s, c.carrier_size(), c.chain());
  const int top = s.chain().top_index();
  int x0 = 0;
  if (base) {
    if (*base < 0 || *base >= s.size()) throw UnknownElement("base point " + std::to_string(*base));
    if (c.raw_codensity(*base) != 0) throw InvalidInput("base point " + s.space().name(*base) + " has codensity above 0");
    x0 = *base;
  } else {
    while (c.raw_codensity(x0) != 0) ++x0;
  }
  int acc = x0;
  for (int x = 0; x < s.size(); ++x) {
    for (int a = c.raw_codensity(x); a <= top; ++a) acc = s.meet(acc, s.ci(x0, a, x));
  }
  return acc;
}

std::shared_ptr<const CapacityCatalog> union_catalog(int n, Chain chain) {
  static std::mutex mu;
  static std::map<std::pair<int, int>, std::shared_ptr<const CapacityCatalog>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[{n, chain.resolution()}];
  if (!slot) {
    slot = std::make_shared<const CapacityCatalog>(enumerate_capacities(n, chain, CapacityClass::kUnion));
  }
  return slot;
}

Diagnostics check_base_independence(const ConvexStructure& s) {
  LawTally t("base-dependence");
  const int top = s.chain().top_index();
  for (const auto& item : union_catalog(s.size(), s.chain())->items()) {
    const auto c = *as_possibility(item);
    const int first = structure_map_from_ic(s, c);
    for (int b = 0; b < s.size(); ++b) {
      if (c.raw_density(b) != top) continue;
      t.record(structure_map_from_ic(s, c, b) == first,
               [&] { return describe(item, s.space()) + " with base " + s.space().name(b); });
    }
  }
  return to_diagnostics({t});
}

Diagnostics check_base_independence(const DualConvexStructure& s) {
  LawTally t("base-dependence");
  for (const auto& item : enumerate_capacities(s.size(), s.chain(), CapacityClass::kIntersection)) {
    const auto c = *as_necessity(item);
    const int first = dual_structure_map(s, c);
    for (int b = 0; b < s.size(); ++b) {
      if (c.raw_codensity(b) != 0) continue;
      t.record(dual_structure_map(s, c, b) == first,
               [&] { return describe(item, s.space()) + " with base " + s.space().name(b); });
    }
  }
  return to_diagnostics({t});
}

StructureMapUnion::StructureMapUnion(FiniteSpace space, Chain chain, std::vector<int> table)
    : space_(std::move(space)), chain_(chain), domain_(union_catalog(space_.size(), chain)), table_(std::move(table)) {
  if (table_.size() != domain_->size()) {
    throw InvalidInput("structure map table has " + std::to_string(table_.size()) + " entries, expected " +
                       std::to_string(domain_->size()));
  }
  for (int v : table_) {
    if (v < 0 || v >= space_.size()) throw InvalidInput("structure map value outside the carrier");
  }
}

StructureMapUnion StructureMapUnion::from_convex(const ConvexStructure& s) {
  const auto catalog = union_catalog(s.size(), s.chain());
  std::vector<int> table;
  table.reserve(catalog->size());
  for (const auto& item : catalog->items()) table.push_back(structure_map_from_ic(s, *as_possibility(item)));
  return StructureMapUnion(s.space(), s.chain(), std::move(table));
}

int StructureMapUnion::operator()(const Capacity& c) const {
  if (c.carrier_size() != space_.size()) throw CarrierMismatch("capacity on the wrong carrier");
  if (!(c.chain() == chain_)) throw ChainMismatch("capacity on the wrong chain");
  const int pos = domain_->find(c);
  if (pos < 0) throw InvalidInput("not a union capacity: " + describe(c, space_));
  return table_[static_cast<std::size_t>(pos)];
}

int StructureMapUnion::operator()(const PossibilityCapacity& c) const { return (*this)(Capacity(c)); }

namespace {

// Calls fn(density) for every density on u points with maximum `top`.
template <class Fn>
void for_each_normal_density(int u, int top, Fn&& fn) {
  std::vector<std::uint8_t> d(static_cast<std::size_t>(u), 0);
  while (true) {
    if (*std::max_element(d.begin(), d.end()) == top) fn(d);
    int i = u - 1;
    while (i >= 0 && d[static_cast<std::size_t>(i)] == top) d[static_cast<std::size_t>(i--)] = 0;
    if (i < 0) return;
    ++d[static_cast<std::size_t>(i)];
  }
}

// Mostly sparse random densities: second-order capacities of interest put
// weight on a few first-order ones.
std::vector<std::uint8_t> sample_density(int u, int top, Rng& rng) {
  std::vector<std::uint8_t> d(static_cast<std::size_t>(u), 0);
  if (rng.coin()) {
    const int support = static_cast<int>(rng.between(1, std::min(u, 3)));
    for (int i = 0; i < support; ++i) d[rng.below(static_cast<std::uint64_t>(u))] = static_cast<std::uint8_t>(rng.between(0, top));
  } else {
    for (auto& v : d) v = static_cast<std::uint8_t>(rng.between(0, top));
  }
  d[rng.below(static_cast<std::uint64_t>(u))] = static_cast<std::uint8_t>(top);
  return d;
}

double pow_d(double b, int e) {
  double r = 1;
  for (int i = 0; i < e; ++i) r *= b;
  return r;
}

}  // namespace

std::vector<LawTally> tally_algebra_laws(const StructureMapUnion& xi, const LawCheckOptions& options) {
  const int n = xi.space().size();
  const Chain& chain = xi.chain();
  const int top = chain.top_index();
  const auto& items = xi.domain().items();
  const int u = static_cast<int>(items.size());
  std::vector<LawTally> t{LawTally("unit-law"), LawTally("multiplication-law"), LawTally("submonad-closure")};

  for (int x = 0; x < n; ++x) {
    const int v = xi(unit_dirac(n, chain, x));
    t[0].record(v == x, [&] { return "xi(delta_" + xi.space().name(x) + ") = " + xi.space().name(v); });
  }

  const PointMap xmap(u, n, xi.table());
  auto visit = [&](const std::vector<std::uint8_t>& density) {
    const Capacity outer = PossibilityCapacity(chain, density);
    const int lhs = xi(*as_possibility(pushforward(xmap, outer)));
    const Capacity m = mult(outer, items);
    const auto mp = as_possibility(m);
    const auto text = [&] {
      std::string s = "second-order density {";
      bool first = true;
      for (int i = 0; i < u; ++i) {
        if (density[static_cast<std::size_t>(i)] == 0) continue;
        if (!first) s += "; ";
        first = false;
        s += describe(items[static_cast<std::size_t>(i)], xi.space()) + ":" + lvl(chain, density[static_cast<std::size_t>(i)]);
      }
      return s + "}";
    };
    t[2].record(mp.has_value(), text);
    if (!mp) return;
    t[1].record(lhs == xi(*mp), text);
  };
  const double space = pow_d(top + 1, u) - pow_d(top, u);
  if (space <= static_cast<double>(options.exhaustive_limit)) {
    for_each_normal_density(u, top, visit);
  } else {
    Rng rng(options.seed);
    for (std::size_t i = 0; i < options.samples; ++i) visit(sample_density(u, top, rng));
  }
  return t;
}

Diagnostics check_algebra_laws(const StructureMapUnion& xi, const LawCheckOptions& options) {
  return to_diagnostics(tally_algebra_laws(xi, options));
}

namespace {

ConvexStructure derived_ic(const StructureMapUnion& xi) {
  const int n = xi.space().size();
  const Chain& chain = xi.chain();
  std::vector<SetFunction> diracs;
  for (int x = 0; x < n; ++x) diracs.push_back(unit_dirac(n, chain, x).table());
  return ConvexStructure::from_function(xi.space(), chain, [&](int x, int a, int y) {
    const SetFunction sf = pointwise_join(diracs[x], scale_meet(chain.level(a), diracs[y]));
    return xi(Capacity::from_table_unchecked(sf));
  });
}

}  // namespace

ConvexStructure ic_from_structure_map(const StructureMapUnion& xi, const LawCheckOptions& options) {
  const auto d = check_algebra_laws(xi, options);
  if (!d.empty()) throw InvalidInput("structure map fails the algebra laws (" + d.front().code + ": " + d.front().message + ")");
  return derived_ic(xi);
}

namespace {

std::string first_affinity_failure(const PointMap& f, const ConvexStructure& s, const ConvexStructure& t) {
  if (f.domain_size() != s.size() || f.codomain_size() != t.size()) {
    throw CarrierMismatch("map does not match the structure carriers");
  }
  if (!(s.chain() == t.chain())) throw ChainMismatch("structures use different chains");
  for (int x = 0; x < s.size(); ++x)
    for (int a = 0; a <= s.chain().top_index(); ++a)
      for (int y = 0; y < s.size(); ++y) {
        if (f(s.ic(x, a, y)) != t.ic(f(x), a, f(y))) return triple_text(s.space(), s.chain(), x, a, y);
      }
  return {};
}

}  // namespace

bool is_affine(const PointMap& f, const ConvexStructure& s, const ConvexStructure& t) {
  return first_affinity_failure(f, s, t).empty();
}

MorphismCheck morphism_equivalence_check(const PointMap& f, const ConvexStructure& s, const StructureMapUnion& xi,
                                         const ConvexStructure& t, const StructureMapUnion& xi_prime) {
  MorphismCheck out;
  const std::string affine_witness = first_affinity_failure(f, s, t);
  out.is_affine = affine_witness.empty();
  out.is_morphism = true;
  for (const auto& c : xi.domain().items()) {
    if (f(xi(c)) != xi_prime(pushforward(f, c))) {
      out.is_morphism = false;
      out.witness = describe(c, xi.space());
      break;
    }
  }
  if (out.witness.empty()) out.witness = affine_witness;
  return out;
}

MorphismCheck morphism_equivalence_check(const PointMap& f, const StructureMapUnion& xi,
                                         const StructureMapUnion& xi_prime) {
  return morphism_equivalence_check(f, derived_ic(xi), xi, derived_ic(xi_prime), xi_prime);
}

Semimodule::Semimodule(FiniteSpace space, Chain chain, std::vector<std::uint8_t> add, std::vector<std::uint8_t> scale,
                       int zero)
    : space_(std::move(space)), chain_(chain), add_(std::move(add)), scale_(std::move(scale)), zero_(zero) {
  const std::size_t m = static_cast<std::size_t>(space_.size());
  if (add_.size() != m * m) throw InvalidInput("addition table has the wrong size");
  if (scale_.size() != m * static_cast<std::size_t>(chain_.size())) throw InvalidInput("scale table has the wrong size");
  for (auto v : add_)
    if (v >= m) throw InvalidInput("addition value outside the carrier");
  for (auto v : scale_)
    if (v >= m) throw InvalidInput("scale value outside the carrier");
  if (zero_ < 0 || zero_ >= space_.size()) throw InvalidInput("zero outside the carrier");
}

std::vector<LawTally> tally_semimodule_axioms(const Semimodule& m, ScalarSemiring semiring) {
  const int n = m.size();
  const int top = m.chain().top_index();
  const bool maxmin = semiring == ScalarSemiring::kMaxMin;
  auto plus = [&](int a, int b) { return maxmin ? std::max(a, b) : std::min(a, b); };
  auto times = [&](int a, int b) { return maxmin ? std::min(a, b) : std::max(a, b); };
  const int s_zero = maxmin ? 0 : top;
  const int s_one = maxmin ? top : 0;
  const auto& sp = m.space();
  const auto& ch = m.chain();
  std::vector<LawTally> t;
  for (int i = 1; i <= 7; ++i) t.emplace_back("axiom-" + std::to_string(i));
  auto xy = [&](int x, int y) { return "x=" + sp.name(x) + ", y=" + sp.name(y); };
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      t[0].record(m.add(x, y) == m.add(y, x), [&] { return xy(x, y); });
      for (int z = 0; z < n; ++z) {
        t[1].record(m.add(m.add(x, y), z) == m.add(x, m.add(y, z)), [&] { return xy(x, y) + ", z=" + sp.name(z); });
      }
      for (int a = 0; a <= top; ++a) {
        t[3].record(m.scale(a, m.add(x, y)) == m.add(m.scale(a, x), m.scale(a, y)),
                    [&] { return "alpha=" + lvl(ch, a) + ", " + xy(x, y); });
      }
    }
    t[2].record(m.add(x, m.zero()) == x, [&] { return "x=" + sp.name(x); });
    for (int a = 0; a <= top; ++a) {
      for (int b = 0; b <= top; ++b) {
        const auto ab = [&] { return "alpha=" + lvl(ch, a) + ", beta=" + lvl(ch, b) + ", x=" + sp.name(x); };
        t[3].record(m.scale(plus(a, b), x) == m.add(m.scale(a, x), m.scale(b, x)), ab);
        t[4].record(m.scale(times(a, b), x) == m.scale(a, m.scale(b, x)), ab);
      }
    }
    t[5].record(m.scale(s_one, x) == x, [&] { return "x=" + sp.name(x); });
    t[6].record(m.scale(s_zero, x) == m.zero(), [&] { return "x=" + sp.name(x); });
  }
  return t;
}

Diagnostics check_semimodule_axioms(const Semimodule& m, ScalarSemiring semiring) {
  return to_diagnostics(tally_semimodule_axioms(m, semiring));
}

QuotientSemimodule quotient_semimodule(const ConvexStructure& s) {
  const auto axioms = check_ic_axioms(s);
  if (!axioms.empty()) {
    throw InvalidInput("not a convex structure (" + axioms.front().code + ": " + axioms.front().message + ")");
  }
  const int n = s.size();
  const int levels = s.chain().size();
  const int top = s.chain().top_index();

  // Classes numbered by first representative in (x, a) order.
  std::vector<std::vector<int>> profiles;
  std::map<std::vector<int>, int> index;
  std::vector<int> class_of(static_cast<std::size_t>(n * levels));
  std::vector<std::string> names;
  for (int x = 0; x < n; ++x) {
    for (int a = 0; a < levels; ++a) {
      std::vector<int> gr(static_cast<std::size_t>(n));
      for (int t = 0; t < n; ++t) gr[static_cast<std::size_t>(t)] = s.ic(t, a, x);
      auto [it, fresh] = index.emplace(gr, static_cast<int>(profiles.size()));
      if (fresh) {
        profiles.push_back(gr);
        names.push_back(s.space().name(x) + "@" + lvl(s.chain(), a));
      }
      class_of[static_cast<std::size_t>(x * levels + a)] = it->second;
    }
  }
  const int m = static_cast<int>(profiles.size());
  auto cls = [&](int x, int a) { return class_of[static_cast<std::size_t>(x * levels + a)]; };

  // Operations through every representative; disagreement is recorded.
  LawTally consistency("well-defined");
  std::vector<int> add(static_cast<std::size_t>(m * m), -1);
  std::vector<int> scale(static_cast<std::size_t>(levels * m), -1);
  for (int x = 0; x < n; ++x) {
    for (int a = 0; a < levels; ++a) {
      const int p = cls(x, a);
      for (int alpha = 0; alpha < levels; ++alpha) {
        const int v = cls(x, std::min(alpha, a));
        int& slot = scale[static_cast<std::size_t>(alpha * m + p)];
        if (slot < 0) slot = v;
        consistency.record(slot == v, [&] { return "scale by " + lvl(s.chain(), alpha) + " of " + names[p]; });
      }
      for (int y = 0; y < n; ++y) {
        for (int b = 0; b < levels; ++b) {
          const int q = cls(y, b);
          const int v = a >= b ? cls(s.ic(x, b, y), a) : cls(s.ic(y, a, x), b);
          int& slot = add[static_cast<std::size_t>(p * m + q)];
          if (slot < 0) slot = v;
          consistency.record(slot == v, [&] { return "sum of " + names[p] + " and " + names[q]; });
        }
      }
    }
  }
  std::vector<std::uint8_t> add8(add.begin(), add.end());
  std::vector<std::uint8_t> scale8(scale.begin(), scale.end());
  std::vector<int> embedding(static_cast<std::size_t>(n));
  for (int x = 0; x < n; ++x) embedding[static_cast<std::size_t>(x)] = cls(x, top);
  return QuotientSemimodule{
      Semimodule(FiniteSpace(std::move(names)), s.chain(), std::move(add8), std::move(scale8), cls(0, 0)),
      PointMap(n, m, std::move(embedding)), std::move(profiles), std::move(class_of), to_diagnostics({consistency})};
}

Diagnostics check_quotient_embedding(const ConvexStructure& s, const QuotientSemimodule& q) {
  LawTally hom("embedding-combination");
  LawTally inj("embedding-injective");
  LawTally convex("image-convex");
  LawTally join("sum-is-profile-join");
  const auto& mod = q.module;
  const int n = s.size();
  const int top = s.chain().top_index();
  std::vector<bool> in_image(static_cast<std::size_t>(mod.size()), false);
  for (int x = 0; x < n; ++x) in_image[static_cast<std::size_t>(q.embedding(x))] = true;
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      if (x < y) {
        inj.record(q.embedding(x) != q.embedding(y),
                   [&] { return s.space().name(x) + " and " + s.space().name(y) + " share a class"; });
      }
      for (int a = 0; a <= top; ++a) {
        const int lhs = q.embedding(s.ic(x, a, y));
        const int rhs = mod.add(q.embedding(x), mod.scale(a, q.embedding(y)));
        hom.record(lhs == rhs, [&] { return triple_text(s.space(), s.chain(), x, a, y); });
      }
    }
  }
  for (int p = 0; p < mod.size(); ++p) {
    for (int r = 0; r < mod.size(); ++r) {
      std::vector<int> pj(static_cast<std::size_t>(n));
      for (int t = 0; t < n; ++t) {
        pj[static_cast<std::size_t>(t)] =
            s.join(q.profiles[static_cast<std::size_t>(p)][static_cast<std::size_t>(t)],
                   q.profiles[static_cast<std::size_t>(r)][static_cast<std::size_t>(t)]);
      }
      join.record(q.profiles[static_cast<std::size_t>(mod.add(p, r))] == pj,
                  [&] { return mod.space().name(p) + " + " + mod.space().name(r); });
      if (!in_image[static_cast<std::size_t>(p)] || !in_image[static_cast<std::size_t>(r)]) continue;
      for (int a = 0; a <= top; ++a) {
        convex.record(in_image[static_cast<std::size_t>(mod.add(p, mod.scale(a, r)))],
                      [&] { return mod.space().name(p) + " + " + lvl(s.chain(), a) + "*" + mod.space().name(r); });
      }
    }
  }
  return to_diagnostics({hom, inj, convex, join});
}

std::vector<ConvexStructure> enumerate_convex_structures(int n, Chain chain, std::size_t max_candidates) {
  if (n < 1) throw InvalidInput("carrier needs at least one point");
  const int levels = chain.size();
  const int top = chain.top_index();
  // Axioms 1), 4), 5) fix the diagonal, the zero level and the upper half of
  // the top level; everything else is free.
  std::vector<std::size_t> free_slots;
  std::vector<std::uint8_t> table(static_cast<std::size_t>(n * levels * n), 0);
  auto at = [&](int x, int a, int y) { return static_cast<std::size_t>((x * levels + a) * n + y); };
  for (int x = 0; x < n; ++x) {
    for (int a = 0; a < levels; ++a) {
      for (int y = 0; y < n; ++y) {
        if (x == y || a == 0) {
          table[at(x, a, y)] = static_cast<std::uint8_t>(x);
        } else if (a < top || x < y) {
          free_slots.push_back(at(x, a, y));
        }
      }
    }
  }
  double candidates = pow_d(n, static_cast<int>(free_slots.size()));
  if (candidates > static_cast<double>(max_candidates)) {
    throw BudgetExceeded("convex structure enumeration needs " + std::to_string(candidates) + " candidates");
  }
  std::vector<ConvexStructure> out;
  const FiniteSpace space = FiniteSpace::of_size(n);
  while (true) {
    for (int x = 0; x < n; ++x)
      for (int y = x + 1; y < n; ++y) table[at(y, top, x)] = table[at(x, top, y)];
    ConvexStructure s(space, chain, table);
    if (satisfies_ic_axioms(s)) out.push_back(std::move(s));
    std::size_t i = free_slots.size();
    while (i > 0 && table[free_slots[i - 1]] == n - 1) table[free_slots[--i]] = 0;
    if (i == 0) break;
    ++table[free_slots[i - 1]];
  }
  return out;
}

}  // namespace capalg
