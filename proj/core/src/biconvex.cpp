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

#include "capalg/biconvex.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <set>
#include <utility>

#include "capalg/random.hpp"

namespace capalg {
namespace {

using Table = std::vector<std::uint8_t>;

std::string lvl(const Chain& chain, int a) { return chain.level(a).to_string(); }

void check_sizes(const FiniteSpace& space, const Chain& chain, const Table& bjoin, const Table& bmeet,
                 const Table& smeet, const Table& sjoin) {
  const std::size_t n = static_cast<std::size_t>(space.size());
  const std::size_t l = static_cast<std::size_t>(chain.size());
  if (bjoin.size() != n * n || bmeet.size() != n * n) throw InvalidInput("lattice tables need n*n entries");
  if (smeet.size() != l * n || sjoin.size() != l * n) throw InvalidInput("action tables need levels*n entries");
  for (const Table* t : {&bjoin, &bmeet, &smeet, &sjoin}) {
    for (auto v : *t) {
      if (v >= n) throw InvalidInput("operation value outside the carrier");
    }
  }
}

// Least element for a join table, or -1.
int least_for(const Table& join, int n) {
  for (int x = 0; x < n; ++x) {
    bool ok = true;
    for (int y = 0; y < n && ok; ++y) ok = join[x * n + y] == y;
    if (ok) return x;
  }
  return -1;
}

int greatest_for(const Table& join, int n) {
  for (int x = 0; x < n; ++x) {
    bool ok = true;
    for (int y = 0; y < n && ok; ++y) ok = join[x * n + y] == x;
    if (ok) return x;
  }
  return -1;
}

LawTally lattice_tally(const FiniteSpace& sp, const Table& j, const Table& m) {
  const int n = sp.size();
  LawTally t("lattice");
  auto J = [&](int x, int y) { return j[x * n + y]; };
  auto M = [&](int x, int y) { return m[x * n + y]; };
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      const auto xy = [&] { return "x=" + sp.name(x) + ", y=" + sp.name(y); };
      t.record(J(x, y) == J(y, x) && M(x, y) == M(y, x), [&] { return "commutativity at " + xy(); });
      t.record(J(x, M(x, y)) == x && M(x, J(x, y)) == x, [&] { return "absorption at " + xy(); });
      for (int z = 0; z < n; ++z) {
        t.record(J(J(x, y), z) == J(x, J(y, z)) && M(M(x, y), z) == M(x, M(y, z)),
                 [&] { return "associativity at " + xy() + ", z=" + sp.name(z); });
      }
    }
    t.record(J(x, x) == x && M(x, x) == x, [&] { return "idempotence at x=" + sp.name(x); });
  }
  return t;
}

void rename_into(std::vector<LawTally>& out, std::vector<LawTally> src, const std::string& prefix) {
  for (auto& t : src) {
    t.name = prefix + t.name;
    out.push_back(std::move(t));
  }
}

}  // namespace

BiconvexStructure::BiconvexStructure(FiniteSpace space, Chain chain, Table bjoin, Table bmeet, Table smeet,
                                     Table sjoin)
    : space_(std::move(space)),
      chain_(chain),
      bjoin_(std::move(bjoin)),
      bmeet_(std::move(bmeet)),
      smeet_(std::move(smeet)),
      sjoin_(std::move(sjoin)) {
  check_sizes(space_, chain_, bjoin_, bmeet_, smeet_, sjoin_);
  bottom_ = least_for(bjoin_, size());
  top_ = greatest_for(bjoin_, size());
}

ConvexStructure BiconvexStructure::convex() const {
  return ConvexStructure::from_function(space_, chain_, [&](int x, int a, int y) { return bjoin(x, smeet(a, y)); });
}

DualConvexStructure BiconvexStructure::dual_convex() const {
  return DualConvexStructure::from_function(space_, chain_,
                                            [&](int x, int a, int y) { return bmeet(x, sjoin(a, y)); });
}

BiconvexStructure chain_model_biconvex(Chain chain) {
  std::vector<std::string> names;
  for (Level l : chain.levels()) names.push_back(l.to_string());
  auto mx = [](int a, int b) { return std::max(a, b); };
  auto mn = [](int a, int b) { return std::min(a, b); };
  return BiconvexStructure::from_functions(FiniteSpace(std::move(names)), chain, mx, mn, mn, mx);
}

std::vector<LawTally> tally_biconvex(const BiconvexStructure& b) {
  const auto& sp = b.space();
  const auto& ch = b.chain();
  const int n = b.size();
  const int top = ch.top_index();
  std::vector<LawTally> out;
  out.push_back(lattice_tally(sp, b.bjoin_table(), b.bmeet_table()));
  LawTally bounded("lattice-bounds");
  bounded.record(b.bottom() >= 0 && b.top() >= 0, [] { return std::string("no least or greatest element"); });
  out.push_back(bounded);
  rename_into(out,
              tally_semimodule_axioms(Semimodule(sp, ch, b.bjoin_table(), b.smeet_table(), std::max(b.bottom(), 0)),
                                      ScalarSemiring::kMaxMin),
              "smeet-");
  rename_into(out,
              tally_semimodule_axioms(Semimodule(sp, ch, b.bmeet_table(), b.sjoin_table(), std::max(b.top(), 0)),
                                      ScalarSemiring::kMinMax),
              "sjoin-");
  LawTally assoc_join("mixed-associative-join");
  LawTally assoc_meet("mixed-associative-meet");
  LawTally dist_meet("mixed-distributive-smeet");
  LawTally dist_join("mixed-distributive-sjoin");
  for (int a = 0; a <= top; ++a) {
    for (int x = 0; x < n; ++x) {
      for (int y = 0; y < n; ++y) {
        const auto w = [&] { return "alpha=" + lvl(ch, a) + ", x=" + sp.name(x) + ", y=" + sp.name(y); };
        assoc_join.record(b.bjoin(b.sjoin(a, x), y) == b.sjoin(a, b.bjoin(x, y)), w);
        assoc_meet.record(b.bmeet(b.smeet(a, x), y) == b.smeet(a, b.bmeet(x, y)), w);
      }
      for (int c = 0; c <= top; ++c) {
        const auto w = [&] { return "alpha=" + lvl(ch, a) + ", beta=" + lvl(ch, c) + ", x=" + sp.name(x); };
        dist_meet.record(b.smeet(a, b.sjoin(c, x)) == b.sjoin(std::min(a, c), b.smeet(a, x)), w);
        dist_join.record(b.sjoin(a, b.smeet(c, x)) == b.smeet(std::max(a, c), b.sjoin(a, x)), w);
      }
    }
  }
  out.push_back(assoc_join);
  out.push_back(assoc_meet);
  out.push_back(dist_meet);
  out.push_back(dist_join);
  return out;
}

Diagnostics check_biconvex(const BiconvexStructure& b) { return to_diagnostics(tally_biconvex(b)); }

bool is_distributive_lattice(const BiconvexStructure& b) {
  const int n = b.size();
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z) {
        if (b.bmeet(x, b.bjoin(y, z)) != b.bjoin(b.bmeet(x, y), b.bmeet(x, z))) return false;
      }
  return true;
}

Diagnostics check_triple(const TripleStructure& t) {
  const int n = t.space.size();
  const int top = t.chain.top_index();
  if (t.bjoin.size() != static_cast<std::size_t>(n * n) || t.bmeet.size() != static_cast<std::size_t>(n * n) ||
      t.p.size() != static_cast<std::size_t>(t.chain.size()) || t.m.size() != static_cast<std::size_t>(t.chain.size())) {
    return {{"shape", "table sizes do not match the carrier and chain"}};
  }
  for (const auto* v : {&t.p, &t.m}) {
    for (int x : *v) {
      if (x < 0 || x >= n) return {{"shape", "level map value outside the carrier"}};
    }
  }
  for (const auto* v : {&t.bjoin, &t.bmeet}) {
    for (auto x : *v) {
      if (x >= n) return {{"shape", "lattice value outside the carrier"}};
    }
  }
  std::vector<LawTally> out{lattice_tally(t.space, t.bjoin, t.bmeet)};
  const int bot = least_for(t.bjoin, n);
  const int tp = greatest_for(t.bjoin, n);
  auto J = [&](int x, int y) { return t.bjoin[x * n + y]; };
  auto M = [&](int x, int y) { return t.bmeet[x * n + y]; };
  LawTally pj("p-join"), pt("p-top"), mm("m-meet"), mb("m-bottom"), d("condition-d");
  pt.record(t.p[top] == tp, [&] { return "p(1) = " + t.space.name(t.p[top]); });
  mb.record(t.m[0] == bot, [&] { return "m(0) = " + t.space.name(t.m[0]); });
  for (int a = 0; a <= top; ++a) {
    for (int c = 0; c <= top; ++c) {
      const auto w = [&] { return "alpha=" + lvl(t.chain, a) + ", beta=" + lvl(t.chain, c); };
      pj.record(t.p[std::max(a, c)] == J(t.p[a], t.p[c]), w);
      mm.record(t.m[std::min(a, c)] == M(t.m[a], t.m[c]), w);
      d.record(M(t.m[a], t.p[c]) == t.p[std::min(a, c)] && J(t.m[a], t.p[c]) == t.m[std::max(a, c)], w);
    }
  }
  out.insert(out.end(), {pj, pt, mm, mb, d});
  return to_diagnostics(out);
}

TripleStructure triple_from_biconvex(const BiconvexStructure& b) {
  const auto d = check_biconvex(b);
  if (!d.empty()) throw InvalidInput("not a biconvex structure (" + d.front().code + ": " + d.front().message + ")");
  TripleStructure t{b.space(), b.chain(), b.bjoin_table(), b.bmeet_table(), {}, {}};
  for (int a = 0; a < b.chain().size(); ++a) {
    t.p.push_back(b.sjoin(a, b.bottom()));
    t.m.push_back(b.smeet(a, b.top()));
  }
  return t;
}

BiconvexStructure biconvex_from_triple(const TripleStructure& t) {
  const auto d = check_triple(t);
  if (!d.empty()) throw InvalidInput("not a valid triple (" + d.front().code + ": " + d.front().message + ")");
  const int n = t.space.size();
  return BiconvexStructure::from_functions(
      t.space, t.chain, [&](int x, int y) { return t.bjoin[x * n + y]; },
      [&](int x, int y) { return t.bmeet[x * n + y]; }, [&](int a, int x) { return t.bmeet[t.m[a] * n + x]; },
      [&](int a, int x) { return t.bjoin[t.p[a] * n + x]; });
}

namespace {

template <class C>
void require_carrier(const BiconvexStructure& b, const C& c) {
  if (c.carrier_size() != b.size()) throw CarrierMismatch("capacity and structure carriers differ");
  if (!(c.chain() == b.chain())) throw ChainMismatch("capacity and structure chains differ");
  if (b.size() > kMaxTableCarrier) throw BudgetExceeded("closed forms need at most 20 points");
}

int fold_join(const BiconvexStructure& b, Subset s) {
  const auto members = s.members();
  int acc = members.front();
  for (int x : members) acc = b.bjoin(acc, x);
  return acc;
}

int fold_meet(const BiconvexStructure& b, Subset s) {
  const auto members = s.members();
  int acc = members.front();
  for (int x : members) acc = b.bmeet(acc, x);
  return acc;
}

}  // namespace

ClosedForms possibility_closed_forms(const BiconvexStructure& b, const PossibilityCapacity& c) {
  require_carrier(b, c);
  const int n = b.size();
  ClosedForms out;
  out.value = b.smeet(c.raw_density(0), 0);
  for (int x = 1; x < n; ++x) out.value = b.bjoin(out.value, b.smeet(c.raw_density(x), x));
  bool first = true;
  const Subset full = Subset::full(n);
  for (const Subset a : canonical_subsets(n, false)) {
    const int v = b.sjoin(c.raw(full - a), fold_join(b, a));
    out.dual_form = first ? v : b.bmeet(out.dual_form, v);
    first = false;
  }
  return out;
}

ClosedForms necessity_closed_forms(const BiconvexStructure& b, const NecessityCapacity& c) {
  require_carrier(b, c);
  const int n = b.size();
  ClosedForms out;
  out.value = b.sjoin(c.raw_codensity(0), 0);
  for (int x = 1; x < n; ++x) out.value = b.bmeet(out.value, b.sjoin(c.raw_codensity(x), x));
  bool first = true;
  for (const Subset a : canonical_subsets(n, false)) {
    const int v = b.smeet(c.raw(a), fold_meet(b, a));
    out.dual_form = first ? v : b.bjoin(out.dual_form, v);
    first = false;
  }
  return out;
}

int structure_map_possibility(const BiconvexStructure& b, const PossibilityCapacity& c) {
  return possibility_closed_forms(b, c).value;
}

int structure_map_necessity(const BiconvexStructure& b, const NecessityCapacity& c) {
  return necessity_closed_forms(b, c).value;
}

PreimageAtlas::PreimageAtlas(int n, Chain chain)
    : n_(n),
      chain_(chain),
      unions_(enumerate_capacities(n, chain, CapacityClass::kUnion)),
      intersections_(enumerate_capacities(n, chain, CapacityClass::kIntersection)) {}

namespace {

// Calls fn(subset) for every k-subset of {0..m-1}, lexicographically, until
// fn returns false or the visit budget runs out. Returns false if stopped.
template <class Fn>
bool for_each_combination(int m, int k, std::size_t& budget, Fn&& fn) {
  std::vector<int> idx(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) idx[static_cast<std::size_t>(i)] = i;
  while (true) {
    if (budget == 0) return false;
    --budget;
    if (!fn(idx)) return false;
    int i = k - 1;
    while (i >= 0 && idx[static_cast<std::size_t>(i)] == m - k + i) --i;
    if (i < 0) return true;
    ++idx[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j) idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
  }
}

constexpr std::size_t kSupportVisitBudget = 200'000;

}  // namespace

std::vector<Capacity> PreimageAtlas::preimages(const Capacity& c, Diagram d, std::size_t limit) const {
  if (c.carrier_size() != n_) throw CarrierMismatch("capacity on the wrong carrier");
  if (!(c.chain() == chain_)) throw ChainMismatch("capacity on the wrong chain");
  const bool unions_outer = d == Diagram::kUnionOverIntersection;
  const auto& items = index(d).items();
  const int v = static_cast<int>(items.size());
  const int top = chain_.top_index();
  const auto subsets = canonical_subsets(n_, true);
  std::vector<int> target;
  for (const Subset s : subsets) target.push_back(c.raw(s));
  std::vector<std::vector<int>> vals(static_cast<std::size_t>(v));
  for (int j = 0; j < v; ++j) {
    for (const Subset s : subsets) vals[static_cast<std::size_t>(j)].push_back(items[static_cast<std::size_t>(j)].raw(s));
  }

  // Extremal weights: the largest density below c, or the smallest
  // codensity above it.
  std::vector<int> bound(static_cast<std::size_t>(v), unions_outer ? top : 0);
  for (int j = 0; j < v; ++j) {
    for (std::size_t f = 0; f < subsets.size(); ++f) {
      const int e = vals[static_cast<std::size_t>(j)][f];
      if (unions_outer && e > target[f]) bound[static_cast<std::size_t>(j)] = std::min(bound[static_cast<std::size_t>(j)], target[f]);
      if (!unions_outer && e < target[f]) bound[static_cast<std::size_t>(j)] = std::max(bound[static_cast<std::size_t>(j)], target[f]);
    }
  }
  const int neutral = unions_outer ? 0 : top;
  auto reaches = [&](const std::vector<int>& w) {
    for (std::size_t f = 0; f < subsets.size(); ++f) {
      int acc = neutral;
      for (int j = 0; j < v; ++j) {
        const int wj = w[static_cast<std::size_t>(j)];
        if (wj == neutral) continue;
        const int e = vals[static_cast<std::size_t>(j)][f];
        acc = unions_outer ? std::max(acc, std::min(wj, e)) : std::min(acc, std::max(wj, e));
      }
      if (acc != target[f]) return false;
    }
    return true;
  };
  std::vector<Capacity> out;
  if (!reaches(bound) || limit == 0) return out;

  auto make = [&](const std::vector<int>& w) -> Capacity {
    std::vector<std::uint8_t> w8(w.begin(), w.end());
    Capacity pre = unions_outer ? Capacity(PossibilityCapacity(chain_, std::move(w8)))
                                : Capacity(NecessityCapacity(chain_, std::move(w8)));
    if (!(mult(pre, items) == c)) throw Error("preimage search produced a non-preimage");
    return pre;
  };
  out.push_back(make(bound));

  std::vector<int> support;
  for (int j = 0; j < v; ++j) {
    if (bound[static_cast<std::size_t>(j)] != neutral) support.push_back(j);
  }
  const int m = static_cast<int>(support.size());
  std::size_t budget = kSupportVisitBudget;
  for (int k = 1; k < m && out.size() < limit; ++k) {
    const bool finished = for_each_combination(m, k, budget, [&](const std::vector<int>& pick) {
      std::vector<int> w(static_cast<std::size_t>(v), neutral);
      for (int i : pick) {
        const int j = support[static_cast<std::size_t>(i)];
        w[static_cast<std::size_t>(j)] = bound[static_cast<std::size_t>(j)];
      }
      if (reaches(w)) out.push_back(make(w));
      return out.size() < limit;
    });
    if (!finished && budget == 0) break;
  }
  // Minimal-support preimages are the most informative; keep the extremal
  // one last when others were found.
  if (out.size() > 1) std::rotate(out.begin(), out.begin() + 1, out.end());
  return out;
}

std::shared_ptr<const PreimageAtlas> preimage_atlas(int n, Chain chain) {
  static std::mutex mu;
  static std::map<std::pair<int, int>, std::shared_ptr<const PreimageAtlas>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[{n, chain.resolution()}];
  if (!slot) slot = std::make_shared<const PreimageAtlas>(n, chain);
  return slot;
}

std::shared_ptr<const CapacityCatalog> capacity_catalog(int n, Chain chain) {
  static std::mutex mu;
  static std::map<std::pair<int, int>, std::shared_ptr<const CapacityCatalog>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[{n, chain.resolution()}];
  if (!slot) slot = std::make_shared<const CapacityCatalog>(enumerate_capacities(n, chain, CapacityClass::kAll));
  return slot;
}

namespace {

// Inner structure map values on the index of a diagram.
std::vector<int> inner_values(const BiconvexStructure& b, const PreimageAtlas& atlas, Diagram d) {
  std::vector<int> out;
  for (const auto& e : atlas.index(d).items()) {
    out.push_back(d == Diagram::kUnionOverIntersection ? structure_map_necessity(b, *as_necessity(e))
                                                       : structure_map_possibility(b, *as_possibility(e)));
  }
  return out;
}

int through(const BiconvexStructure& b, const Capacity& preimage, Diagram d, const std::vector<int>& inner) {
  const PointMap f(static_cast<int>(inner.size()), b.size(), inner);
  const Capacity pushed = pushforward(f, preimage);
  if (d == Diagram::kUnionOverIntersection) return structure_map_possibility(b, *as_possibility(pushed));
  return structure_map_necessity(b, *as_necessity(pushed));
}

}  // namespace

int structure_map_through(const BiconvexStructure& b, const Capacity& preimage, Diagram d) {
  const auto atlas = preimage_atlas(b.size(), b.chain());
  if (preimage.carrier_size() != static_cast<int>(atlas->index(d).size())) {
    throw CarrierMismatch("preimage does not live on the diagram's index");
  }
  return through(b, preimage, d, inner_values(b, *atlas, d));
}

std::optional<int> structure_map_full(const BiconvexStructure& b, const Capacity& c, Diagram d) {
  require_carrier(b, c);
  const auto atlas = preimage_atlas(b.size(), b.chain());
  const auto pre = atlas->preimages(c, d, 1);
  if (pre.empty()) return std::nullopt;
  return through(b, pre.front(), d, inner_values(b, *atlas, d));
}

int sugeno_form(const BiconvexStructure& b, const Capacity& c) {
  require_carrier(b, c);
  bool first = true;
  int acc = 0;
  for (const Subset f : canonical_subsets(b.size(), false)) {
    const int v = b.smeet(c.raw(f), fold_meet(b, f));
    acc = first ? v : b.bjoin(acc, v);
    first = false;
  }
  return acc;
}

FullStructureMap::FullStructureMap(FiniteSpace space, Chain chain, std::vector<int> table)
    : space_(std::move(space)), chain_(chain), domain_(capacity_catalog(space_.size(), chain)), table_(std::move(table)) {
  if (table_.size() != domain_->size()) throw InvalidInput("structure map table size does not match the capacities");
  for (int v : table_) {
    if (v < 0 || v >= space_.size()) throw InvalidInput("structure map value outside the carrier");
  }
}

FullStructureMap FullStructureMap::from_biconvex(const BiconvexStructure& b, Diagram d) {
  const auto atlas = preimage_atlas(b.size(), b.chain());
  const auto inner = inner_values(b, *atlas, d);
  const auto domain = capacity_catalog(b.size(), b.chain());
  std::vector<int> table;
  for (const auto& c : domain->items()) {
    const auto pre = atlas->preimages(c, d, 1);
    if (pre.empty()) throw InvalidInput("no preimage under the monad product for " + describe(c, b.space()));
    table.push_back(through(b, pre.front(), d, inner));
  }
  return FullStructureMap(b.space(), b.chain(), std::move(table));
}

int FullStructureMap::operator()(const Capacity& c) const {
  const int pos = domain_->find(c);
  if (pos < 0) throw InvalidInput("capacity outside the structure map's domain");
  return table_[static_cast<std::size_t>(pos)];
}

std::vector<LawTally> tally_full_algebra_laws(const FullStructureMap& xi, const LawCheckOptions& options) {
  const int n = xi.space().size();
  const Chain& chain = xi.chain();
  const auto& items = xi.domain().items();
  std::vector<LawTally> t{LawTally("unit-law"), LawTally("multiplication-law")};
  for (int x = 0; x < n; ++x) {
    const int v = xi(unit_dirac(n, chain, x));
    t[0].record(v == x, [&] { return "xi(delta_" + xi.space().name(x) + ") = " + xi.space().name(v); });
  }
  const auto atlas = preimage_atlas(n, chain);
  Rng rng(options.seed);
  for (std::size_t s = 0; s < options.samples; ++s) {
    std::vector<Capacity> index;
    std::vector<int> ids;
    const int kind = static_cast<int>(rng.below(4));
    if (kind == 3) {
      // Union capacities over all intersection capacities.
      index = atlas->intersections().items();
    } else {
      const int r = rng.between(1, std::min<int>(6, static_cast<int>(items.size())));
      std::set<int> pick;
      while (static_cast<int>(pick.size()) < r) pick.insert(static_cast<int>(rng.below(items.size())));
      for (int i : pick) index.push_back(items[static_cast<std::size_t>(i)]);
    }
    const int r = static_cast<int>(index.size());
    Capacity outer = kind == 1 ? Capacity(random_necessity(r, chain, rng))
                     : kind == 2 ? random_capacity(r, chain, rng)
                                 : Capacity(random_possibility(r, chain, rng));
    std::vector<int> xs;
    for (const auto& c : index) xs.push_back(xi(c));
    const int lhs = xi(mult(outer, index).materialized());
    const int rhs = xi(pushforward(PointMap(r, n, xs), outer));
    t[1].record(lhs == rhs, [&] {
      std::string w = "second-order capacity over {";
      for (int i = 0; i < std::min(r, 6); ++i) w += (i ? "; " : "") + describe(index[static_cast<std::size_t>(i)], xi.space());
      return w + (r > 6 ? "; ...}" : "}") + " with outer " + describe(outer);
    });
  }
  return t;
}

Diagnostics check_full_algebra_laws(const FullStructureMap& xi, const LawCheckOptions& options) {
  return to_diagnostics(tally_full_algebra_laws(xi, options));
}

LatticeTables lattice_from_algebra(const FullStructureMap& xi) {
  const int n = xi.space().size();
  const Chain& chain = xi.chain();
  std::vector<SetFunction> diracs;
  for (int x = 0; x < n; ++x) diracs.push_back(unit_dirac(n, chain, x).table());
  LatticeTables out;
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      out.bjoin.push_back(static_cast<std::uint8_t>(xi(Capacity::from_table(pointwise_join(diracs[x], diracs[y])))));
      out.bmeet.push_back(static_cast<std::uint8_t>(xi(Capacity::from_table(pointwise_meet(diracs[x], diracs[y])))));
    }
  }
  const LawTally t = lattice_tally(xi.space(), out.bjoin, out.bmeet);
  if (!t.ok()) throw InvalidInput("derived operations are not a lattice: " + t.witnesses.front());
  return out;
}

BiconvexStructure biconvex_from_algebra(const FullStructureMap& xi) {
  const int n = xi.space().size();
  const Chain& chain = xi.chain();
  LatticeTables lat = lattice_from_algebra(xi);
  const int bot = least_for(lat.bjoin, n);
  const int tp = greatest_for(lat.bjoin, n);
  if (bot < 0 || tp < 0) throw InvalidInput("derived lattice is not bounded");
  const SetFunction d0 = unit_dirac(n, chain, bot).table();
  const SetFunction d1 = unit_dirac(n, chain, tp).table();
  TripleStructure t{xi.space(), chain, lat.bjoin, lat.bmeet, {}, {}};
  for (Level a : chain.levels()) {
    t.p.push_back(xi(Capacity::from_table(pointwise_join(d0, scale_meet(a, d1)))));
    t.m.push_back(xi(Capacity::from_table(pointwise_meet(d1, scale_join(a, d0)))));
  }
  return biconvex_from_triple(t);
}

namespace {

void require_map(const PointMap& f, const BiconvexStructure& b, const BiconvexStructure& bp) {
  if (f.domain_size() != b.size() || f.codomain_size() != bp.size()) {
    throw CarrierMismatch("map does not match the structure carriers");
  }
  if (!(b.chain() == bp.chain())) throw ChainMismatch("structures use different chains");
}

std::string first_biaffinity_failure(const PointMap& f, const BiconvexStructure& b, const BiconvexStructure& bp) {
  require_map(f, b, bp);
  for (int x = 0; x < b.size(); ++x)
    for (int a = 0; a < b.chain().size(); ++a)
      for (int y = 0; y < b.size(); ++y) {
        const bool ok = f(b.bjoin(x, b.smeet(a, y))) == bp.bjoin(f(x), bp.smeet(a, f(y))) &&
                        f(b.bmeet(x, b.sjoin(a, y))) == bp.bmeet(f(x), bp.sjoin(a, f(y)));
        if (!ok) {
          return "x=" + b.space().name(x) + ", alpha=" + lvl(b.chain(), a) + ", y=" + b.space().name(y);
        }
      }
  return {};
}

}  // namespace

bool is_biaffine(const PointMap& f, const BiconvexStructure& b, const BiconvexStructure& b_prime) {
  return first_biaffinity_failure(f, b, b_prime).empty();
}

bool preserves_smeet(const PointMap& f, const BiconvexStructure& b, const BiconvexStructure& b_prime) {
  require_map(f, b, b_prime);
  for (int a = 0; a < b.chain().size(); ++a)
    for (int x = 0; x < b.size(); ++x)
      if (f(b.smeet(a, x)) != b_prime.smeet(a, f(x))) return false;
  return true;
}

bool preserves_sjoin(const PointMap& f, const BiconvexStructure& b, const BiconvexStructure& b_prime) {
  require_map(f, b, b_prime);
  for (int a = 0; a < b.chain().size(); ++a)
    for (int x = 0; x < b.size(); ++x)
      if (f(b.sjoin(a, x)) != b_prime.sjoin(a, f(x))) return false;
  return true;
}

MorphismCheck morphism_equivalence_full(const PointMap& f, const FullStructureMap& xi, const BiconvexStructure& b,
                                        const FullStructureMap& xi_prime, const BiconvexStructure& b_prime) {
  MorphismCheck out;
  const std::string affine_witness = first_biaffinity_failure(f, b, b_prime);
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

void validate_cube(const CubeStructure& cube) {
  if (cube.a_size < 1) throw InvalidInput("a cube needs at least one coordinate");
  if (static_cast<int>(cube.phi.size()) != cube.a_size) throw InvalidInput("one level map per coordinate");
  double points = 1;
  for (int i = 0; i < cube.a_size; ++i) points *= cube.chain.size();
  if (points > FiniteSpace::kMaxSize) throw BudgetExceeded("cube has more than 64 points");
  const int top = cube.chain.top_index();
  for (const auto& phi : cube.phi) {
    if (static_cast<int>(phi.size()) != cube.chain.size()) throw InvalidInput("level map has the wrong length");
    if (phi.front() != 0 || phi.back() != top) throw InvalidInput("level map must fix 0 and 1");
    for (std::size_t i = 0; i < phi.size(); ++i) {
      if (phi[i] < 0 || phi[i] > top) throw InvalidInput("level map value off the chain");
      if (i > 0 && phi[i] < phi[i - 1]) throw InvalidInput("level map must be non-decreasing");
    }
  }
}

BiconvexStructure cube_structure(const CubeStructure& cube) {
  validate_cube(cube);
  const int l = cube.chain.size();
  const int dims = cube.a_size;
  int count = 1;
  for (int i = 0; i < dims; ++i) count *= l;
  std::vector<std::vector<int>> pts(static_cast<std::size_t>(count), std::vector<int>(static_cast<std::size_t>(dims)));
  std::vector<std::string> names;
  for (int p = 0; p < count; ++p) {
    int rest = p;
    for (int i = dims - 1; i >= 0; --i) {
      pts[static_cast<std::size_t>(p)][static_cast<std::size_t>(i)] = rest % l;
      rest /= l;
    }
    std::string name;
    for (int i = 0; i < dims; ++i) name += (i ? ";" : "") + lvl(cube.chain, pts[static_cast<std::size_t>(p)][static_cast<std::size_t>(i)]);
    names.push_back(name);
  }
  auto encode = [&](const std::vector<int>& v) {
    int p = 0;
    for (int c : v) p = p * l + c;
    return p;
  };
  auto pointwise = [&](int x, int y, auto op) {
    std::vector<int> v(static_cast<std::size_t>(dims));
    for (int i = 0; i < dims; ++i) {
      v[static_cast<std::size_t>(i)] = op(i, pts[static_cast<std::size_t>(x)][static_cast<std::size_t>(i)],
                                          y < 0 ? 0 : pts[static_cast<std::size_t>(y)][static_cast<std::size_t>(i)]);
    }
    return encode(v);
  };
  const auto& phi = cube.phi;
  return BiconvexStructure::from_functions(
      FiniteSpace(std::move(names)), cube.chain,
      [&](int x, int y) { return pointwise(x, y, [](int, int u, int w) { return std::max(u, w); }); },
      [&](int x, int y) { return pointwise(x, y, [](int, int u, int w) { return std::min(u, w); }); },
      [&](int a, int x) {
        return pointwise(x, -1, [&](int i, int u, int) { return std::min(phi[static_cast<std::size_t>(i)][static_cast<std::size_t>(a)], u); });
      },
      [&](int a, int x) {
        return pointwise(x, -1, [&](int i, int u, int) { return std::max(phi[static_cast<std::size_t>(i)][static_cast<std::size_t>(a)], u); });
      });
}

std::vector<std::vector<int>> monotone_level_maps(Chain chain) {
  const int top = chain.top_index();
  std::vector<std::vector<int>> out;
  std::vector<int> phi(static_cast<std::size_t>(chain.size()), 0);
  phi.back() = top;
  // Interior values, non-decreasing, lexicographic.
  auto rec = [&](auto&& self, int i) -> void {
    if (i == top) {
      out.push_back(phi);
      return;
    }
    for (int v = phi[static_cast<std::size_t>(i - 1)]; v <= top; ++v) {
      phi[static_cast<std::size_t>(i)] = v;
      self(self, i + 1);
    }
  };
  rec(rec, 1);
  return out;
}

BiconvexStructure diamond_structure(Chain chain, const std::vector<int>& phi1, const std::vector<int>& phi2) {
  for (const auto* phi : {&phi1, &phi2}) {
    if (static_cast<int>(phi->size()) != chain.size()) throw InvalidInput("level map has the wrong length");
    if (phi->front() != 0 || phi->back() != 1) throw InvalidInput("level map onto {0, 1} must fix the ends");
    for (std::size_t i = 0; i < phi->size(); ++i) {
      if ((*phi)[i] < 0 || (*phi)[i] > 1) throw InvalidInput("level map value outside {0, 1}");
      if (i > 0 && (*phi)[i] < (*phi)[i - 1]) throw InvalidInput("level map must be non-decreasing");
    }
  }
  // Point p = 2 * u + w for coordinates (u, w).
  auto u = [](int p) { return p >> 1; };
  auto w = [](int p) { return p & 1; };
  auto pt = [](int a, int b) { return 2 * a + b; };
  return BiconvexStructure::from_functions(
      FiniteSpace({"0;0", "0;1", "1;0", "1;1"}), chain,
      [&](int x, int y) { return pt(std::max(u(x), u(y)), std::max(w(x), w(y))); },
      [&](int x, int y) { return pt(std::min(u(x), u(y)), std::min(w(x), w(y))); },
      [&](int a, int x) { return pt(std::min(phi1[static_cast<std::size_t>(a)], u(x)), std::min(phi2[static_cast<std::size_t>(a)], w(x))); },
      [&](int a, int x) { return pt(std::max(phi1[static_cast<std::size_t>(a)], u(x)), std::max(phi2[static_cast<std::size_t>(a)], w(x))); });
}

namespace {

// One equation h(result) = combine(phi, h(x), h(y)) of a coordinate map.
struct Constraint {
  enum Kind { kJoin, kMeet, kSmeet, kSjoin, kJoinSmeet, kMeetSjoin } kind;
  int a;
  int x;
  int y;
  int result;
};

int expected(const Constraint& c, const std::vector<int>& phi, const std::vector<int>& h) {
  const int hx = h[static_cast<std::size_t>(c.x)];
  const int hy = c.y >= 0 ? h[static_cast<std::size_t>(c.y)] : 0;
  const int f = c.a >= 0 ? phi[static_cast<std::size_t>(c.a)] : 0;
  switch (c.kind) {
    case Constraint::kJoin: return std::max(hx, hy);
    case Constraint::kMeet: return std::min(hx, hy);
    case Constraint::kSmeet: return std::min(f, hx);
    case Constraint::kSjoin: return std::max(f, hx);
    case Constraint::kJoinSmeet: return std::max(hx, std::min(f, hy));
    case Constraint::kMeetSjoin: return std::min(hx, std::max(f, hy));
  }
  return -1;
}

std::vector<Constraint> coordinate_constraints(const BiconvexStructure& b, EmbeddingMode mode) {
  const int n = b.size();
  std::vector<Constraint> out;
  if (mode == EmbeddingMode::kAllOperations) {
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y) {
        out.push_back({Constraint::kJoin, -1, x, y, b.bjoin(x, y)});
        out.push_back({Constraint::kMeet, -1, x, y, b.bmeet(x, y)});
      }
    for (int a = 0; a < b.chain().size(); ++a)
      for (int x = 0; x < n; ++x) {
        out.push_back({Constraint::kSmeet, a, x, -1, b.smeet(a, x)});
        out.push_back({Constraint::kSjoin, a, x, -1, b.sjoin(a, x)});
      }
  } else {
    for (int x = 0; x < n; ++x)
      for (int a = 0; a < b.chain().size(); ++a)
        for (int y = 0; y < n; ++y) {
          out.push_back({Constraint::kJoinSmeet, a, x, y, b.bjoin(x, b.smeet(a, y))});
          out.push_back({Constraint::kMeetSjoin, a, x, y, b.bmeet(x, b.sjoin(a, y))});
        }
  }
  return out;
}

bool coordinate_ok(const std::vector<Constraint>& cs, const std::vector<int>& phi, const std::vector<int>& h) {
  return std::all_of(cs.begin(), cs.end(),
                     [&](const Constraint& c) { return h[static_cast<std::size_t>(c.result)] == expected(c, phi, h); });
}

}  // namespace

EmbeddingSearchResult embedding_search(const BiconvexStructure& b, int max_a, EmbeddingMode mode,
                                       std::size_t max_tuples) {
  if (max_a < 1) throw InvalidInput("max_a must be at least 1");
  const int n = b.size();
  const int top = b.chain().top_index();
  const auto cs = coordinate_constraints(b, mode);
  // Bucket constraints by the largest point they mention, so a partial
  // assignment of points 0..i can be tested at depth i.
  std::vector<std::vector<Constraint>> by_depth(static_cast<std::size_t>(n));
  for (const auto& c : cs) {
    const int depth = std::max({c.x, c.y, c.result});
    by_depth[static_cast<std::size_t>(depth)].push_back(c);
  }
  struct Coordinate {
    int phi;
    std::vector<int> h;
  };
  const auto phis = monotone_level_maps(b.chain());
  std::vector<Coordinate> coords;
  for (int pi = 0; pi < static_cast<int>(phis.size()); ++pi) {
    const auto& phi = phis[static_cast<std::size_t>(pi)];
    std::vector<int> h(static_cast<std::size_t>(n), 0);
    auto rec = [&](auto&& self, int i) -> void {
      if (i == n) {
        coords.push_back({pi, h});
        return;
      }
      for (int v = 0; v <= top; ++v) {
        h[static_cast<std::size_t>(i)] = v;
        bool ok = true;
        for (const auto& c : by_depth[static_cast<std::size_t>(i)]) {
          if (h[static_cast<std::size_t>(c.result)] != expected(c, phi, h)) {
            ok = false;
            break;
          }
        }
        if (ok) self(self, i + 1);
      }
    };
    rec(rec, 0);
  }

  EmbeddingSearchResult out;
  out.max_a = max_a;
  out.coordinate_candidates = coords.size();
  const int m = static_cast<int>(coords.size());
  for (int a_size = 1; a_size <= max_a && a_size <= m && !out.certificate; ++a_size) {
    std::size_t budget = max_tuples > out.tuples_examined ? max_tuples - out.tuples_examined : 0;
    const std::size_t before = budget;
    const bool finished = for_each_combination(m, a_size, budget, [&](const std::vector<int>& pick) {
      std::set<std::vector<int>> seen;
      for (int x = 0; x < n; ++x) {
        std::vector<int> t;
        for (int i : pick) t.push_back(coords[static_cast<std::size_t>(i)].h[static_cast<std::size_t>(x)]);
        if (!seen.insert(std::move(t)).second) return true;
      }
      EmbeddingCertificate cert;
      cert.cube.a_size = a_size;
      cert.cube.chain = b.chain();
      for (int i : pick) {
        cert.cube.phi.push_back(phis[static_cast<std::size_t>(coords[static_cast<std::size_t>(i)].phi)]);
        cert.coordinates.push_back(coords[static_cast<std::size_t>(i)].h);
      }
      out.certificate = std::move(cert);
      return false;
    });
    out.tuples_examined += before - budget;
    if (!finished && !out.certificate) throw BudgetExceeded("embedding search passed its tuple budget");
  }
  return out;
}

Diagnostics verify_certificate(const BiconvexStructure& b, const EmbeddingCertificate& cert, EmbeddingMode mode) {
  Diagnostics out;
  try {
    validate_cube(cert.cube);
  } catch (const InvalidInput& e) {
    return {{"cube", e.what()}};
  }
  if (!(cert.cube.chain == b.chain())) return {{"cube", "certificate uses another chain"}};
  if (static_cast<int>(cert.coordinates.size()) != cert.cube.a_size) {
    return {{"shape", "one coordinate map per index"}};
  }
  const auto cs = coordinate_constraints(b, mode);
  for (int i = 0; i < cert.cube.a_size; ++i) {
    const auto& h = cert.coordinates[static_cast<std::size_t>(i)];
    if (static_cast<int>(h.size()) != b.size()) return {{"shape", "coordinate map has the wrong length"}};
    if (std::any_of(h.begin(), h.end(), [&](int v) { return v < 0 || v > b.chain().top_index(); })) {
      return {{"shape", "coordinate value off the chain"}};
    }
    if (!coordinate_ok(cs, cert.cube.phi[static_cast<std::size_t>(i)], h)) {
      out.push_back({"coordinate", "coordinate " + std::to_string(i) + " does not preserve the operations"});
    }
  }
  std::set<std::vector<int>> seen;
  for (int x = 0; x < b.size(); ++x) {
    std::vector<int> t;
    for (const auto& h : cert.coordinates) t.push_back(h[static_cast<std::size_t>(x)]);
    if (!seen.insert(t).second) out.push_back({"injective", "point " + b.space().name(x) + " repeats a tuple"});
  }
  return out;
}

std::vector<LatticeTables> enumerate_lattices(int n) {
  if (n < 1 || n > 5) throw BudgetExceeded("lattice enumeration supports 1 to 5 points");
  std::vector<std::pair<int, int>> pairs;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (a != b) pairs.emplace_back(a, b);
  std::vector<LatticeTables> out;
  const std::uint64_t total = std::uint64_t{1} << pairs.size();
  std::vector<char> le(static_cast<std::size_t>(n * n));
  for (std::uint64_t bits = 0; bits < total; ++bits) {
    std::fill(le.begin(), le.end(), 0);
    for (int a = 0; a < n; ++a) le[static_cast<std::size_t>(a * n + a)] = 1;
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      if ((bits >> i) & 1U) le[static_cast<std::size_t>(pairs[i].first * n + pairs[i].second)] = 1;
    }
    auto L = [&](int a, int b) { return le[static_cast<std::size_t>(a * n + b)] != 0; };
    bool ok = true;
    for (int a = 0; a < n && ok; ++a)
      for (int b = 0; b < n && ok; ++b) {
        if (a != b && L(a, b) && L(b, a)) ok = false;
        for (int c = 0; c < n && ok; ++c)
          if (L(a, b) && L(b, c) && !L(a, c)) ok = false;
      }
    if (!ok) continue;
    LatticeTables t;
    for (int a = 0; a < n && ok; ++a) {
      for (int b = 0; b < n && ok; ++b) {
        int join = -1;
        int meet = -1;
        for (int c = 0; c < n; ++c) {
          if (L(a, c) && L(b, c)) {
            bool least = true;
            for (int d = 0; d < n; ++d)
              if (L(a, d) && L(b, d) && !L(c, d)) least = false;
            if (least) join = c;
          }
          if (L(c, a) && L(c, b)) {
            bool greatest = true;
            for (int d = 0; d < n; ++d)
              if (L(d, a) && L(d, b) && !L(d, c)) greatest = false;
            if (greatest) meet = c;
          }
        }
        if (join < 0 || meet < 0) ok = false;
        t.bjoin.push_back(static_cast<std::uint8_t>(std::max(join, 0)));
        t.bmeet.push_back(static_cast<std::uint8_t>(std::max(meet, 0)));
      }
    }
    if (ok) out.push_back(std::move(t));
  }
  return out;
}

std::vector<BiconvexStructure> enumerate_biconvex_structures(int n, Chain chain, std::size_t max_candidates) {
  const auto lattices = enumerate_lattices(n);
  const int l = chain.size();
  const int top = chain.top_index();
  const int free_rows = top - 1;
  double per_lattice = 1;
  for (int i = 0; i < 2 * free_rows * n; ++i) per_lattice *= n;
  if (per_lattice * static_cast<double>(lattices.size()) > static_cast<double>(max_candidates)) {
    throw BudgetExceeded("biconvex enumeration needs too many candidates");
  }
  const FiniteSpace space = FiniteSpace::of_size(n);
  std::vector<BiconvexStructure> out;
  for (const auto& lat : lattices) {
    const int bot = least_for(lat.bjoin, n);
    const int tp = greatest_for(lat.bjoin, n);
    Table sm(static_cast<std::size_t>(l * n)), sj(static_cast<std::size_t>(l * n));
    for (int x = 0; x < n; ++x) {
      sm[static_cast<std::size_t>(x)] = static_cast<std::uint8_t>(bot);
      sm[static_cast<std::size_t>(top * n + x)] = static_cast<std::uint8_t>(x);
      sj[static_cast<std::size_t>(x)] = static_cast<std::uint8_t>(x);
      sj[static_cast<std::size_t>(top * n + x)] = static_cast<std::uint8_t>(tp);
    }
    // Free cells: interior rows of both actions.
    std::vector<std::uint8_t*> cells;
    for (int a = 1; a < top; ++a)
      for (int x = 0; x < n; ++x) cells.push_back(&sm[static_cast<std::size_t>(a * n + x)]);
    for (int a = 1; a < top; ++a)
      for (int x = 0; x < n; ++x) cells.push_back(&sj[static_cast<std::size_t>(a * n + x)]);
    for (auto* c : cells) *c = 0;
    while (true) {
      BiconvexStructure b(space, chain, lat.bjoin, lat.bmeet, sm, sj);
      const auto tallies = tally_biconvex(b);
      if (std::all_of(tallies.begin(), tallies.end(), [](const LawTally& t) { return t.ok(); })) {
        out.push_back(std::move(b));
      }
      std::size_t i = cells.size();
      while (i > 0 && *cells[i - 1] == n - 1) *cells[--i] = 0;
      if (i == 0) break;
      ++*cells[i - 1];
    }
  }
  return out;
}

}  // namespace capalg
