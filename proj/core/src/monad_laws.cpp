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

#include "capalg/monad_laws.hpp"

#include <set>
#include <string>

#include "capalg/capacity.hpp"
#include "capalg/finite_space.hpp"
#include "capalg/random.hpp"

namespace capalg {

std::vector<LawTally> tally_chain_laws(Chain chain) {
  const auto levels = chain.levels();
  const Level zero = chain.zero();
  const Level one = chain.one();
  LawTally join_monoid("join-monoid"), meet_monoid("meet-monoid"), dist("distributivity"), absorb("absorption"),
      annihilate("zero-annihilates"), comp("complement");
  for (Level a : levels) {
    const auto wa = [&] { return "a=" + a.to_string(); };
    join_monoid.record(join(a, zero) == a && join(a, a) == a, wa);
    meet_monoid.record(meet(a, one) == a && meet(a, a) == a, wa);
    annihilate.record(meet(zero, a) == zero && meet(a, zero) == zero, wa);
    comp.record(complement(complement(a)) == a, wa);
    for (Level b : levels) {
      const auto wab = [&] { return "a=" + a.to_string() + ", b=" + b.to_string(); };
      join_monoid.record(join(a, b) == join(b, a), wab);
      meet_monoid.record(meet(a, b) == meet(b, a), wab);
      absorb.record(join(a, meet(a, b)) == a && meet(a, join(a, b)) == a, wab);
      comp.record(complement(join(a, b)) == meet(complement(a), complement(b)) &&
                      complement(meet(a, b)) == join(complement(a), complement(b)) &&
                      (a <= b) == (complement(b) <= complement(a)),
                  wab);
      for (Level c : levels) {
        const auto wabc = [&] { return "a=" + a.to_string() + ", b=" + b.to_string() + ", c=" + c.to_string(); };
        join_monoid.record(join(join(a, b), c) == join(a, join(b, c)), wabc);
        meet_monoid.record(meet(meet(a, b), c) == meet(a, meet(b, c)), wabc);
        dist.record(meet(a, join(b, c)) == join(meet(a, b), meet(a, c)) &&
                        join(a, meet(b, c)) == meet(join(a, b), join(a, c)),
                    wabc);
      }
    }
  }
  return {join_monoid, meet_monoid, dist, absorb, annihilate, comp};
}

namespace {

using G1 = InclusionHyperspace;
using G2 = Hyperspace<G1>;
using G3 = Hyperspace<G2>;

template <class T>
std::string show(const Hyperspace<T>& h);

std::string show(int x) { return "x" + std::to_string(x); }

template <class T>
std::string show(const Hyperspace<T>& h) {
  std::string out = "<";
  bool first_set = true;
  for (const auto& set : h.minimal()) {
    out += first_set ? "{" : " {";
    first_set = false;
    bool first = true;
    for (const auto& x : set) {
      out += (first ? "" : ",") + show(x);
      first = false;
    }
    out += "}";
  }
  return out + ">";
}

// Random up-set over `pool`: 1 to 3 generators of 1 to 3 points each.
template <class T>
Hyperspace<T> random_over(const std::vector<T>& pool, Rng& rng) {
  std::vector<std::vector<T>> gens(static_cast<std::size_t>(rng.between(1, 3)));
  for (auto& g : gens) {
    const int size = rng.between(1, std::min<int>(3, static_cast<int>(pool.size())));
    for (int i = 0; i < size; ++i) g.push_back(pool[rng.below(pool.size())]);
  }
  return Hyperspace<T>::generated_by(std::move(gens));
}

template <class T>
void record_g_units(LawTally& t, const Hyperspace<T>& h) {
  t.record(g_mult(g_unit(h)) == h, [&] { return "left unit at " + show(h); });
  t.record(g_mult(g_map([](const T& x) { return g_unit(x); }, h)) == h, [&] { return "right unit at " + show(h); });
}

void record_g_assoc(LawTally& t, const G3& h) {
  const G1 lhs = g_mult(g_mult(h));
  const G1 rhs = g_mult(g_map([](const G2& x) { return g_mult(x); }, h));
  t.record(lhs == rhs, [&] { return show(h); });
}

}  // namespace

std::vector<LawTally> tally_g_monad_laws(int n, const MonadLawOptions& options) {
  if (n < 1 || n > 4) throw BudgetExceeded("G monad laws support 1 to 4 points");
  LawTally unit("g-unit-law"), unit2("g-unit-law-2"), assoc("g-multiplication-law");
  Rng rng(options.seed);
  const std::vector<G1> g1 = all_inclusion_hyperspaces(n);
  std::vector<int> points(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) points[static_cast<std::size_t>(i)] = i;

  std::vector<G2> g2;
  const bool enumerate_g2 = options.exhaustive && g1.size() <= 4;
  if (enumerate_g2) g2 = all_hyperspaces(g1);

  if (options.exhaustive) {
    for (const auto& h : g1) record_g_units(unit, h);
  } else {
    for (std::size_t s = 0; s < options.samples; ++s) record_g_units(unit, random_over(points, rng));
  }
  if (enumerate_g2) {
    for (const auto& h : g2) record_g_units(unit2, h);
    for (std::size_t i = 0; i < g2.size(); ++i) {
      for (std::size_t j = i; j < g2.size(); ++j) {
        std::vector<G2> gen{g2[i]};
        if (j != i) gen.push_back(g2[j]);
        record_g_assoc(assoc, G3::generated_by({gen}));
      }
    }
  } else {
    for (std::size_t s = 0; s < options.samples; ++s) record_g_units(unit2, random_over(g1, rng));
  }
  // General elements of G^3 X over random elements of G^2 X.
  for (std::size_t s = 0; s < options.samples; ++s) {
    std::vector<G2> pool;
    const int size = rng.between(1, 4);
    for (int i = 0; i < size; ++i) pool.push_back(random_over(g1, rng));
    record_g_assoc(assoc, random_over(pool, rng));
  }
  return {unit, unit2, assoc};
}

std::vector<LawTally> tally_capacity_monad_laws(int n, Chain chain, const MonadLawOptions& options) {
  LawTally unit("unit-law"), assoc("multiplication-law");
  Rng rng(options.seed);
  std::vector<Capacity> diracs;
  for (int x = 0; x < n; ++x) diracs.push_back(unit_dirac(n, chain, x));
  auto record_units = [&](const Capacity& c) {
    unit.record(mult(unit_dirac(1, chain, 0), std::vector<Capacity>{c}) == c,
                [&] { return "left unit at " + describe(c); });
    unit.record(mult(c, diracs) == c, [&] { return "right unit at " + describe(c); });
  };
  if (options.exhaustive) {
    for (const auto& c : enumerate_capacities(n, chain, CapacityClass::kAll)) record_units(c);
  } else {
    for (std::size_t s = 0; s < options.samples; ++s) record_units(random_capacity(n, chain, rng));
  }
  for (std::size_t s = 0; s < options.samples; ++s) {
    // A third-order capacity over r second-order ones, each over a shared
    // pool of m capacities on X.
    const int m = rng.between(1, 5);
    const int r = rng.between(1, 4);
    std::vector<Capacity> pool;
    for (int i = 0; i < m; ++i) pool.push_back(random_capacity(n, chain, rng));
    std::vector<Capacity> second;
    for (int i = 0; i < r; ++i) second.push_back(random_capacity(m, chain, rng));
    const Capacity third = random_capacity(r, chain, rng);
    const Capacity lhs = mult(mult(third, second).materialized(), pool);
    std::vector<Capacity> flattened;
    for (const auto& c : second) flattened.push_back(mult(c, pool).materialized());
    const Capacity rhs = mult(third, flattened);
    assoc.record(lhs == rhs, [&] {
      std::string w = "outer " + describe(third) + " over";
      for (const auto& c : second) w += " " + describe(c);
      w += " over";
      for (const auto& c : pool) w += " " + describe(c);
      return w;
    });
  }
  return {unit, assoc};
}

}  // namespace capalg
