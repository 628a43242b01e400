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

#include "capalg/capacity.hpp"

#include <algorithm>

namespace capalg {

namespace {

void require_table_size(int n) {
  if (n < 1 || n > kMaxTableCarrier) {
    throw BudgetExceeded("set function tables support 1.." + std::to_string(kMaxTableCarrier) +
                         " points, got " + std::to_string(n));
  }
}

void require_same(const SetFunction& a, const SetFunction& b) {
  if (a.carrier_size() != b.carrier_size()) throw CarrierMismatch("set functions on different carriers");
  if (a.chain() != b.chain()) throw ChainMismatch("set functions on different chains");
}

std::string subset_text(Subset s, const FiniteSpace* names) {
  std::string out = "{";
  bool first = true;
  for (int i : s.members()) {
    if (!first) out += ',';
    first = false;
    out += names ? names->name(i) : "x" + std::to_string(i);
  }
  return out + "}";
}

Diagnostics validate_impl(const SetFunction& sf, bool require_normalized, const FiniteSpace* names) {
  Diagnostics out;
  const int n = sf.carrier_size();
  if (sf.raw(Subset()) != 0) {
    out.push_back({"empty-set-nonzero", "value on the empty set is " + sf.value(Subset()).to_string()});
  }
  if (require_normalized && sf.raw(Subset::full(n)) != sf.chain().top_index()) {
    out.push_back({"not-normalized", "value on the carrier is " + sf.value(Subset::full(n)).to_string()});
  }
  // Covering pairs S < S + {i} suffice for monotonicity.
  for (Subset s : canonical_subsets(n, true)) {
    for (int i = 0; i < n; ++i) {
      if (s.contains(i)) continue;
      const Subset t = s.with(i);
      if (sf.raw(s) > sf.raw(t)) {
        out.push_back({"monotonicity", "monotonicity violated at " + subset_text(s, names) + "\xE2\x8A\x86" +
                                           subset_text(t, names)});
      }
    }
  }
  return out;
}

std::uint8_t checked_index(const Chain& chain, Level v) {
  if (!chain.contains(v)) throw ChainMismatch("level " + v.to_string() + " is not on this chain");
  return static_cast<std::uint8_t>(v.index());
}

std::vector<std::uint8_t> to_raw(const Chain& chain, const std::vector<Level>& levels) {
  std::vector<std::uint8_t> out;
  for (Level l : levels) out.push_back(checked_index(chain, l));
  return out;
}

}  // namespace

SetFunction::SetFunction(int carrier_size, Chain chain)
    : n_(carrier_size), chain_(chain) {
  require_table_size(carrier_size);
  raw_.assign(std::size_t{1} << carrier_size, 0);
}

SetFunction::SetFunction(int carrier_size, Chain chain, std::vector<std::uint8_t> raw)
    : n_(carrier_size), chain_(chain), raw_(std::move(raw)) {
  require_table_size(carrier_size);
  if (raw_.size() != (std::size_t{1} << carrier_size)) {
    throw InvalidInput("set function table has the wrong size");
  }
  for (auto v : raw_) {
    if (v > chain_.top_index()) throw InvalidInput("set function value outside the chain");
  }
}

void SetFunction::set(Subset s, Level v) { raw_[s.bits()] = checked_index(chain_, v); }

Diagnostics validate(const SetFunction& sf, bool require_normalized) {
  return validate_impl(sf, require_normalized, nullptr);
}

Diagnostics validate(const SetFunction& sf, bool require_normalized, const FiniteSpace& names) {
  if (names.size() != sf.carrier_size()) throw CarrierMismatch("names do not match the carrier");
  return validate_impl(sf, require_normalized, &names);
}

PossibilityCapacity::PossibilityCapacity(Chain chain, std::vector<std::uint8_t> density)
    : chain_(chain), density_(std::move(density)) {
  if (density_.empty() || static_cast<int>(density_.size()) > FiniteSpace::kMaxSize) {
    throw InvalidInput("density must cover 1..64 points");
  }
  int top = 0;
  for (auto d : density_) {
    if (d > chain_.top_index()) throw InvalidInput("density value outside the chain");
    top = std::max<int>(top, d);
  }
  if (top != chain_.top_index()) throw InvalidInput("possibility density must reach 1");
}

PossibilityCapacity::PossibilityCapacity(Chain chain, const std::vector<Level>& density)
    : PossibilityCapacity(chain, to_raw(chain, density)) {}

int PossibilityCapacity::raw(Subset s) const {
  int v = 0;
  for (int i : s.members()) v = std::max<int>(v, density_[i]);
  return v;
}

NecessityCapacity::NecessityCapacity(Chain chain, std::vector<std::uint8_t> codensity)
    : chain_(chain), codensity_(std::move(codensity)) {
  if (codensity_.empty() || static_cast<int>(codensity_.size()) > FiniteSpace::kMaxSize) {
    throw InvalidInput("codensity must cover 1..64 points");
  }
  int bottom = chain_.top_index();
  for (auto e : codensity_) {
    if (e > chain_.top_index()) throw InvalidInput("codensity value outside the chain");
    bottom = std::min<int>(bottom, e);
  }
  if (bottom != 0) throw InvalidInput("necessity codensity must reach 0");
}

NecessityCapacity::NecessityCapacity(Chain chain, const std::vector<Level>& codensity)
    : NecessityCapacity(chain, to_raw(chain, codensity)) {}

int NecessityCapacity::raw(Subset s) const {
  int v = chain_.top_index();
  for (int i = 0; i < carrier_size(); ++i) {
    if (!s.contains(i)) v = std::min<int>(v, codensity_[i]);
  }
  return v;
}

Capacity Capacity::from_table(SetFunction sf) {
  if (auto d = validate(sf, true); !d.empty()) {
    throw InvalidInput("not a capacity: " + d.front().message);
  }
  return from_table_unchecked(std::move(sf));
}

Capacity Capacity::from_table_unchecked(SetFunction sf) {
  const int n = sf.carrier_size();
  const Chain chain = sf.chain();
  return Capacity(n, chain, TableRep{sf.raw_values()});
}

Capacity::Capacity(const PossibilityCapacity& c)
    : n_(c.carrier_size()), chain_(c.chain()), rep_(DensityRep{c.raw_densities()}) {}

Capacity::Capacity(const NecessityCapacity& c)
    : n_(c.carrier_size()), chain_(c.chain()), rep_(CodensityRep{c.raw_codensities()}) {}

Capacity Capacity::image(const Capacity& base, const PointMap& f) {
  if (f.domain_size() != base.carrier_size()) {
    throw CarrierMismatch("pushforward along a map whose domain is not the capacity's carrier");
  }
  return Capacity(f.codomain_size(), base.chain(),
                  ImageRep{std::make_shared<const Capacity>(base), f.assignment()});
}

Capacity Capacity::lazy_mult(const Capacity& outer, std::vector<Capacity> index) {
  if (index.empty() || static_cast<int>(index.size()) != outer.carrier_size()) {
    throw CarrierMismatch("outer capacity carrier does not match the index");
  }
  const int n = index.front().carrier_size();
  for (const auto& c : index) {
    if (c.carrier_size() != n) throw CarrierMismatch("index capacities live on different carriers");
    if (c.chain() != outer.chain()) throw ChainMismatch("index capacities use a different chain");
  }
  return Capacity(n, outer.chain(),
                  MultRep{std::make_shared<const Capacity>(outer),
                          std::make_shared<const std::vector<Capacity>>(std::move(index))});
}

Capacity Capacity::conjugate(const Capacity& base) {
  return Capacity(base.carrier_size(), base.chain(), ConjugateRep{std::make_shared<const Capacity>(base)});
}

namespace {

template <class Index>
int mult_value(const Capacity& outer, const Index& index, Subset s, int top) {
  // Values of the inner capacities on s, then the largest level a with
  // outer({i : inner_i(s) >= a}) >= a.
  std::vector<int> inner(index.size());
  for (std::size_t i = 0; i < index.size(); ++i) inner[i] = index[i].raw(s);
  for (int a = top; a > 0; --a) {
    std::uint64_t bits = 0;
    for (std::size_t i = 0; i < inner.size(); ++i) {
      if (inner[i] >= a) bits |= std::uint64_t{1} << i;
    }
    if (outer.raw(Subset(bits)) >= a) return a;
  }
  return 0;
}

}  // namespace

int Capacity::raw(Subset s) const {
  const int top = chain_.top_index();
  return std::visit(
      [&](const auto& rep) -> int {
        using R = std::decay_t<decltype(rep)>;
        if constexpr (std::is_same_v<R, TableRep>) {
          return rep.values[s.bits()];
        } else if constexpr (std::is_same_v<R, DensityRep>) {
          int v = 0;
          for (int i : s.members()) v = std::max<int>(v, rep.density[i]);
          return v;
        } else if constexpr (std::is_same_v<R, CodensityRep>) {
          int v = top;
          for (int i = 0; i < n_; ++i) {
            if (!s.contains(i)) v = std::min<int>(v, rep.codensity[i]);
          }
          return v;
        } else if constexpr (std::is_same_v<R, ImageRep>) {
          std::uint64_t pre = 0;
          for (std::size_t i = 0; i < rep.map.size(); ++i) {
            if (s.contains(rep.map[i])) pre |= std::uint64_t{1} << i;
          }
          return rep.base->raw(Subset(pre));
        } else if constexpr (std::is_same_v<R, MultRep>) {
          return mult_value(*rep.outer, *rep.index, s, top);
        } else {
          return top - rep.base->raw(Subset::full(n_) - s);
        }
      },
      rep_);
}

SetFunction Capacity::table() const {
  require_table_size(n_);
  if (const auto* t = std::get_if<TableRep>(&rep_)) return SetFunction(n_, chain_, t->values);
  std::vector<std::uint8_t> values(std::size_t{1} << n_);
  for (std::uint64_t b = 0; b < values.size(); ++b) values[b] = static_cast<std::uint8_t>(raw(Subset(b)));
  return SetFunction(n_, chain_, std::move(values));
}

Capacity Capacity::materialized() const {
  if (is_table()) return *this;
  return from_table_unchecked(table());
}

bool Capacity::is_table() const { return std::holds_alternative<TableRep>(rep_); }

bool operator==(const Capacity& a, const Capacity& b) {
  if (a.n_ != b.n_ || a.chain_ != b.chain_) return false;
  require_table_size(a.n_);
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << a.n_); ++s) {
    if (a.raw(Subset(s)) != b.raw(Subset(s))) return false;
  }
  return true;
}

Capacity unit_dirac(int n, Chain chain, int x) {
  if (x < 0 || x >= n) throw UnknownElement("point " + std::to_string(x) + " outside the carrier");
  std::vector<std::uint8_t> density(n, 0);
  density[x] = static_cast<std::uint8_t>(chain.top_index());
  return Capacity(PossibilityCapacity(chain, std::move(density)));
}

Capacity unit_dirac(const FiniteSpace& space, Chain chain, std::string_view name) {
  return unit_dirac(space.size(), chain, space.index_of(name));
}

Capacity pushforward(const PointMap& f, const Capacity& c) {
  const Capacity lazy = Capacity::image(c, f);
  return f.codomain_size() <= kMaxTableCarrier ? lazy.materialized() : lazy;
}

Capacity mult(const Capacity& outer, std::span<const Capacity> index, int index_budget) {
  if (static_cast<int>(index.size()) > index_budget) {
    throw BudgetExceeded("index of " + std::to_string(index.size()) + " capacities exceeds the budget of " +
                         std::to_string(index_budget));
  }
  const Capacity lazy = Capacity::lazy_mult(outer, std::vector<Capacity>(index.begin(), index.end()));
  return lazy.carrier_size() <= kMaxTableCarrier ? lazy.materialized() : lazy;
}

Classification classify(const Capacity& c) {
  const int n = c.carrier_size();
  if (n > 10) throw BudgetExceeded("classify enumerates subset pairs; carrier too large");
  const std::uint64_t count = std::uint64_t{1} << n;
  std::vector<int> v(count);
  for (std::uint64_t s = 0; s < count; ++s) v[s] = c.raw(Subset(s));
  Classification out{true, true};
  for (std::uint64_t a = 0; a < count; ++a) {
    for (std::uint64_t b = 0; b < count; ++b) {
      if (v[a | b] != std::max(v[a], v[b])) out.is_union = false;
      if (v[a & b] != std::min(v[a], v[b])) out.is_intersection = false;
    }
  }
  return out;
}

std::optional<PossibilityCapacity> as_possibility(const Capacity& c) {
  if (!classify(c).is_union) return std::nullopt;
  std::vector<std::uint8_t> d(c.carrier_size());
  for (int i = 0; i < c.carrier_size(); ++i) d[i] = static_cast<std::uint8_t>(c.raw(Subset::singleton(i)));
  return PossibilityCapacity(c.chain(), std::move(d));
}

std::optional<NecessityCapacity> as_necessity(const Capacity& c) {
  if (!classify(c).is_intersection) return std::nullopt;
  const Subset full = Subset::full(c.carrier_size());
  std::vector<std::uint8_t> e(c.carrier_size());
  for (int i = 0; i < c.carrier_size(); ++i) {
    e[i] = static_cast<std::uint8_t>(c.raw(full - Subset::singleton(i)));
  }
  return NecessityCapacity(c.chain(), std::move(e));
}

Capacity kappa_dual(const Capacity& c) { return Capacity::conjugate(c).materialized(); }

Capacity embed_inclusion_hyperspace(const InclusionHyperspace& h, int n, Chain chain) {
  SetFunction sf(n, chain);
  for (Subset s : canonical_subsets(n, false)) {
    if (h.contains(s.members())) sf.set_raw(s, chain.top_index());
  }
  return Capacity::from_table(std::move(sf));
}

SetFunction pointwise_join(const SetFunction& a, const SetFunction& b) {
  require_same(a, b);
  SetFunction out(a.carrier_size(), a.chain());
  for (std::uint64_t s = 0; s < a.raw_values().size(); ++s) {
    out.set_raw(Subset(s), std::max(a.raw(Subset(s)), b.raw(Subset(s))));
  }
  return out;
}

SetFunction pointwise_meet(const SetFunction& a, const SetFunction& b) {
  require_same(a, b);
  SetFunction out(a.carrier_size(), a.chain());
  for (std::uint64_t s = 0; s < a.raw_values().size(); ++s) {
    out.set_raw(Subset(s), std::min(a.raw(Subset(s)), b.raw(Subset(s))));
  }
  return out;
}

SetFunction scale_meet(Level alpha, const SetFunction& sf) {
  const int a = checked_index(sf.chain(), alpha);
  SetFunction out(sf.carrier_size(), sf.chain());
  for (std::uint64_t s = 0; s < sf.raw_values().size(); ++s) {
    out.set_raw(Subset(s), std::min(a, sf.raw(Subset(s))));
  }
  return out;
}

SetFunction scale_join(Level alpha, const SetFunction& sf) {
  const int a = checked_index(sf.chain(), alpha);
  SetFunction out(sf.carrier_size(), sf.chain());
  for (std::uint64_t s = 0; s < sf.raw_values().size(); ++s) {
    out.set_raw(Subset(s), std::max(a, sf.raw(Subset(s))));
  }
  return out;
}

namespace {

// Odometer over {0..top}^n in lexicographic order.
template <class Fn>
void for_each_vector(int n, int top, Fn&& fn) {
  std::vector<std::uint8_t> v(n, 0);
  while (true) {
    fn(v);
    int i = n - 1;
    while (i >= 0 && v[i] == top) v[i--] = 0;
    if (i < 0) return;
    ++v[i];
  }
}

void push_checked(std::vector<Capacity>& out, Capacity c, std::size_t max_count) {
  if (out.size() >= max_count) {
    throw BudgetExceeded("capacity enumeration exceeds " + std::to_string(max_count) + " results");
  }
  out.push_back(std::move(c));
}

}  // namespace

std::vector<Capacity> enumerate_capacities(int n, Chain chain, CapacityClass cls, std::size_t max_count) {
  if (n < 1 || n > 6) throw BudgetExceeded("capacity enumeration supports 1..6 points");
  const int top = chain.top_index();
  std::vector<Capacity> out;
  if (cls == CapacityClass::kUnion) {
    for_each_vector(n, top, [&](const std::vector<std::uint8_t>& d) {
      if (*std::max_element(d.begin(), d.end()) != top) return;
      push_checked(out, Capacity(PossibilityCapacity(chain, d)).materialized(), max_count);
    });
    return out;
  }
  if (cls == CapacityClass::kIntersection) {
    for_each_vector(n, top, [&](const std::vector<std::uint8_t>& e) {
      if (*std::min_element(e.begin(), e.end()) != 0) return;
      push_checked(out, Capacity(NecessityCapacity(chain, e)).materialized(), max_count);
    });
    return out;
  }

  // Backtracking over nonempty proper subsets in canonical order. Every
  // one-point shrink of a subset precedes it, so its lower bound is known.
  std::vector<Subset> order;
  for (Subset s : canonical_subsets(n, false)) {
    if (s != Subset::full(n)) order.push_back(s);
  }
  SetFunction sf(n, chain);
  sf.set_raw(Subset::full(n), top);
  auto rec = [&](auto&& self, std::size_t pos) -> void {
    if (pos == order.size()) {
      push_checked(out, Capacity::from_table_unchecked(sf), max_count);
      return;
    }
    const Subset s = order[pos];
    int lo = 0;
    for (int i : s.members()) lo = std::max(lo, sf.raw(s - Subset::singleton(i)));
    for (int v = lo; v <= top; ++v) {
      sf.set_raw(s, v);
      self(self, pos + 1);
    }
    sf.set_raw(s, 0);
  };
  rec(rec, 0);
  return out;
}

Capacity random_capacity(int n, Chain chain, Rng& rng) {
  const int top = chain.top_index();
  SetFunction sf(n, chain);
  for (Subset s : canonical_subsets(n, false)) {
    if (s == Subset::full(n)) break;
    int lo = 0;
    for (int i : s.members()) lo = std::max(lo, sf.raw(s - Subset::singleton(i)));
    sf.set_raw(s, rng.between(lo, top));
  }
  sf.set_raw(Subset::full(n), top);
  return Capacity::from_table_unchecked(std::move(sf));
}

PossibilityCapacity random_possibility(int n, Chain chain, Rng& rng) {
  std::vector<std::uint8_t> d(n);
  for (auto& v : d) v = static_cast<std::uint8_t>(rng.between(0, chain.top_index()));
  d[rng.below(n)] = static_cast<std::uint8_t>(chain.top_index());
  return PossibilityCapacity(chain, std::move(d));
}

NecessityCapacity random_necessity(int n, Chain chain, Rng& rng) {
  std::vector<std::uint8_t> e(n);
  for (auto& v : e) v = static_cast<std::uint8_t>(rng.between(0, chain.top_index()));
  e[rng.below(n)] = 0;
  return NecessityCapacity(chain, std::move(e));
}

namespace {

std::string catalog_key(const Capacity& c) {
  const auto t = c.table();
  std::string key(reinterpret_cast<const char*>(t.raw_values().data()), t.raw_values().size());
  key += static_cast<char>(c.carrier_size());
  key += static_cast<char>(c.chain().resolution());
  return key;
}

}  // namespace

CapacityCatalog::CapacityCatalog(std::vector<Capacity> items) : items_(std::move(items)) {
  for (std::size_t i = 0; i < items_.size(); ++i) {
    positions_.emplace(catalog_key(items_[i]), static_cast<int>(i));
  }
}

int CapacityCatalog::find(const Capacity& c) const {
  auto it = positions_.find(catalog_key(c));
  return it == positions_.end() ? -1 : it->second;
}

std::string describe(const Capacity& c, const FiniteSpace& names) {
  std::string out = "{";
  bool first = true;
  for (Subset s : canonical_subsets(c.carrier_size(), false)) {
    if (!first) out += ", ";
    first = false;
    out += names.key_of(s) + ":" + c.value(s).to_string();
  }
  return out + "}";
}

std::string describe(const Capacity& c) { return describe(c, FiniteSpace::of_size(c.carrier_size())); }

}  // namespace capalg
