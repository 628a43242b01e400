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
#include <set>

#include "capalg/errors.hpp"
#include "capalg/random.hpp"
#include "doctest.h"

namespace capalg {
namespace {

const Chain k2(2);

bool has_code(const Diagnostics& d, const std::string& code) {
  return std::any_of(d.begin(), d.end(), [&](const Diagnostic& x) { return x.code == code; });
}

TEST_CASE("check_ic_axioms") {
  const ConvexStructure chain = chain_model_convex(k2);
  CHECK(check_ic_axioms(chain).empty());
  const ConvexStructure proj =
      ConvexStructure::from_function(FiniteSpace::of_size(2), k2, [](int, int, int y) { return y; });
  CHECK(has_code(check_ic_axioms(proj), "axiom-5"));
  for (int x = 0; x < 3; ++x)
    for (int y = 0; y < 3; ++y) CHECK(chain.ic(x, 2, y) == chain.ic(y, 2, x));
  CHECK_THROWS_AS(ConvexStructure(FiniteSpace::of_size(2), k2, {0, 1}), InvalidInput);
  CHECK(vacuous_conditions().size() == 3);
}

TEST_CASE("convex structure counts") {
  CHECK(enumerate_convex_structures(1, k2).size() == 1);
  CHECK(enumerate_convex_structures(2, Chain(1)).size() == 2);
  CHECK(enumerate_convex_structures(2, k2).size() == 4);
  CHECK(enumerate_convex_structures(3, Chain(1)).size() == 9);
  const auto all = enumerate_convex_structures(3, k2);
  CHECK(all.size() == 36);
  for (const auto& s : all) {
    CHECK(check_ic_axioms(s).empty());
    CHECK(check_distributive_law(s).empty());
  }
  CHECK_THROWS_AS(enumerate_convex_structures(3, Chain(3), 1000), BudgetExceeded);
}

TEST_CASE("nary_combination") {
  const ConvexStructure s = chain_model_convex(k2);
  const std::vector<int> one{1};
  CHECK(nary_combination(s, SimplexPoint::join_simplex(k2, {2}), one) == 1);
  CHECK_THROWS_AS(SimplexPoint::join_simplex(k2, {1, 0}), InvalidInput);
  CHECK_THROWS_AS(SimplexPoint::meet_simplex(k2, {1, 2}), InvalidInput);
  CHECK_THROWS_AS(nary_combination(s, SimplexPoint::join_simplex(k2, {2, 1}), one), InvalidInput);

  Rng rng(5);
  for (const auto& st : enumerate_convex_structures(3, k2)) {
    for (int trial = 0; trial < 40; ++trial) {
      const int len = static_cast<int>(rng.between(1, 4));
      std::vector<int> coef(len), pts(len);
      for (int i = 0; i < len; ++i) {
        coef[i] = rng.between(0, 2);
        pts[i] = rng.between(0, 2);
      }
      coef[rng.below(len)] = 2;
      const int v = nary_combination(st, SimplexPoint::join_simplex(k2, coef), pts);
      // Permutation invariance.
      std::vector<int> order(len);
      for (int i = 0; i < len; ++i) order[i] = i;
      std::reverse(order.begin(), order.end());
      std::rotate(order.begin(), order.begin() + rng.below(len), order.end());
      std::vector<int> c2, p2;
      for (int i : order) {
        c2.push_back(coef[i]);
        p2.push_back(pts[i]);
      }
      CHECK(nary_combination(st, SimplexPoint::join_simplex(k2, c2), p2) == v);
      // Zero summands drop; a repeated point keeps only its largest coefficient.
      std::vector<int> c3, p3;
      for (int i = 0; i < len; ++i) {
        if (coef[i] == 0) continue;
        bool absorbed = false;
        for (int j = 0; j < len; ++j) {
          if (j != i && pts[j] == pts[i] && (coef[j] > coef[i] || (coef[j] == coef[i] && j < i))) absorbed = true;
        }
        if (absorbed) continue;
        c3.push_back(coef[i]);
        p3.push_back(pts[i]);
      }
      CHECK(nary_combination(st, SimplexPoint::join_simplex(k2, c3), p3) == v);
    }
  }
}

TEST_CASE("big associative law") {
  Rng rng(9);
  for (const auto& st : enumerate_convex_structures(3, k2)) {
    for (int trial = 0; trial < 30; ++trial) {
      const int outer = static_cast<int>(rng.between(1, 3));
      std::vector<int> alpha(outer), inner_values;
      std::vector<int> flat_coef, flat_pts;
      for (int i = 0; i < outer; ++i) alpha[i] = rng.between(0, 2);
      alpha[rng.below(outer)] = 2;
      for (int i = 0; i < outer; ++i) {
        const int width = static_cast<int>(rng.between(1, 3));
        std::vector<int> beta(width), pts(width);
        for (int j = 0; j < width; ++j) {
          beta[j] = rng.between(0, 2);
          pts[j] = rng.between(0, 2);
        }
        beta[rng.below(width)] = 2;
        inner_values.push_back(nary_combination(st, SimplexPoint::join_simplex(k2, beta), pts));
        for (int j = 0; j < width; ++j) {
          flat_coef.push_back(std::min(alpha[i], beta[j]));
          flat_pts.push_back(pts[j]);
        }
      }
      CHECK(nary_combination(st, SimplexPoint::join_simplex(k2, alpha), inner_values) ==
            nary_combination(st, SimplexPoint::join_simplex(k2, flat_coef), flat_pts));
    }
  }
}

TEST_CASE("structure_map_from_ic") {
  const ConvexStructure s = chain_model_convex(k2);
  for (int x = 0; x < 3; ++x) CHECK(structure_map_from_ic(s, *as_possibility(unit_dirac(3, k2, x))) == x);
  const PossibilityCapacity c(k2, std::vector<std::uint8_t>{2, 0, 1});
  CHECK(structure_map_from_ic(s, c) == 1);
  CHECK_THROWS_AS(structure_map_from_ic(s, c, 1), InvalidInput);
  CHECK_THROWS_AS(structure_map_from_ic(s, PossibilityCapacity(k2, std::vector<std::uint8_t>{2, 0})),
                  CarrierMismatch);
  for (const auto& st : enumerate_convex_structures(3, k2)) CHECK(check_base_independence(st).empty());
}

TEST_CASE("round trips") {
  const ConvexStructure s = chain_model_convex(k2);
  const auto xi = StructureMapUnion::from_convex(s);
  CHECK(check_algebra_laws(xi).empty());
  CHECK(ic_from_structure_map(xi) == s);

  const auto constant = StructureMapUnion(s.space(), k2, std::vector<int>(xi.table().size(), 0));
  const auto d = check_algebra_laws(constant);
  CHECK(has_code(d, "unit-law"));
  CHECK_THROWS_AS(ic_from_structure_map(constant), InvalidInput);

  for (int n = 1; n <= 3; ++n) {
    for (const auto& st : enumerate_convex_structures(n, k2)) {
      const auto m = StructureMapUnion::from_convex(st);
      CHECK(check_algebra_laws(m).empty());
      CHECK(ic_from_structure_map(m) == st);
    }
  }
}

TEST_CASE("every algebra table on two points comes from a convex structure") {
  for (int k = 1; k <= 2; ++k) {
    const Chain chain(k);
    const FiniteSpace x = FiniteSpace::of_size(2);
    const int u = static_cast<int>(union_catalog(2, chain)->size());
    int algebras = 0;
    for (int bits = 0; bits < (1 << u); ++bits) {
      std::vector<int> table(u);
      for (int i = 0; i < u; ++i) table[i] = (bits >> (u - 1 - i)) & 1;
      const StructureMapUnion xi(x, chain, table);
      if (!check_algebra_laws(xi).empty()) continue;
      ++algebras;
      CHECK(StructureMapUnion::from_convex(ic_from_structure_map(xi)) == xi);
    }
    CHECK(algebras == static_cast<int>(enumerate_convex_structures(2, chain).size()));
  }
}

TEST_CASE("affine maps and morphisms") {
  const ConvexStructure s = chain_model_convex(k2);
  const auto xi = StructureMapUnion::from_convex(s);
  const PointMap id = PointMap::identity(3);
  CHECK(is_affine(id, s, s));
  const PointMap up(3, 3, {1, 1, 2});
  CHECK(is_affine(up, s, s));
  CHECK(is_affine(PointMap::constant(3, 3, 1), s, s));
  const PointMap flip(3, 3, {2, 1, 0});
  CHECK_FALSE(is_affine(flip, s, s));

  const auto m1 = morphism_equivalence_check(id, xi, xi);
  CHECK((m1.is_morphism && m1.is_affine));
  const auto m2 = morphism_equivalence_check(up, xi, xi);
  CHECK((m2.is_morphism && m2.is_affine));
  const auto m3 = morphism_equivalence_check(flip, xi, xi);
  CHECK((!m3.is_morphism && !m3.is_affine));
  CHECK_FALSE(m3.witness.empty());
}

TEST_CASE("dual structure map") {
  const DualConvexStructure d = chain_model_dual_convex(k2);
  CHECK(check_ci_axioms(d).empty());
  CHECK(check_base_independence(d).empty());
  for (int x = 0; x < 3; ++x) CHECK(dual_structure_map(d, *as_necessity(unit_dirac(3, k2, x))) == x);
  const NecessityCapacity e(k2, std::vector<std::uint8_t>{1, 2, 0});
  CHECK(dual_structure_map(d, e) == 1);

  // On the self-dual carrier, conjugating by the complement exchanges the
  // two structure maps.
  const ConvexStructure s = chain_model_convex(k2);
  const PointMap sigma(3, 3, {2, 1, 0});
  for (const auto& c : union_catalog(3, k2)->items()) {
    const int lhs = dual_structure_map(d, *as_necessity(kappa_dual(pushforward(sigma, c))));
    CHECK(lhs == sigma(structure_map_from_ic(s, *as_possibility(c))));
  }
}

TEST_CASE("semimodule axioms") {
  const FiniteSpace x({"0", "1/2", "1"});
  std::vector<std::uint8_t> add, scale;
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b) add.push_back(static_cast<std::uint8_t>(std::max(a, b)));
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b) scale.push_back(static_cast<std::uint8_t>(std::min(a, b)));
  CHECK(check_semimodule_axioms(Semimodule(x, k2, add, scale, 0)).empty());

  const FiniteSpace two({"0", "1"});
  const Semimodule broken(two, k2, {0, 1, 1, 1}, {0, 1, 0, 1, 0, 1}, 0);
  const auto d = check_semimodule_axioms(broken);
  CHECK(has_code(d, "axiom-7"));
}

TEST_CASE("quotient semimodule") {
  const ConvexStructure s = chain_model_convex(k2);
  const auto q = quotient_semimodule(s);
  CHECK(q.module.size() == 3);
  CHECK(q.consistency.empty());
  CHECK(check_semimodule_axioms(q.module).empty());
  CHECK(check_quotient_embedding(s, q).empty());
  const int bottom = q.embedding(0);
  const int top = q.embedding(2);
  CHECK(bottom == q.module.zero());
  CHECK(q.module.scale(1, top) != bottom);
  CHECK(q.module.scale(1, top) != top);
  for (int a = 0; a < 3; ++a) CHECK(q.module.add(bottom, q.module.scale(a, top)) == q.module.scale(a, top));
  for (int x = 0; x < 3; ++x) CHECK(q.class_of[x * 3] == q.module.zero());

  for (int n = 1; n <= 3; ++n) {
    for (const auto& st : enumerate_convex_structures(n, k2)) {
      const auto qs = quotient_semimodule(st);
      CHECK(qs.consistency.empty());
      CHECK(check_semimodule_axioms(qs.module).empty());
      CHECK(check_quotient_embedding(st, qs).empty());
      CHECK(qs.embedding.injective());
    }
  }
  const ConvexStructure proj =
      ConvexStructure::from_function(FiniteSpace::of_size(2), k2, [](int, int, int y) { return y; });
  CHECK_THROWS_AS(quotient_semimodule(proj), InvalidInput);
}

}  // namespace
}  // namespace capalg
