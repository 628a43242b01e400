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

#include "capalg/errors.hpp"
#include "doctest.h"

namespace capalg {
namespace {

const Chain k2(2);

bool has_code(const Diagnostics& d, const std::string& code) {
  return std::any_of(d.begin(), d.end(), [&](const Diagnostic& x) { return x.code == code; });
}

std::vector<BiconvexStructure> small_structures() {
  std::vector<BiconvexStructure> out;
  for (int n = 1; n <= 3; ++n) {
    auto part = enumerate_biconvex_structures(n, k2);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

TEST_CASE("check_biconvex") {
  const BiconvexStructure chain = chain_model_biconvex(k2);
  CHECK(check_biconvex(chain).empty());
  CHECK(chain.bottom() == 0);
  CHECK(chain.top() == 2);
  const BiconvexStructure swapped = BiconvexStructure::from_functions(
      chain.space(), k2, [](int x, int y) { return std::max(x, y); }, [](int x, int y) { return std::min(x, y); },
      [](int a, int x) { return std::max(a, x); }, [](int a, int x) { return std::min(a, x); });
  CHECK(has_code(check_biconvex(swapped), "smeet-axiom-6"));
  CHECK(is_distributive_lattice(chain));
}

TEST_CASE("biconvex structure counts") {
  CHECK(enumerate_lattices(1).size() == 1);
  CHECK(enumerate_lattices(2).size() == 2);
  CHECK(enumerate_lattices(3).size() == 6);
  CHECK(enumerate_lattices(4).size() == 36);
  CHECK(enumerate_biconvex_structures(1, k2).size() == 1);
  CHECK(enumerate_biconvex_structures(2, Chain(1)).size() == 2);
  CHECK(enumerate_biconvex_structures(2, k2).size() == 4);
  CHECK(enumerate_biconvex_structures(3, Chain(1)).size() == 6);
  CHECK(enumerate_biconvex_structures(3, k2).size() == 18);
  CHECK_THROWS_AS(enumerate_biconvex_structures(4, Chain(3), 1000), BudgetExceeded);
}

TEST_CASE("triples") {
  const TripleStructure t = triple_from_biconvex(chain_model_biconvex(k2));
  CHECK(t.p == std::vector<int>{0, 1, 2});
  CHECK(t.m == std::vector<int>{0, 1, 2});
  for (const auto& b : small_structures()) {
    const TripleStructure tb = triple_from_biconvex(b);
    CHECK(check_triple(tb).empty());
    CHECK(biconvex_from_triple(tb) == b);
    CHECK(tb.p == tb.m);
  }
  TripleStructure bad = t;
  bad.p = {0, 2, 1};
  CHECK_FALSE(check_triple(bad).empty());
  CHECK_THROWS_AS(biconvex_from_triple(bad), InvalidInput);
}

TEST_CASE("closed forms") {
  const BiconvexStructure chain = chain_model_biconvex(Chain(1));
  const PossibilityCapacity c(Chain(1), std::vector<std::uint8_t>{1, 0});
  CHECK(structure_map_possibility(chain, c) == 0);
  // Two-point chain on k=2 carrying levels 0 and 1: density (1, 1/2) -> 1/2.
  const BiconvexStructure two = cube_structure({1, k2, {{0, 1, 2}}});
  const auto forms = possibility_closed_forms(chain_model_biconvex(k2), PossibilityCapacity(k2, std::vector<std::uint8_t>{2, 0, 1}));
  CHECK(forms.value == 1);
  CHECK(forms.agree());
  for (int x = 0; x < 3; ++x) {
    CHECK(structure_map_possibility(two, *as_possibility(unit_dirac(3, k2, x))) == x);
    CHECK(structure_map_necessity(two, *as_necessity(unit_dirac(3, k2, x))) == x);
  }
  for (const auto& b : small_structures()) {
    for (const auto& c : enumerate_capacities(b.size(), k2, CapacityClass::kUnion)) {
      CHECK(possibility_closed_forms(b, *as_possibility(c)).agree());
    }
    for (const auto& c : enumerate_capacities(b.size(), k2, CapacityClass::kIntersection)) {
      CHECK(necessity_closed_forms(b, *as_necessity(c)).agree());
    }
  }
  CHECK_THROWS_AS(structure_map_possibility(chain, PossibilityCapacity(k2, std::vector<std::uint8_t>{2, 0})),
                  ChainMismatch);
}

TEST_CASE("full structure map") {
  for (const auto& b : small_structures()) {
    const auto atlas = preimage_atlas(b.size(), k2);
    const FullStructureMap up = FullStructureMap::from_biconvex(b, Diagram::kUnionOverIntersection);
    const FullStructureMap down = FullStructureMap::from_biconvex(b, Diagram::kIntersectionOverUnion);
    CHECK(up.table() == down.table());
    for (const auto& c : up.domain().items()) {
      for (Diagram d : {Diagram::kUnionOverIntersection, Diagram::kIntersectionOverUnion}) {
        const auto pre = atlas->preimages(c, d);
        REQUIRE(!pre.empty());
        for (const auto& p : pre) CHECK(structure_map_through(b, p, d) == up(c));
      }
      if (auto u = as_possibility(c)) CHECK(up(c) == structure_map_possibility(b, *u));
      if (auto i = as_necessity(c)) CHECK(up(c) == structure_map_necessity(b, *i));
    }
    CHECK(check_full_algebra_laws(up, {5000, 200, 3}).empty());
    const LatticeTables lat = lattice_from_algebra(up);
    CHECK(lat.bjoin == b.bjoin_table());
    CHECK(lat.bmeet == b.bmeet_table());
    CHECK(biconvex_from_algebra(up) == b);
  }
}

TEST_CASE("sugeno cross-check") {
  const BiconvexStructure chain = chain_model_biconvex(k2);
  SetFunction sf(3, k2);
  sf.set_raw(Subset(0b001), 1);
  sf.set_raw(Subset(0b100), 1);
  sf.set_raw(Subset(0b101), 1);
  sf.set_raw(Subset(0b011), 1);
  sf.set_raw(Subset(0b110), 1);
  sf.set_raw(Subset(0b010), 0);
  sf.set_raw(Subset(0b111), 2);
  const Capacity c = Capacity::from_table(sf);
  const auto full = structure_map_full(chain, c);
  REQUIRE(full.has_value());
  CHECK(*full == sugeno_form(chain, c));
  for (int n = 1; n <= 2; ++n) {
    for (const auto& b : enumerate_biconvex_structures(n, k2)) {
      const FullStructureMap xi = FullStructureMap::from_biconvex(b);
      for (const auto& d : xi.domain().items()) CHECK(xi(d) == sugeno_form(b, d));
    }
  }
}

TEST_CASE("biaffine maps") {
  const BiconvexStructure chain = chain_model_biconvex(k2);
  const PointMap id = PointMap::identity(3);
  const PointMap lift(3, 3, {1, 1, 2});
  CHECK(is_biaffine(id, chain, chain));
  CHECK(is_biaffine(lift, chain, chain));
  CHECK_FALSE(preserves_smeet(lift, chain, chain));
  CHECK(lift(chain.smeet(0, 2)) == 1);
  CHECK(chain.smeet(0, lift(2)) == 0);
  CHECK(preserves_sjoin(lift, chain, chain));

  const FullStructureMap xi = FullStructureMap::from_biconvex(chain);
  const MorphismCheck m = morphism_equivalence_full(lift, xi, chain, xi, chain);
  CHECK(m.is_morphism);
  CHECK(m.is_affine);
  const MorphismCheck flip = morphism_equivalence_full(PointMap(3, 3, {2, 1, 0}), xi, chain, xi, chain);
  CHECK_FALSE(flip.is_morphism);
  CHECK_FALSE(flip.is_affine);
  CHECK_FALSE(flip.witness.empty());

  const auto all = small_structures();
  for (const auto& b : all) {
    for (const auto& bp : all) {
      for (const auto& f : all_point_maps(b.size(), bp.size())) {
        if (!is_biaffine(f, b, bp)) continue;
        CHECK(preserves_smeet(f, b, bp) == (f(b.bottom()) == bp.bottom()));
        CHECK(preserves_sjoin(f, b, bp) == (f(b.top()) == bp.top()));
      }
    }
  }
}

TEST_CASE("cubes") {
  const BiconvexStructure one = cube_structure({1, k2, {{0, 1, 2}}});
  CHECK(one == chain_model_biconvex(k2));
  const BiconvexStructure lifted = cube_structure({1, k2, {{0, 2, 2}}});
  for (int x = 0; x < 3; ++x) CHECK(lifted.smeet(1, x) == x);
  CHECK(check_biconvex(lifted).empty());
  for (const auto& p1 : monotone_level_maps(k2)) {
    for (const auto& p2 : monotone_level_maps(k2)) {
      const BiconvexStructure b = cube_structure({2, k2, {p1, p2}});
      CHECK(b.size() == 9);
      CHECK(b.space().name(5) == "1/2;1");
      CHECK(check_biconvex(b).empty());
      CHECK(is_distributive_lattice(b));
    }
  }
  CHECK(monotone_level_maps(k2).size() == 3);
  CHECK_THROWS_AS(cube_structure({1, k2, {{0, 2, 1}}}), InvalidInput);
  CHECK_THROWS_AS(cube_structure({1, k2, {{1, 2, 2}}}), InvalidInput);
  CHECK_THROWS_AS(cube_structure({2, k2, {{0, 1, 2}}}), InvalidInput);
}

TEST_CASE("embedding search") {
  const auto chain = embedding_search(chain_model_biconvex(k2), 2, EmbeddingMode::kAllOperations);
  REQUIRE(chain.certificate);
  CHECK(chain.certificate->cube.a_size == 1);
  CHECK(chain.certificate->cube.phi[0] == std::vector<int>{0, 1, 2});
  CHECK(chain.certificate->coordinates[0] == std::vector<int>{0, 1, 2});

  for (const auto& p1 : monotone_level_maps(k2)) {
    for (const auto& p2 : monotone_level_maps(k2)) {
      const CubeStructure cube{2, k2, {p1, p2}};
      const BiconvexStructure b = cube_structure(cube);
      EmbeddingCertificate self{cube, {{}, {}}};
      for (int x = 0; x < 9; ++x) {
        self.coordinates[0].push_back(x / 3);
        self.coordinates[1].push_back(x % 3);
      }
      CHECK(verify_certificate(b, self, EmbeddingMode::kAllOperations).empty());
      const auto r = embedding_search(b, 2, EmbeddingMode::kAllOperations);
      REQUIRE(r.certificate);
      CHECK(r.certificate->cube.a_size == 2);
      CHECK(verify_certificate(b, *r.certificate, EmbeddingMode::kAllOperations).empty());
    }
  }

  const BiconvexStructure diamond = diamond_structure(k2, {0, 0, 1}, {0, 1, 1});
  CHECK(check_biconvex(diamond).empty());
  const auto r = embedding_search(diamond, 3, EmbeddingMode::kAllOperations);
  REQUIRE(r.certificate);
  CHECK(r.certificate->cube.a_size == 2);
  CHECK(verify_certificate(diamond, *r.certificate, EmbeddingMode::kAllOperations).empty());
  const auto ra = embedding_search(diamond, 3, EmbeddingMode::kBiaffine);
  REQUIRE(ra.certificate);
  CHECK(verify_certificate(diamond, *ra.certificate, EmbeddingMode::kBiaffine).empty());

  EmbeddingCertificate broken = *r.certificate;
  broken.coordinates[1] = broken.coordinates[0];
  CHECK(has_code(verify_certificate(diamond, broken, EmbeddingMode::kAllOperations), "injective"));
}

}  // namespace
}  // namespace capalg
