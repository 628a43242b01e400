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

#include "capalg/json_io.hpp"

#include "capalg/errors.hpp"
#include "doctest.h"

namespace capalg {
namespace {

const Chain k2(2);

TEST_CASE("space") {
  const FiniteSpace sp = parse_space(R"({"elements": ["b", "a"]})");
  CHECK(sp.names() == std::vector<std::string>{"b", "a"});
  CHECK(parse_space(to_json(sp)) == sp);
  CHECK_THROWS_AS(parse_space("{\"elements\": [\"a\", \"a\"]}"), InvalidInput);
  CHECK_THROWS_AS(parse_space("{\"elements\": 3}"), ParseError);
  CHECK_THROWS_AS(parse_space("{nope"), ParseError);
}

TEST_CASE("capacity") {
  const auto doc = parse_capacity(R"({"chain_k": 2, "elements": ["a", "b"],
                                      "values": {"": "0", "a": "1/2", "b": "0", "a,b": "1"}})");
  CHECK(doc.space.size() == 2);
  CHECK(doc.capacity.value(Subset(0b01)) == k2.level(1));
  const auto back = parse_capacity(to_json(doc.capacity, doc.space));
  CHECK(back.capacity == doc.capacity);

  const auto dens = parse_capacity(R"({"chain_k": 2, "elements": ["a", "b"], "density": {"a": "1", "b": "1/2"}})");
  CHECK(as_possibility(dens.capacity).has_value());
  const auto codens = parse_capacity(R"({"chain_k": 2, "elements": ["a", "b"], "codensity": {"a": "0", "b": "1/2"}})");
  CHECK(as_necessity(codens.capacity).has_value());

  CHECK_THROWS_AS(parse_capacity(R"({"chain_k": 2, "elements": ["a", "b"], "values": {"a": "1", "b": "0", "a,b": "1/2"}})"),
                  InvalidInput);
  CHECK_THROWS_AS(parse_capacity(R"({"chain_k": 2, "elements": ["a", "b"], "values": {"a": "1", "a,b": "1"}})"),
                  ParseError);
  CHECK_THROWS_AS(parse_capacity(R"({"chain_k": 2, "elements": ["a"], "values": {"a": "1/3"}})"), ParseError);
  CHECK_THROWS_AS(parse_capacity(R"({"chain_k": 2, "elements": ["a"], "density": {"c": "1"}})"), UnknownElement);
  CHECK_THROWS_AS(parse_capacity(R"({"chain_k": 0, "elements": ["a"], "density": {"a": "1"}})"), ParseError);
}

TEST_CASE("structures round trip") {
  const ConvexStructure s = chain_model_convex(k2);
  CHECK(parse_convex_structure(to_json(s)) == s);
  CHECK(detect_structure_kind(to_json(s)) == StructureKind::kConvex);

  const QuotientSemimodule q = quotient_semimodule(s);
  CHECK(parse_semimodule(to_json(q.module)) == q.module);
  CHECK(detect_structure_kind(to_json(q.module)) == StructureKind::kSemimodule);

  const BiconvexStructure b = chain_model_biconvex(k2);
  CHECK(parse_biconvex(to_json(b)) == b);
  CHECK(detect_structure_kind(to_json(b)) == StructureKind::kBiconvex);

  const TripleStructure t = triple_from_biconvex(b);
  const TripleStructure t2 = parse_triple(to_json(t));
  CHECK(t2.p == t.p);
  CHECK(t2.bjoin == t.bjoin);
  CHECK(detect_structure_kind(to_json(t)) == StructureKind::kTriple);

  const CubeStructure cube{2, k2, {{0, 2, 2}, {0, 1, 2}}};
  CHECK(parse_cube(to_json(cube)) == cube);
  CHECK(detect_structure_kind(to_json(cube)) == StructureKind::kCube);
  CHECK_THROWS_AS(parse_cube(R"({"chain_k": 2, "A": 1, "phi": [{"0": "0", "1/2": "1"}]})"), ParseError);
  CHECK_THROWS_AS(parse_cube(R"({"chain_k": 2, "A": 1, "phi": [{"0": "1/2", "1/2": "1", "1": "1"}]})"), InvalidInput);

  const auto r = embedding_search(b, 1);
  REQUIRE(r.certificate);
  const EmbeddingCertificate c2 = parse_certificate(to_json(*r.certificate, b), b);
  CHECK(c2.coordinates == r.certificate->coordinates);
  CHECK(c2.cube == r.certificate->cube);

  CHECK_THROWS_AS(parse_convex_structure(R"({"chain_k": 1, "elements": ["a"], "ic": {"a|0|a": "a"}})"), ParseError);
  CHECK_THROWS_AS(detect_structure_kind(R"({"chain_k": 1})"), ParseError);
  CHECK(detect_structure_kind(R"({"kind": "cube"})") == StructureKind::kCube);
}

TEST_CASE("read_text_file") { CHECK_THROWS_AS(read_text_file("/nonexistent/file.json"), ParseError); }

}  // namespace
}  // namespace capalg
