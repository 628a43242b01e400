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

#ifndef CAPALG_JSON_IO_HPP
#define CAPALG_JSON_IO_HPP

#include <string>
#include <string_view>

#include "capalg/biconvex.hpp"
#include "capalg/capacity.hpp"
#include "capalg/chain.hpp"
#include "capalg/convexity.hpp"
#include "capalg/finite_space.hpp"

namespace capalg {

// JSON documents. Levels are strings "0", "1" or "p/q" on the chain given
// by "chain_k"; points are named by "elements" in declared order. A subset
// key is the comma-joined member names in declared order ("" for the empty
// set). Table keys join their arguments with '|', scalars first for the
// actions: "x|alpha|y" for ic, "x|y" for binary operations, "alpha|x" for
// actions.
//
// Every parser throws ParseError on malformed JSON or a missing or
// mistyped field, UnknownElement for an unknown point name, and
// InvalidInput when the decoded object breaks its invariants.

/// {"elements": [...]}.
FiniteSpace parse_space(std::string_view text);
std::string to_json(const FiniteSpace& space);

struct CapacityDocument {
  FiniteSpace space;
  Chain chain;
  Capacity capacity;
};

/// {"chain_k", "elements", and one of "values" (every nonempty subset key;
/// "" optional and must be 0), "density" or "codensity" (point -> level)}.
CapacityDocument parse_capacity(std::string_view text);
/// Always the "values" form.
std::string to_json(const Capacity& c, const FiniteSpace& space);

/// {"chain_k", "elements", "ic": {"x|alpha|y": "z"}} with every triple.
ConvexStructure parse_convex_structure(std::string_view text);
std::string to_json(const ConvexStructure& s);

/// {"chain_k", "elements", "add": {"x|y": "z"}, "scale": {"alpha|x": "z"},
/// "zero": "x"}.
Semimodule parse_semimodule(std::string_view text);
std::string to_json(const Semimodule& m);

/// {"chain_k", "elements", "bjoin", "bmeet": {"x|y": "z"},
/// "smeet", "sjoin": {"alpha|x": "z"}}.
BiconvexStructure parse_biconvex(std::string_view text);
std::string to_json(const BiconvexStructure& b);

/// {"chain_k", "elements", "bjoin", "bmeet", "p", "m": {"alpha": "x"}}.
TripleStructure parse_triple(std::string_view text);
std::string to_json(const TripleStructure& t);

/// {"chain_k", "A": n, "phi": [{"alpha": "beta", ...}, ...]}.
CubeStructure parse_cube(std::string_view text);
std::string to_json(const CubeStructure& cube);

/// {"cube": <cube>, "assignment": {"x": ["l1", ...]}}.
EmbeddingCertificate parse_certificate(std::string_view text, const BiconvexStructure& b);
std::string to_json(const EmbeddingCertificate& cert, const BiconvexStructure& b);

enum class StructureKind { kConvex, kSemimodule, kBiconvex, kTriple, kCube };

/// From an explicit "kind" field ("convex", "semimodule", "biconvex",
/// "triple", "cube"), otherwise from the table fields present.
StructureKind detect_structure_kind(std::string_view text);

/// Whole file. Throws ParseError when it cannot be read.
std::string read_text_file(const std::string& path);

}  // namespace capalg

#endif  // CAPALG_JSON_IO_HPP
