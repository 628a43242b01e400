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

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace capalg {
namespace {

using nlohmann::ordered_json;
using Json = nlohmann::json;

Json parse_json(std::string_view text) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const Json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
}

const Json& field(const Json& doc, const char* name) {
  if (!doc.is_object()) throw ParseError("expected a JSON object");
  auto it = doc.find(name);
  if (it == doc.end()) throw ParseError(std::string("missing field \"") + name + "\"");
  return *it;
}

const Json& object_field(const Json& doc, const char* name) {
  const Json& f = field(doc, name);
  if (!f.is_object()) throw ParseError(std::string("field \"") + name + "\" must be an object");
  return f;
}

std::string text_of(const Json& v, const std::string& where) {
  if (!v.is_string()) throw ParseError(where + " must be a string");
  return v.get<std::string>();
}

Chain chain_of(const Json& doc) {
  const Json& k = field(doc, "chain_k");
  if (!k.is_number_integer()) throw ParseError("\"chain_k\" must be an integer");
  try {
    return Chain(k.get<int>());
  } catch (const InvalidResolution& e) {
    throw ParseError(e.what());
  }
}

FiniteSpace space_of(const Json& doc) {
  const Json& e = field(doc, "elements");
  if (!e.is_array()) throw ParseError("\"elements\" must be an array");
  std::vector<std::string> names;
  for (const auto& v : e) names.push_back(text_of(v, "an element name"));
  return FiniteSpace(std::move(names));
}

int level_of(const Chain& chain, const Json& v, const std::string& where) {
  return chain.parse(text_of(v, where)).index();
}

// Splits "a|b|c" into exactly `parts` pieces.
std::vector<std::string> split_key(const std::string& key, std::size_t parts) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const auto bar = key.find('|', start);
    out.push_back(key.substr(start, bar - start));
    if (bar == std::string::npos) break;
    start = bar + 1;
  }
  if (out.size() != parts) throw ParseError("table key \"" + key + "\" needs " + std::to_string(parts) + " parts");
  return out;
}

// Reads a table keyed by '|'-joined arguments; each argument is a point
// (false) or a level (true). Every combination must be present once.
std::vector<std::uint8_t> read_table(const Json& doc, const char* name, const FiniteSpace& sp, const Chain& ch,
                                     std::vector<bool> level_args) {
  const Json& t = object_field(doc, name);
  std::size_t total = 1;
  std::vector<int> radix;
  for (bool lv : level_args) {
    radix.push_back(lv ? ch.size() : sp.size());
    total *= static_cast<std::size_t>(radix.back());
  }
  std::vector<int> out(total, -1);
  for (const auto& [key, value] : t.items()) {
    const auto parts = split_key(key, level_args.size());
    std::size_t pos = 0;
    for (std::size_t i = 0; i < parts.size(); ++i) {
      const int v = level_args[i] ? ch.parse(parts[i]).index() : sp.index_of(parts[i]);
      pos = pos * static_cast<std::size_t>(radix[i]) + static_cast<std::size_t>(v);
    }
    if (out[pos] >= 0) throw ParseError(std::string("duplicate entry \"") + key + "\" in \"" + name + "\"");
    out[pos] = sp.index_of(text_of(value, std::string("value of \"") + key + "\""));
  }
  for (int v : out) {
    if (v < 0) throw ParseError(std::string("table \"") + name + "\" is incomplete");
  }
  return std::vector<std::uint8_t>(out.begin(), out.end());
}

std::vector<int> read_level_map(const Json& doc, const char* name, const FiniteSpace& sp, const Chain& ch) {
  const auto raw = read_table(doc, name, sp, ch, {true});
  return std::vector<int>(raw.begin(), raw.end());
}

ordered_json header(const FiniteSpace& sp, const Chain& ch) {
  ordered_json j;
  j["chain_k"] = ch.resolution();
  j["elements"] = sp.names();
  return j;
}

std::string lv(const Chain& ch, int a) { return ch.level(a).to_string(); }

ordered_json binary_table(const FiniteSpace& sp, const std::vector<std::uint8_t>& t) {
  ordered_json out = ordered_json::object();
  const int n = sp.size();
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) out[sp.name(x) + "|" + sp.name(y)] = sp.name(t[x * n + y]);
  return out;
}

ordered_json action_table(const FiniteSpace& sp, const Chain& ch, const std::vector<std::uint8_t>& t) {
  ordered_json out = ordered_json::object();
  const int n = sp.size();
  for (int a = 0; a < ch.size(); ++a)
    for (int x = 0; x < n; ++x) out[lv(ch, a) + "|" + sp.name(x)] = sp.name(t[a * n + x]);
  return out;
}

std::string dump(const ordered_json& j) { return j.dump(2) + "\n"; }

// Converts library type errors raised while decoding into ParseError.
template <class Fn>
auto decode(Fn&& fn) {
  try {
    return fn();
  } catch (const Json::exception& e) {
    throw ParseError(std::string("malformed document: ") + e.what());
  }
}

}  // namespace

FiniteSpace parse_space(std::string_view text) {
  return decode([&] { return space_of(parse_json(text)); });
}

std::string to_json(const FiniteSpace& space) {
  ordered_json j;
  j["elements"] = space.names();
  return dump(j);
}

CapacityDocument parse_capacity(std::string_view text) {
  return decode([&]() -> CapacityDocument {
    const Json doc = parse_json(text);
    const Chain ch = chain_of(doc);
    FiniteSpace sp = space_of(doc);
    const int n = sp.size();
    auto point_levels = [&](const char* name) {
      const Json& t = object_field(doc, name);
      std::vector<int> out(static_cast<std::size_t>(n), -1);
      for (const auto& [key, value] : t.items()) {
        const int x = sp.index_of(key);
        if (out[static_cast<std::size_t>(x)] >= 0) throw ParseError("duplicate point \"" + key + "\"");
        out[static_cast<std::size_t>(x)] = level_of(ch, value, "level of \"" + key + "\"");
      }
      for (int x = 0; x < n; ++x) {
        if (out[static_cast<std::size_t>(x)] < 0) throw ParseError("no level for point \"" + sp.name(x) + "\"");
      }
      return std::vector<std::uint8_t>(out.begin(), out.end());
    };
    const bool has_values = doc.contains("values");
    const bool has_density = doc.contains("density");
    const bool has_codensity = doc.contains("codensity");
    if (has_values + has_density + has_codensity != 1) {
      throw ParseError("a capacity needs exactly one of \"values\", \"density\", \"codensity\"");
    }
    if (has_density) {
      Capacity c = PossibilityCapacity(ch, point_levels("density"));
      return {std::move(sp), ch, c.materialized()};
    }
    if (has_codensity) {
      Capacity c = NecessityCapacity(ch, point_levels("codensity"));
      return {std::move(sp), ch, c.materialized()};
    }
    if (n > kMaxTableCarrier) throw BudgetExceeded("tabulated capacities need at most 20 points");
    const Json& t = object_field(doc, "values");
    SetFunction sf(n, ch);
    std::vector<bool> seen(std::size_t{1} << n, false);
    for (const auto& [key, value] : t.items()) {
      const Subset s = sp.parse_key(key);
      if (seen[s.bits()]) throw ParseError("duplicate subset \"" + key + "\"");
      seen[s.bits()] = true;
      sf.set_raw(s, level_of(ch, value, "value of \"" + key + "\""));
    }
    for (std::uint64_t bits = 1; bits < seen.size(); ++bits) {
      if (!seen[bits]) throw ParseError("no value for subset \"" + sp.key_of(Subset(bits)) + "\"");
    }
    const Diagnostics d = validate(sf, true, sp);
    if (!d.empty()) throw InvalidInput("not a capacity (" + d.front().code + ": " + d.front().message + ")");
    return {std::move(sp), ch, Capacity::from_table(std::move(sf))};
  });
}

std::string to_json(const Capacity& c, const FiniteSpace& space) {
  if (c.carrier_size() != space.size()) throw CarrierMismatch("capacity and space sizes differ");
  ordered_json j = header(space, c.chain());
  ordered_json values = ordered_json::object();
  for (const Subset s : canonical_subsets(space.size(), false)) values[space.key_of(s)] = c.value(s).to_string();
  j["values"] = std::move(values);
  return dump(j);
}

ConvexStructure parse_convex_structure(std::string_view text) {
  return decode([&] {
    const Json doc = parse_json(text);
    const Chain ch = chain_of(doc);
    FiniteSpace sp = space_of(doc);
    auto table = read_table(doc, "ic", sp, ch, {false, true, false});
    return ConvexStructure(std::move(sp), ch, std::move(table));
  });
}

std::string to_json(const ConvexStructure& s) {
  const auto& sp = s.space();
  const auto& ch = s.chain();
  ordered_json j = header(sp, ch);
  ordered_json ic = ordered_json::object();
  for (int x = 0; x < s.size(); ++x)
    for (int a = 0; a < ch.size(); ++a)
      for (int y = 0; y < s.size(); ++y) ic[sp.name(x) + "|" + lv(ch, a) + "|" + sp.name(y)] = sp.name(s.ic(x, a, y));
  j["ic"] = std::move(ic);
  return dump(j);
}

Semimodule parse_semimodule(std::string_view text) {
  return decode([&] {
    const Json doc = parse_json(text);
    const Chain ch = chain_of(doc);
    FiniteSpace sp = space_of(doc);
    auto add = read_table(doc, "add", sp, ch, {false, false});
    auto scale = read_table(doc, "scale", sp, ch, {true, false});
    const int zero = sp.index_of(text_of(field(doc, "zero"), "\"zero\""));
    return Semimodule(std::move(sp), ch, std::move(add), std::move(scale), zero);
  });
}

std::string to_json(const Semimodule& m) {
  ordered_json j = header(m.space(), m.chain());
  j["add"] = binary_table(m.space(), m.add_table());
  j["scale"] = action_table(m.space(), m.chain(), m.scale_table());
  j["zero"] = m.space().name(m.zero());
  return dump(j);
}

BiconvexStructure parse_biconvex(std::string_view text) {
  return decode([&] {
    const Json doc = parse_json(text);
    const Chain ch = chain_of(doc);
    FiniteSpace sp = space_of(doc);
    auto bj = read_table(doc, "bjoin", sp, ch, {false, false});
    auto bm = read_table(doc, "bmeet", sp, ch, {false, false});
    auto sm = read_table(doc, "smeet", sp, ch, {true, false});
    auto sj = read_table(doc, "sjoin", sp, ch, {true, false});
    return BiconvexStructure(std::move(sp), ch, std::move(bj), std::move(bm), std::move(sm), std::move(sj));
  });
}

std::string to_json(const BiconvexStructure& b) {
  ordered_json j = header(b.space(), b.chain());
  j["bjoin"] = binary_table(b.space(), b.bjoin_table());
  j["bmeet"] = binary_table(b.space(), b.bmeet_table());
  j["smeet"] = action_table(b.space(), b.chain(), b.smeet_table());
  j["sjoin"] = action_table(b.space(), b.chain(), b.sjoin_table());
  return dump(j);
}

TripleStructure parse_triple(std::string_view text) {
  return decode([&] {
    const Json doc = parse_json(text);
    const Chain ch = chain_of(doc);
    FiniteSpace sp = space_of(doc);
    TripleStructure t{sp, ch, read_table(doc, "bjoin", sp, ch, {false, false}),
                      read_table(doc, "bmeet", sp, ch, {false, false}), read_level_map(doc, "p", sp, ch),
                      read_level_map(doc, "m", sp, ch)};
    return t;
  });
}

std::string to_json(const TripleStructure& t) {
  ordered_json j = header(t.space, t.chain);
  j["bjoin"] = binary_table(t.space, t.bjoin);
  j["bmeet"] = binary_table(t.space, t.bmeet);
  for (const char* name : {"p", "m"}) {
    const auto& v = std::string(name) == "p" ? t.p : t.m;
    ordered_json map = ordered_json::object();
    for (int a = 0; a < t.chain.size(); ++a) map[lv(t.chain, a)] = t.space.name(v[static_cast<std::size_t>(a)]);
    j[name] = std::move(map);
  }
  return dump(j);
}

namespace {

CubeStructure cube_of(const Json& doc) {
  CubeStructure cube;
  cube.chain = chain_of(doc);
  const Json& a = field(doc, "A");
  if (!a.is_number_integer()) throw ParseError("\"A\" must be an integer");
  cube.a_size = a.get<int>();
  const Json& phis = field(doc, "phi");
  if (!phis.is_array()) throw ParseError("\"phi\" must be an array");
  for (const auto& phi : phis) {
    if (!phi.is_object()) throw ParseError("each level map must be an object");
    std::vector<int> v(static_cast<std::size_t>(cube.chain.size()), -1);
    for (const auto& [key, value] : phi.items()) {
      const int from = cube.chain.parse(key).index();
      if (v[static_cast<std::size_t>(from)] >= 0) throw ParseError("duplicate level \"" + key + "\" in a level map");
      v[static_cast<std::size_t>(from)] = level_of(cube.chain, value, "level map value");
    }
    for (int x : v) {
      if (x < 0) throw ParseError("level map does not cover the chain");
    }
    cube.phi.push_back(std::move(v));
  }
  validate_cube(cube);
  return cube;
}

ordered_json cube_json(const CubeStructure& cube) {
  ordered_json j;
  j["chain_k"] = cube.chain.resolution();
  j["A"] = cube.a_size;
  ordered_json phis = ordered_json::array();
  for (const auto& phi : cube.phi) {
    ordered_json map = ordered_json::object();
    for (int a = 0; a < cube.chain.size(); ++a) map[lv(cube.chain, a)] = lv(cube.chain, phi[static_cast<std::size_t>(a)]);
    phis.push_back(std::move(map));
  }
  j["phi"] = std::move(phis);
  return j;
}

}  // namespace

CubeStructure parse_cube(std::string_view text) {
  return decode([&] { return cube_of(parse_json(text)); });
}

std::string to_json(const CubeStructure& cube) { return dump(cube_json(cube)); }

EmbeddingCertificate parse_certificate(std::string_view text, const BiconvexStructure& b) {
  return decode([&] {
    const Json doc = parse_json(text);
    EmbeddingCertificate cert;
    cert.cube = cube_of(field(doc, "cube"));
    const Json& assignment = object_field(doc, "assignment");
    cert.coordinates.assign(static_cast<std::size_t>(cert.cube.a_size),
                            std::vector<int>(static_cast<std::size_t>(b.size()), -1));
    for (const auto& [key, value] : assignment.items()) {
      const int x = b.space().index_of(key);
      if (!value.is_array() || static_cast<int>(value.size()) != cert.cube.a_size) {
        throw ParseError("assignment of \"" + key + "\" needs one level per coordinate");
      }
      for (int i = 0; i < cert.cube.a_size; ++i) {
        cert.coordinates[static_cast<std::size_t>(i)][static_cast<std::size_t>(x)] =
            level_of(cert.cube.chain, value[static_cast<std::size_t>(i)], "coordinate level");
      }
    }
    for (const auto& h : cert.coordinates)
      for (int v : h)
        if (v < 0) throw ParseError("assignment does not cover every point");
    return cert;
  });
}

std::string to_json(const EmbeddingCertificate& cert, const BiconvexStructure& b) {
  ordered_json j;
  j["cube"] = cube_json(cert.cube);
  ordered_json assignment = ordered_json::object();
  for (int x = 0; x < b.size(); ++x) {
    ordered_json levels = ordered_json::array();
    for (const auto& h : cert.coordinates) levels.push_back(lv(cert.cube.chain, h[static_cast<std::size_t>(x)]));
    assignment[b.space().name(x)] = std::move(levels);
  }
  j["assignment"] = std::move(assignment);
  return dump(j);
}

StructureKind detect_structure_kind(std::string_view text) {
  return decode([&] {
    const Json doc = parse_json(text);
    if (!doc.is_object()) throw ParseError("expected a JSON object");
    if (doc.contains("kind")) {
      const std::string k = text_of(doc["kind"], "\"kind\"");
      if (k == "convex") return StructureKind::kConvex;
      if (k == "semimodule") return StructureKind::kSemimodule;
      if (k == "biconvex") return StructureKind::kBiconvex;
      if (k == "triple") return StructureKind::kTriple;
      if (k == "cube") return StructureKind::kCube;
      throw ParseError("unknown structure kind \"" + k + "\"");
    }
    if (doc.contains("ic")) return StructureKind::kConvex;
    if (doc.contains("add")) return StructureKind::kSemimodule;
    if (doc.contains("phi")) return StructureKind::kCube;
    if (doc.contains("p") && doc.contains("m")) return StructureKind::kTriple;
    if (doc.contains("smeet")) return StructureKind::kBiconvex;
    throw ParseError("cannot tell which structure the document holds");
  });
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace capalg
