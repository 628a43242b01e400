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

#include "capalg/driver.hpp"

#include <algorithm>
#include <sstream>

#include "capalg/biconvex.hpp"
#include "capalg/capacity.hpp"
#include "capalg/convexity.hpp"
#include "capalg/json_io.hpp"
#include "capalg/monad_laws.hpp"
#include "json.hpp"

namespace capalg {
namespace {

constexpr std::pair<Command, const char*> kCommands[] = {
    {Command::kMonadLaws, "monad-laws"},     {Command::kAlgebraLaws, "algebra-laws"},
    {Command::kRoundtrip, "roundtrip"},      {Command::kBiconvexLaws, "biconvex-laws"},
    {Command::kFullXi, "full-xi"},           {Command::kEmbedSearch, "embed-search"},
    {Command::kEnumerate, "enumerate"},
};

// Carrier guards for exhaustive sweeps over all capacities.
constexpr int kMaxExhaustiveMonadCarrier = 3;
constexpr int kMaxCatalogCarrier = 3;

}  // namespace

Command parse_command(const std::string& name) {
  for (const auto& [c, n] : kCommands) {
    if (name == n) return c;
  }
  throw ParseError("unknown command \"" + name + "\"");
}

std::string command_name(Command c) {
  for (const auto& [cmd, n] : kCommands) {
    if (cmd == c) return n;
  }
  return "?";
}

RunMode parse_mode(const std::string& name) {
  if (name == "exhaustive") return RunMode::kExhaustive;
  if (name == "random") return RunMode::kRandom;
  throw ParseError("unknown mode \"" + name + "\"");
}

std::string mode_name(RunMode m) { return m == RunMode::kExhaustive ? "exhaustive" : "random"; }

std::size_t Report::checked() const {
  std::size_t n = 0;
  for (const auto& t : checks) n += t.checked;
  return n;
}

std::size_t Report::failed() const {
  std::size_t n = 0;
  for (const auto& t : checks) n += t.failed;
  return n;
}

int exit_code(const Report& report) { return report.passed() ? 0 : 1; }

namespace {

using Tallies = std::vector<LawTally>;

// Sums tallies by name, keeping the first witnesses; `prefix` labels the
// witnesses of this batch.
void merge(Tallies& into, const Tallies& from, const std::string& prefix = {}) {
  for (const auto& t : from) {
    auto it = std::find_if(into.begin(), into.end(), [&](const LawTally& x) { return x.name == t.name; });
    if (it == into.end()) {
      into.emplace_back(t.name);
      it = into.end() - 1;
    }
    it->checked += t.checked;
    it->failed += t.failed;
    for (const auto& w : t.witnesses) {
      if (it->witnesses.size() < LawTally::kMaxWitnesses) it->witnesses.push_back(prefix + w);
    }
  }
}

bool all_ok(const Tallies& t) {
  return std::all_of(t.begin(), t.end(), [](const LawTally& x) { return x.ok(); });
}

LawTally single(const std::string& name, bool holds, const std::string& witness) {
  LawTally t(name);
  t.record(holds, [&] { return witness; });
  return t;
}

LawTally from_diagnostics(const std::string& name, const Diagnostics& d) {
  return single(name, d.empty(), d.empty() ? std::string() : d.front().code + ": " + d.front().message);
}

// ---- inputs -------------------------------------------------------------

struct Inputs {
  std::optional<FiniteSpace> space;
  std::optional<ConvexStructure> convex;
  std::optional<Semimodule> module;
  std::optional<BiconvexStructure> biconvex;
  std::optional<std::string> biconvex_source;  // "triple" or "cube"
  Chain chain{2};
};

Inputs load(const RunConfig& config) {
  Inputs in;
  in.chain = Chain(config.chain_k);
  if (config.space_path) in.space = parse_space(read_text_file(*config.space_path));
  if (config.structure_path) {
    const std::string text = read_text_file(*config.structure_path);
    switch (detect_structure_kind(text)) {
      case StructureKind::kConvex:
        in.convex = parse_convex_structure(text);
        in.chain = in.convex->chain();
        break;
      case StructureKind::kSemimodule:
        in.module = parse_semimodule(text);
        in.chain = in.module->chain();
        break;
      case StructureKind::kBiconvex:
        in.biconvex = parse_biconvex(text);
        in.chain = in.biconvex->chain();
        break;
      case StructureKind::kTriple: {
        const TripleStructure t = parse_triple(text);
        in.biconvex = biconvex_from_triple(t);
        in.biconvex_source = "triple";
        in.chain = t.chain;
        break;
      }
      case StructureKind::kCube: {
        const CubeStructure c = parse_cube(text);
        in.biconvex = cube_structure(c);
        in.biconvex_source = "cube";
        in.chain = c.chain;
        break;
      }
    }
  }
  return in;
}

int carrier_size(const Inputs& in, const char* command) {
  if (!in.space) throw ParseError(std::string(command) + " needs --space");
  return in.space->size();
}

LawCheckOptions law_options(const RunConfig& config) {
  LawCheckOptions o;
  o.exhaustive_limit = config.mode == RunMode::kExhaustive ? 5000 : 0;
  o.samples = config.samples;
  o.seed = config.seed;
  return o;
}

// ---- per-structure suites ----------------------------------------------

Tallies convex_algebra(const ConvexStructure& s, const RunConfig& config) {
  Tallies out = tally_ic_axioms(s);
  if (!all_ok(out)) return out;
  merge(out, tally_algebra_laws(StructureMapUnion::from_convex(s), law_options(config)));
  return out;
}

Tallies biconvex_algebra(const BiconvexStructure& b, const RunConfig& config) {
  Tallies out = tally_biconvex(b);
  if (!all_ok(out)) return out;
  if (b.size() > kMaxCatalogCarrier) throw BudgetExceeded("the full structure map needs at most 3 points");
  merge(out, tally_full_algebra_laws(FullStructureMap::from_biconvex(b), law_options(config)));
  return out;
}

Tallies convex_roundtrip(const ConvexStructure& s, const RunConfig& config) {
  Tallies out = tally_ic_axioms(s);
  if (!all_ok(out)) return out;
  const StructureMapUnion xi = StructureMapUnion::from_convex(s);
  const ConvexStructure back = ic_from_structure_map(xi, law_options(config));
  out.push_back(single("ic-xi-ic", back == s, "ic recovered from xi differs"));
  out.push_back(single("xi-ic-xi", StructureMapUnion::from_convex(back) == xi, "xi recovered from ic differs"));
  out.push_back(from_diagnostics("x0-independence", check_base_independence(s)));
  const QuotientSemimodule q = quotient_semimodule(s);
  out.push_back(from_diagnostics("quotient-axioms", check_semimodule_axioms(q.module)));
  out.push_back(from_diagnostics("quotient-well-defined", q.consistency));
  out.push_back(from_diagnostics("quotient-embedding", check_quotient_embedding(s, q)));
  return out;
}

Tallies biconvex_roundtrip(const BiconvexStructure& b) {
  Tallies out = tally_biconvex(b);
  if (!all_ok(out)) return out;
  const TripleStructure t = triple_from_biconvex(b);
  out.push_back(from_diagnostics("triple-conditions", check_triple(t)));
  const BiconvexStructure back = biconvex_from_triple(t);
  out.push_back(single("biconvex-triple-biconvex", back == b, "operations recovered from p, m differ"));
  const TripleStructure t2 = triple_from_biconvex(back);
  out.push_back(single("triple-biconvex-triple", t2.p == t.p && t2.m == t.m && t2.bjoin == t.bjoin && t2.bmeet == t.bmeet,
                       "p, m recovered from the operations differ"));
  if (b.size() <= kMaxCatalogCarrier) {
    const BiconvexStructure from_xi = biconvex_from_algebra(FullStructureMap::from_biconvex(b));
    out.push_back(single("algebra-biconvex", from_xi == b, "operations recovered from the structure map differ"));
  }
  return out;
}

Tallies biconvex_laws(const BiconvexStructure& b, const RunConfig& config) {
  Tallies out = tally_biconvex(b);
  if (!all_ok(out)) return out;
  out.push_back(from_diagnostics("triple-conditions", check_triple(triple_from_biconvex(b))));
  LawTally up("possibility-closed-forms"), down("necessity-closed-forms");
  const int n = b.size();
  auto check_up = [&](const PossibilityCapacity& c) {
    const auto f = possibility_closed_forms(b, c);
    up.record(f.agree(), [&] { return describe(Capacity(c), b.space()); });
  };
  auto check_down = [&](const NecessityCapacity& c) {
    const auto f = necessity_closed_forms(b, c);
    down.record(f.agree(), [&] { return describe(Capacity(c), b.space()); });
  };
  if (config.mode == RunMode::kExhaustive) {
    for (const auto& c : enumerate_capacities(n, b.chain(), CapacityClass::kUnion, config.budget)) check_up(*as_possibility(c));
    for (const auto& c : enumerate_capacities(n, b.chain(), CapacityClass::kIntersection, config.budget)) {
      check_down(*as_necessity(c));
    }
  } else {
    Rng rng(config.seed);
    for (std::size_t s = 0; s < config.samples; ++s) {
      check_up(random_possibility(n, b.chain(), rng));
      check_down(random_necessity(n, b.chain(), rng));
    }
  }
  out.push_back(up);
  out.push_back(down);
  return out;
}

struct FullXiOutcome {
  Tallies tallies;
  std::size_t capacities = 0;
  std::size_t without_preimage = 0;
  std::string first_without_preimage;
  std::size_t sugeno_agreements = 0;
  std::string sugeno_counterexample;
};

FullXiOutcome full_xi(const BiconvexStructure& b, const RunConfig& config) {
  FullXiOutcome out;
  out.tallies = tally_biconvex(b);
  if (!all_ok(out.tallies)) return out;
  if (b.size() > kMaxCatalogCarrier) throw BudgetExceeded("the full structure map needs at most 3 points");
  const auto atlas = preimage_atlas(b.size(), b.chain());
  const auto catalog = capacity_catalog(b.size(), b.chain());
  out.capacities = catalog->size();
  for (const auto& c : catalog->items()) {
    for (Diagram d : {Diagram::kUnionOverIntersection, Diagram::kIntersectionOverUnion}) {
      if (atlas->preimages(c, d, 1).empty()) {
        if (out.without_preimage++ == 0) out.first_without_preimage = describe(c, b.space());
      }
    }
  }
  if (out.without_preimage > 0) return out;

  const FullStructureMap up = FullStructureMap::from_biconvex(b, Diagram::kUnionOverIntersection);
  const FullStructureMap down = FullStructureMap::from_biconvex(b, Diagram::kIntersectionOverUnion);
  LawTally agree("diagram-agreement"), indep("preimage-independence"), coherent("restriction-coherence"),
      closed("closed-form-agreement");
  for (const auto& c : catalog->items()) {
    const int v = up(c);
    const auto w = [&] { return describe(c, b.space()); };
    agree.record(v == down(c), w);
    for (Diagram d : {Diagram::kUnionOverIntersection, Diagram::kIntersectionOverUnion}) {
      const auto pre = atlas->preimages(c, d);
      if (pre.size() < 2) continue;
      bool same = true;
      for (const auto& p : pre) same = same && structure_map_through(b, p, d) == v;
      indep.record(same, w);
    }
    if (auto u = as_possibility(c)) {
      coherent.record(v == structure_map_possibility(b, *u), w);
      closed.record(possibility_closed_forms(b, *u).agree(), w);
    }
    if (auto i = as_necessity(c)) {
      coherent.record(v == structure_map_necessity(b, *i), w);
      closed.record(necessity_closed_forms(b, *i).agree(), w);
    }
    if (sugeno_form(b, c) == v) {
      ++out.sugeno_agreements;
    } else if (out.sugeno_counterexample.empty()) {
      out.sugeno_counterexample = describe(c, b.space());
    }
  }
  out.tallies.insert(out.tallies.end(), {agree, indep, coherent, closed});
  const LatticeTables lat = lattice_from_algebra(up);
  out.tallies.push_back(single("lattice-recovery", lat.bjoin == b.bjoin_table() && lat.bmeet == b.bmeet_table(),
                               "derived lattice differs from the given one"));
  merge(out.tallies, tally_full_algebra_laws(up, law_options(config)));
  return out;
}

// Structures to sweep: the given one, or every enumerated one on --space.
template <class S>
std::vector<S> sweep(const std::optional<S>& given, const Inputs& in, const RunConfig& config, const char* command,
                     std::vector<S> (*enumerate)(int, Chain, std::size_t)) {
  if (given) return {*given};
  return enumerate(carrier_size(in, command), in.chain, config.budget);
}

std::vector<ConvexStructure> enumerate_convex(int n, Chain c, std::size_t budget) {
  return enumerate_convex_structures(n, c, budget);
}

std::vector<BiconvexStructure> enumerate_biconvex(int n, Chain c, std::size_t budget) {
  if (n > 5) throw BudgetExceeded("biconvex enumeration supports at most 5 points");
  return enumerate_biconvex_structures(n, c, budget);
}

const BiconvexStructure& need_biconvex(const Inputs& in, const char* command) {
  if (!in.biconvex) throw InvalidInput(std::string(command) + " needs a biconvex, triple or cube --structure");
  return *in.biconvex;
}

void no_structure_kinds(const Inputs& in, const char* command, bool convex_ok, bool module_ok, bool biconvex_ok) {
  if ((in.convex && !convex_ok) || (in.module && !module_ok) || (in.biconvex && !biconvex_ok)) {
    throw InvalidInput(std::string(command) + " does not take this kind of structure");
  }
}

std::string count_text(std::size_t n) { return std::to_string(n); }

// ---- commands ----------------------------------------------------------

void run_monad_laws(const RunConfig& config, const Inputs& in, Report& r) {
  const int n = carrier_size(in, "monad-laws");
  const bool exhaustive = config.mode == RunMode::kExhaustive;
  if (exhaustive && n > kMaxExhaustiveMonadCarrier) {
    throw BudgetExceeded("exhaustive monad-laws needs at most 3 points; use --mode random");
  }
  const MonadLawOptions options{exhaustive, config.samples, config.seed};
  r.checks = tally_chain_laws(in.chain);
  if (n <= 4) {
    merge(r.checks, tally_g_monad_laws(n, options));
  } else {
    r.notes.push_back("G monad laws skipped: inclusion hyperspaces are enumerated for at most 4 points");
  }
  merge(r.checks, tally_capacity_monad_laws(n, in.chain, options));
  if (exhaustive) {
    r.findings.push_back({"capacity_count", count_text(enumerate_capacities(n, in.chain, CapacityClass::kAll).size())});
  }
}

void run_algebra_laws(const RunConfig& config, const Inputs& in, Report& r) {
  if (in.module) {
    r.checks = tally_semimodule_axioms(*in.module, ScalarSemiring::kMaxMin);
    return;
  }
  if (in.biconvex) {
    r.checks = biconvex_algebra(*in.biconvex, config);
    return;
  }
  const auto all = sweep(in.convex, in, config, "algebra-laws", enumerate_convex);
  for (std::size_t i = 0; i < all.size(); ++i) {
    merge(r.checks, convex_algebra(all[i], config), all.size() > 1 ? "structure " + std::to_string(i) + ": " : "");
  }
  r.findings.push_back({"structures", count_text(all.size())});
}

void run_roundtrip(const RunConfig& config, const Inputs& in, Report& r) {
  no_structure_kinds(in, "roundtrip", true, false, true);
  if (in.biconvex) {
    r.checks = biconvex_roundtrip(*in.biconvex);
    return;
  }
  const auto convex = sweep(in.convex, in, config, "roundtrip", enumerate_convex);
  for (std::size_t i = 0; i < convex.size(); ++i) {
    merge(r.checks, convex_roundtrip(convex[i], config), convex.size() > 1 ? "convex " + std::to_string(i) + ": " : "");
  }
  r.findings.push_back({"convex_structures", count_text(convex.size())});
  if (!in.convex) {
    const auto bi = enumerate_biconvex(carrier_size(in, "roundtrip"), in.chain, config.budget);
    for (std::size_t i = 0; i < bi.size(); ++i) merge(r.checks, biconvex_roundtrip(bi[i]), "biconvex " + std::to_string(i) + ": ");
    r.findings.push_back({"biconvex_structures", count_text(bi.size())});
  }
}

void run_biconvex_laws(const RunConfig& config, const Inputs& in, Report& r) {
  no_structure_kinds(in, "biconvex-laws", false, false, true);
  const auto all = sweep(in.biconvex, in, config, "biconvex-laws", enumerate_biconvex);
  std::size_t distributive = 0;
  for (std::size_t i = 0; i < all.size(); ++i) {
    merge(r.checks, biconvex_laws(all[i], config), all.size() > 1 ? "structure " + std::to_string(i) + ": " : "");
    distributive += is_distributive_lattice(all[i]) ? 1 : 0;
  }
  r.findings.push_back({"structures", count_text(all.size())});
  r.findings.push_back({"distributive_lattices", count_text(distributive)});
  r.notes.push_back("local biconvexity is vacuous on finite discrete carriers");
}

void run_full_xi(const RunConfig& config, const Inputs& in, Report& r) {
  no_structure_kinds(in, "full-xi", false, false, true);
  const auto all = sweep(in.biconvex, in, config, "full-xi", enumerate_biconvex);
  std::size_t capacities = 0, missing = 0, agreements = 0;
  std::string missing_witness, sugeno_witness;
  for (std::size_t i = 0; i < all.size(); ++i) {
    const std::string prefix = all.size() > 1 ? "structure " + std::to_string(i) + ": " : "";
    FullXiOutcome o = full_xi(all[i], config);
    merge(r.checks, o.tallies, prefix);
    capacities += o.capacities;
    missing += o.without_preimage;
    agreements += o.sugeno_agreements;
    if (missing_witness.empty() && !o.first_without_preimage.empty()) missing_witness = prefix + o.first_without_preimage;
    if (sugeno_witness.empty() && !o.sugeno_counterexample.empty()) sugeno_witness = prefix + o.sugeno_counterexample;
  }
  nlohmann::ordered_json surj;
  surj["capacities"] = capacities;
  surj["without_preimage"] = missing;
  surj["first_counterexample"] = missing_witness.empty() ? nlohmann::ordered_json() : nlohmann::ordered_json(missing_witness);
  r.findings.push_back({"surjectivity", surj.dump()});
  nlohmann::ordered_json sugeno;
  sugeno["capacities"] = missing == 0 ? capacities : 0;
  sugeno["agreements"] = agreements;
  sugeno["outcome"] = sugeno_witness.empty() ? "agreement" : "counterexample";
  sugeno["first_counterexample"] = sugeno_witness.empty() ? nlohmann::ordered_json() : nlohmann::ordered_json(sugeno_witness);
  r.findings.push_back({"sugeno_cross_check", sugeno.dump()});
  if (missing > 0) r.notes.push_back("capacities without a preimage were skipped; see surjectivity");
}

void run_embed_search(const RunConfig& config, const Inputs& in, Report& r) {
  no_structure_kinds(in, "embed-search", false, false, true);
  const BiconvexStructure& b = need_biconvex(in, "embed-search");
  r.checks = tally_biconvex(b);
  if (!all_ok(r.checks)) return;
  for (EmbeddingMode mode : {EmbeddingMode::kAllOperations, EmbeddingMode::kBiaffine}) {
    const std::string tag = mode == EmbeddingMode::kAllOperations ? "all_operations" : "biaffine";
    const EmbeddingSearchResult res = embedding_search(b, config.max_a, mode, config.budget);
    nlohmann::ordered_json j;
    j["max_a"] = res.max_a;
    j["coordinate_candidates"] = res.coordinate_candidates;
    j["tuples_examined"] = res.tuples_examined;
    if (res.certificate) {
      j["found"] = true;
      j["a_size"] = res.certificate->cube.a_size;
      j["certificate"] = nlohmann::ordered_json::parse(to_json(*res.certificate, b));
      r.checks.push_back(from_diagnostics("certificate-" + tag, verify_certificate(b, *res.certificate, mode)));
    } else {
      j["found"] = false;
      j["certificate"] = nullptr;
    }
    r.findings.push_back({"embedding_" + tag, j.dump()});
  }
  r.notes.push_back("a missing certificate only bounds chain-valued embeddings with at most max_a coordinates");
}

void run_enumerate(const RunConfig& config, const Inputs& in, Report& r) {
  const int n = carrier_size(in, "enumerate");
  const Chain ch = in.chain;
  auto attempt = [&](const char* key, auto&& fn) {
    try {
      r.findings.push_back({key, count_text(fn())});
    } catch (const BudgetExceeded& e) {
      r.notes.push_back(std::string(key) + " skipped: " + e.what());
    }
  };
  attempt("capacities", [&] { return enumerate_capacities(n, ch, CapacityClass::kAll, config.budget).size(); });
  LawTally unions("union-count"), inters("intersection-count");
  attempt("union_capacities", [&] {
    const auto u = enumerate_capacities(n, ch, CapacityClass::kUnion, config.budget);
    std::size_t expect = 1, minus = 1;
    for (int i = 0; i < n; ++i) {
      expect *= static_cast<std::size_t>(ch.size());
      minus *= static_cast<std::size_t>(ch.resolution());
    }
    unions.record(u.size() == expect - minus, [&] { return "expected (k+1)^n - k^n"; });
    const auto i = enumerate_capacities(n, ch, CapacityClass::kIntersection, config.budget);
    inters.record(i.size() == u.size(), [&] { return "kappa pairs union and intersection capacities"; });
    return u.size();
  });
  r.checks.push_back(unions);
  r.checks.push_back(inters);
  if (n <= 4) attempt("inclusion_hyperspaces", [&] { return all_inclusion_hyperspaces(n).size(); });
  LawTally convex("convex-axioms"), bi("biconvex-laws");
  attempt("convex_structures", [&] {
    const auto all = enumerate_convex_structures(n, ch, config.budget);
    for (const auto& s : all) convex.record(check_ic_axioms(s).empty(), [&] { return to_json(s); });
    return all.size();
  });
  if (n <= 5) {
    attempt("lattices", [&] { return enumerate_lattices(n).size(); });
    attempt("biconvex_structures", [&] {
      const auto all = enumerate_biconvex_structures(n, ch, config.budget);
      for (const auto& b : all) bi.record(check_biconvex(b).empty(), [&] { return to_json(b); });
      return all.size();
    });
  }
  r.checks.push_back(convex);
  r.checks.push_back(bi);
}

}  // namespace

Report run(const RunConfig& config) {
  if (config.samples == 0 && config.mode == RunMode::kRandom) throw InvalidInput("random mode needs --samples > 0");
  if (config.max_a < 1) throw InvalidInput("--max-a must be at least 1");
  const Inputs in = load(config);
  Report r;
  r.command = config.command;
  if (config.structure_path && in.chain.resolution() != config.chain_k) {
    r.notes.push_back("chain taken from the structure (k=" + std::to_string(in.chain.resolution()) + ")");
  }
  if (in.biconvex_source) r.notes.push_back("biconvex structure built from a " + *in.biconvex_source);
  switch (config.command) {
    case Command::kMonadLaws: run_monad_laws(config, in, r); break;
    case Command::kAlgebraLaws: run_algebra_laws(config, in, r); break;
    case Command::kRoundtrip: run_roundtrip(config, in, r); break;
    case Command::kBiconvexLaws: run_biconvex_laws(config, in, r); break;
    case Command::kFullXi: run_full_xi(config, in, r); break;
    case Command::kEmbedSearch: run_embed_search(config, in, r); break;
    case Command::kEnumerate: run_enumerate(config, in, r); break;
  }
  return r;
}

std::string report_json(const Report& report, const RunConfig& config) {
  using J = nlohmann::ordered_json;
  J j;
  j["command"] = command_name(report.command);
  J cfg;
  cfg["space"] = config.space_path ? J(*config.space_path) : J();
  cfg["structure"] = config.structure_path ? J(*config.structure_path) : J();
  cfg["chain_k"] = config.chain_k;
  cfg["mode"] = mode_name(config.mode);
  cfg["samples"] = config.samples;
  cfg["seed"] = config.seed;
  cfg["max_a"] = config.max_a;
  cfg["budget"] = config.budget;
  j["config"] = std::move(cfg);
  J checks = J::array();
  for (const auto& t : report.checks) {
    J c;
    c["name"] = t.name;
    c["checked"] = t.checked;
    c["passed"] = t.checked - t.failed;
    c["failed"] = t.failed;
    std::vector<std::string> w = t.witnesses;
    std::sort(w.begin(), w.end(), [](const std::string& a, const std::string& b) {
      return a.size() != b.size() ? a.size() < b.size() : a < b;
    });
    c["witnesses"] = w;
    checks.push_back(std::move(c));
  }
  j["checks"] = std::move(checks);
  J totals;
  totals["checked"] = report.checked();
  totals["passed"] = report.checked() - report.failed();
  totals["failed"] = report.failed();
  j["totals"] = std::move(totals);
  J findings = J::object();
  for (const auto& f : report.findings) findings[f.key] = J::parse(f.json);
  j["findings"] = std::move(findings);
  j["notes"] = report.notes;
  j["verdict"] = report.passed() ? "pass" : "fail";
  return j.dump(2) + "\n";
}

std::string report_summary(const Report& report) {
  std::ostringstream out;
  out << command_name(report.command) << "\n";
  for (const auto& t : report.checks) {
    out << "  " << t.name << ": " << (t.checked - t.failed) << "/" << t.checked << " passed";
    if (!t.ok()) out << " (first witness: " << t.witnesses.front() << ")";
    out << "\n";
  }
  for (const auto& f : report.findings) out << "  " << f.key << " = " << f.json << "\n";
  for (const auto& n : report.notes) out << "  note: " << n << "\n";
  out << "verdict: " << (report.passed() ? "pass" : "fail") << " (" << report.checked() << " cases, "
      << report.failed() << " failed)\n";
  return out.str();
}

}  // namespace capalg
