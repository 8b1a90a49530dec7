#pragma once

// Space specification files and the report documents printed by the CLI.
// Documents are JSON values; the text format is rendered from them, so both
// outputs always carry the same content.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "json.hpp"

#include "propact/homspace.hpp"
#include "propact/realform.hpp"
#include "propact/weyl.hpp"

namespace propact {

using Json = nlohmann::ordered_json;

/// Parsed form of
///
///   {"g": {"name": "sl(3,R)"} | {"family": "A", "rank": 2},
///    "h": {"subsystem_generators": [[1,-1,0]], "extra_abelian_vectors": [],
///          "named_form": "sl(2,R)", "explicit_members": false},
///    "options": {"force_bruteforce": false, "enumeration_cap": 2000000}}
///
/// Coordinates are integers or "p/q" strings. Unknown keys are rejected.
struct SpaceSpec {
  Json echo;
  EmbeddingSpec embedding;  // embedding.ambient is 𝔤
  std::optional<std::string> named_form;
  bool force_bruteforce = false;
  std::uint64_t enumeration_cap = kDefaultEnumerationCap;
};

/// Throws ParseError (also for unknown forms and invalid types).
SpaceSpec parse_space_spec(const Json& doc);
SpaceSpec parse_space_spec_text(std::string_view text);
SpaceSpec load_space_spec(const std::string& path);

struct RunOptions {
  std::optional<bool> force_bruteforce;  // overrides the file
  std::optional<std::uint64_t> enumeration_cap;
  bool timing = false;  // adds wall-clock timings, which breaks byte-identical output
};

/// derive -> hypotheses -> normalize -> C1, C2, C3. Throws the library
/// errors; ConsistencyViolation when a verdict chain or a named form check
/// fails.
Json run_report(const SpaceSpec& spec, const RunOptions& options = {});

Json ranks_document(std::string_view form);
Json table1_document();
Json appendix_so44_document();
Json catalog_verify_document();

/// Human-readable rendering of any of the documents above.
std::string render_text(const Json& doc);

Json to_json(const Rational& r);
Json to_json(const RatVec& v);
Json to_json(const RatMat& m);
Json to_json(const Subspace& s);  // basis rows
Json to_json(const WeylElement& w);
Json to_json(const RankProfile& p);
RatVec vector_from_json(const Json& j);

}  // namespace propact
