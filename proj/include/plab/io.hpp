#pragma once

#include <string>

#include "json.hpp"

#include "plab/cayley.hpp"
#include "plab/develop.hpp"
#include "plab/error.hpp"
#include "plab/group.hpp"
#include "plab/permutoid.hpp"
#include "plab/pseudogroup.hpp"
#include "plab/quotients.hpp"
#include "plab/universal.hpp"

// JSON forms of the library's values. Every document is written with sorted
// keys, two-space indentation and a trailing LF, so equal values give equal
// bytes. Readers throw Error(parse_error) on schema problems and the usual
// validation errors on bad content.
namespace plab::io {

using nlohmann::json;

std::string dump(const json& j);
json parse_json(const std::string& text);

/// {"ground_set_size": n, "elements": [{"name": s, "map": [[x,y],...]}, ...]}
Permutoid permutoid_from_json(const json& j);
json permutoid_to_json(const Permutoid& P);
json elements_to_json(const std::vector<PartialPermutation>& elements, const std::vector<std::string>& names);

/// {"ground_size": m, "embedding": "identity-prefix", "maps": {"<name>": [...]}}
json development_to_json(const Permutoid& P, const Development& D);
Development development_from_json(const Permutoid& P, const json& j);

/// Generator file ("elements") or saturated file ("maximal_elements").
Pseudogroup pseudogroup_from_json(const json& j);
json pseudogroup_to_json(const Pseudogroup& H);

/// {"order": n, "table": [[...]], "generator_images": {"a": i, ...}};
/// generators are ordered by name.
MarkedGroup group_from_table_json(const json& j);
json group_to_json(const RealizedGroup& G, const std::vector<std::string>& generator_names);

json error_to_json(const Error& e);
json morphism_to_json(const Morphism& m);
json kind_to_json(const MorphismKind& k);
json evidence_to_json(const FiniteQuotientEvidence& ev);
json stats_to_json(const SearchStats& s, bool timing);
json verdict_to_json(const Permutoid& P, const SearchVerdict& v, bool timing);
json probe_to_json(const ProbeReport& r);
json rigid_verdict_to_json(const Permutoid& lambda, const RigidSearchVerdict& v, bool timing);
json cameron_to_json(const CameronPermutoid& c);

}  // namespace plab::io
