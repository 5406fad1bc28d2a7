#include "plab/io.hpp"

#include <set>

namespace plab::io {

namespace {

[[noreturn]] void schema(const std::string& what) { throw Error(ErrorCode::parse_error, "ParseError: " + what); }

const json& require(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) schema(std::string("missing key '") + key + "'");
  return j.at(key);
}

std::size_t as_size(const json& j, const char* what) {
  if (!j.is_number_integer() || j.get<std::int64_t>() < 0) schema(std::string(what) + " must be a non-negative integer");
  return j.get<std::size_t>();
}

std::vector<ElementSpec> read_elements(const json& arr) {
  if (!arr.is_array()) schema("elements must be an array");
  std::vector<ElementSpec> out;
  std::set<std::string> names;
  for (std::size_t i = 0; i < arr.size(); ++i) {
    const auto& e = arr[i];
    ElementSpec spec;
    spec.name = e.contains("name") ? e.at("name").get<std::string>() : "p" + std::to_string(i);
    if (!names.insert(spec.name).second) schema("duplicate element name '" + spec.name + "'");
    const auto& map = require(e, "map");
    if (!map.is_array()) schema("map must be an array of pairs");
    for (const auto& pair : map) {
      if (!pair.is_array() || pair.size() != 2) schema("map entries must be [x, y] pairs");
      spec.map.emplace_back(static_cast<Point>(as_size(pair[0], "point")),
                            static_cast<Point>(as_size(pair[1], "point")));
    }
    out.push_back(std::move(spec));
  }
  return out;
}

json pairs_json(const PartialPermutation& p) {
  json arr = json::array();
  for (auto [x, y] : p.pairs()) arr.push_back({x, y});
  return arr;
}

json index_list(const std::vector<std::int64_t>& v) {
  json arr = json::array();
  for (auto i : v) arr.push_back(i);
  return arr;
}

}  // namespace

std::string dump(const json& j) { return j.dump(2) + "\n"; }

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    schema(e.what());
  }
}

Permutoid permutoid_from_json(const json& j) {
  const auto n = as_size(require(j, "ground_set_size"), "ground_set_size");
  if (n == 0) schema("ground_set_size must be positive");
  return validate_permutoid(n, read_elements(require(j, "elements")));
}

json elements_to_json(const std::vector<PartialPermutation>& elements, const std::vector<std::string>& names) {
  json arr = json::array();
  for (std::size_t i = 0; i < elements.size(); ++i)
    arr.push_back({{"name", names.at(i)}, {"map", pairs_json(elements[i])}});
  return arr;
}

json permutoid_to_json(const Permutoid& P) {
  return {{"ground_set_size", P.ground_size()}, {"elements", elements_to_json(P.elements(), P.names())}};
}

json development_to_json(const Permutoid& P, const Development& D) {
  json maps = json::object();
  for (std::size_t e = 0; e < P.size(); ++e) maps[P.name(e)] = D.maps.at(e);
  return {{"ground_size", D.target_size}, {"embedding", "identity-prefix"}, {"maps", maps}};
}

Development development_from_json(const Permutoid& P, const json& j) {
  Development D;
  D.target_size = as_size(require(j, "ground_size"), "ground_size");
  if (j.contains("embedding") && j.at("embedding") != "identity-prefix")
    schema("only the identity-prefix embedding is supported");
  const auto& maps = require(j, "maps");
  if (!maps.is_object()) schema("maps must be an object keyed by element name");
  for (std::size_t e = 0; e < P.size(); ++e) {
    if (!maps.contains(P.name(e))) schema("no map for element '" + P.name(e) + "'");
    Permutation f;
    for (const auto& v : maps.at(P.name(e))) f.push_back(static_cast<Point>(as_size(v, "image")));
    D.maps.push_back(std::move(f));
  }
  return D;
}

Pseudogroup pseudogroup_from_json(const json& j) {
  const auto n = as_size(require(j, "ground_set_size"), "ground_set_size");
  if (n == 0) schema("ground_set_size must be positive");
  const char* key = j.contains("maximal_elements") ? "maximal_elements" : "elements";
  std::vector<PartialPermutation> gens;
  auto specs = read_elements(require(j, key));
  for (std::size_t i = 0; i < specs.size(); ++i) {
    try {
      gens.push_back(PartialPermutation::from_pairs(n, specs[i].map));
    } catch (const Error& e) {
      raise(e.code(), {static_cast<std::int64_t>(i)}, specs[i].name);
    }
  }
  return generate_pseudogroup(n, gens);
}

json pseudogroup_to_json(const Pseudogroup& H) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < H.maximal_elements().size(); ++i) names.push_back("m" + std::to_string(i));
  return {{"ground_set_size", H.ground_size()},
          {"maximal_elements", elements_to_json(H.maximal_elements(), names)}};
}

MarkedGroup group_from_table_json(const json& j) {
  const auto order = as_size(require(j, "order"), "order");
  const auto& table_json = require(j, "table");
  if (!table_json.is_array() || table_json.size() != order) schema("table must have 'order' rows");
  std::vector<std::vector<GroupElement>> table;
  for (const auto& row : table_json) {
    if (!row.is_array()) schema("table rows must be arrays");
    std::vector<GroupElement> r;
    for (const auto& v : row) r.push_back(static_cast<GroupElement>(as_size(v, "table entry")));
    table.push_back(std::move(r));
  }
  const auto& gens_json = require(j, "generator_images");
  if (!gens_json.is_object() || gens_json.empty()) schema("generator_images must be a non-empty object");
  std::vector<std::string> names;
  std::vector<GroupElement> images;
  for (const auto& [name, v] : gens_json.items()) {
    names.push_back(name);
    images.push_back(static_cast<GroupElement>(as_size(v, "generator image")));
  }
  return MarkedGroup::finite(RealizedGroup(std::move(table), std::move(images), Backend::explicit_table),
                             std::move(names));
}

json group_to_json(const RealizedGroup& G, const std::vector<std::string>& generator_names) {
  json gens = json::object();
  for (std::size_t g = 0; g < generator_names.size(); ++g) gens[generator_names[g]] = G.generator_image(g);
  return {{"order", G.order()}, {"table", G.table()}, {"generator_images", gens},
          {"backend", backend_name(G.backend())}};
}

json error_to_json(const Error& e) {
  return {{"error", error_name(e.code())}, {"code", static_cast<int>(e.code())},
          {"indices", index_list(e.indices())}, {"message", e.what()}};
}

json kind_to_json(const MorphismKind& k) {
  return {{"is_isomorphism", k.is_isomorphism}, {"is_quotient", k.is_quotient},
          {"is_extension", k.is_extension}, {"is_complete_extension", k.is_complete_extension},
          {"element_map_injective", k.element_map_injective}};
}

json morphism_to_json(const Morphism& m) {
  return {{"point_map", m.point_map}, {"element_map", m.element_map}};
}

json evidence_to_json(const FiniteQuotientEvidence& ev) {
  return {{"generator_images", ev.generator_images}, {"group_order", ev.group_order},
          {"nontrivial", ev.nontrivial()}};
}

json stats_to_json(const SearchStats& s, bool timing) {
  json j = {{"sizes_tried", s.sizes_tried}, {"nodes", s.nodes}};
  if (timing) j["wall_time_ms"] = s.wall_ms;
  return j;
}

json verdict_to_json(const Permutoid& P, const SearchVerdict& v, bool timing) {
  json j = {{"max_ground", v.max_ground}, {"statistics", stats_to_json(v.stats, timing)}};
  switch (v.kind) {
    case VerdictKind::found:
      j["verdict"] = "Found";
      j["development"] = development_to_json(P, *v.development);
      break;
    case VerdictKind::exhausted: j["verdict"] = "ExhaustedUpTo"; break;
    case VerdictKind::budget_exceeded: j["verdict"] = "BudgetExceeded"; break;
  }
  return j;
}

json probe_to_json(const ProbeReport& r) {
  json j;
  j["bounds"] = {{"radius", r.bounds.radius}, {"max_ground", r.bounds.max_ground},
                 {"node_budget", r.bounds.node_budget}, {"max_cosets", r.bounds.max_cosets},
                 {"canonical_cap", r.bounds.canonical_cap}};
  j["statistics"] = {{"cameron_points", r.stats.cameron_points},
                     {"cameron_elements", r.stats.cameron_elements},
                     {"quotient_classes", r.stats.quotient_classes},
                     {"quotients_searched", r.stats.quotients_searched},
                     {"budget_exceeded", r.stats.budget_exceeded},
                     {"nodes", r.stats.nodes}};
  switch (r.kind) {
    case ProbeKind::found_quotient:
      j["verdict"] = "FoundQuotient";
      j["evidence"] = evidence_to_json(*r.evidence);
      j["group_order"] = r.evidence->group_order;
      j["quotient"] = {{"permutoid", permutoid_to_json(*r.quotient->permutoid)},
                       {"morphism", morphism_to_json(r.quotient->morphism)}};
      j["development"] = development_to_json(*r.quotient->permutoid, *r.development);
      break;
    case ProbeKind::definitely_none: j["verdict"] = "DefinitelyNone"; break;
    case ProbeKind::inconclusive: j["verdict"] = "Inconclusive"; break;
  }
  return j;
}

json rigid_verdict_to_json(const Permutoid& lambda, const RigidSearchVerdict& v, bool timing) {
  json j = {{"max_ground", v.max_ground}, {"statistics", stats_to_json(v.stats, timing)}};
  switch (v.kind) {
    case RigidVerdictKind::found: {
      const auto& d = *v.development;
      j["verdict"] = "Found";
      j["development"] = {{"ground_size", d.target_size}, {"group_order", d.group.size()},
                          {"group", d.group}, {"assignment", d.assignment},
                          {"permutoid_development", development_to_json(lambda, d.permutoid_development)}};
      break;
    }
    case RigidVerdictKind::exhausted: j["verdict"] = "ExhaustedUpTo"; break;
    case RigidVerdictKind::budget_exceeded: j["verdict"] = "BudgetExceeded"; break;
  }
  return j;
}

json cameron_to_json(const CameronPermutoid& c) {
  json labels = json::array();
  for (auto b : c.element_to_ball) labels.push_back(c.ball->label(b));
  json points = json::array();
  for (std::size_t x = 0; x < c.ball->size(); ++x) points.push_back(c.ball->label(x));
  return {{"radius", c.radius}, {"backend", backend_name(c.ball->group().backend())},
          {"permutoid", permutoid_to_json(c.permutoid)}, {"element_labels", labels},
          {"point_labels", points}};
}

}  // namespace plab::io
