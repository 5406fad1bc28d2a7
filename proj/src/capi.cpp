#include "plab/permutoid_c.h"

#include <cstdlib>
#include <cstring>
#include <optional>
#include <string>

#include "plab/io.hpp"

using plab::ErrorCode;
using plab::io::json;

struct plab_permutoid {
  plab::Permutoid value;
};

struct plab_group {
  std::optional<plab::Presentation> presentation;
  std::shared_ptr<const plab::MarkedGroup> table;
  std::vector<std::string> warnings;
};

struct plab_pseudogroup {
  plab::Pseudogroup value;
};

namespace {

thread_local std::string last_error;

char* duplicate(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void emit(char** out_json, const json& j) {
  if (out_json && !j.is_null()) *out_json = duplicate(plab::io::dump(j));
}

struct Report {
  plab_status status = PLAB_OK;
  json body;
};

template <class F>
plab_status guarded(char** out_json, F&& body) {
  if (out_json) *out_json = nullptr;
  last_error.clear();
  try {
    Report r = body();
    emit(out_json, r.body);
    return r.status;
  } catch (const plab::Error& e) {
    last_error = e.what();
    emit(out_json, plab::io::error_to_json(e));
    return static_cast<plab_status>(e.code());
  } catch (const std::exception& e) {
    last_error = e.what();
    emit(out_json, plab::io::error_to_json(plab::Error(ErrorCode::internal, e.what())));
    return PLAB_INTERNAL;
  }
}

template <class F>
plab_status guarded_make(char** error_json, F&& body) {
  return guarded(error_json, [&] {
    body();
    return Report{PLAB_OK, nullptr};
  });
}

void require_handle(const void* h) {
  if (!h) plab::raise(ErrorCode::invalid_argument, {}, "null handle");
}

const plab::Presentation& need_presentation(const plab_group* g) {
  require_handle(g);
  if (!g->presentation)
    plab::raise(ErrorCode::invalid_argument, {}, "this operation needs a presentation, not a group table");
  return *g->presentation;
}

std::shared_ptr<const plab::MarkedGroup> marked(const plab_group* g, std::size_t max_cosets) {
  require_handle(g);
  if (g->table) return g->table;
  return std::make_shared<const plab::MarkedGroup>(
      plab::MarkedGroup::from_presentation(*g->presentation, max_cosets));
}

std::string hex(const std::string& bytes) {
  static const char* digits = "0123456789abcdef";
  std::string out;
  for (unsigned char c : bytes) {
    out.push_back(digits[c >> 4]);
    out.push_back(digits[c & 15]);
  }
  return out;
}

json presentation_json(const plab::Presentation& P) {
  json rels = json::array();
  for (const auto& r : P.relators()) rels.push_back(plab::format_word(r, P.generators()));
  return {{"generators", P.generators()}, {"relators", rels}, {"text", P.to_text()}};
}

// Realizes P by coset enumeration; null order when the cap is hit.
json realize(const plab::Presentation& P, std::size_t max_cosets, plab_status& status) {
  if (P.relators().empty()) return {{"realization", "free"}, {"realized_order", nullptr}};
  try {
    auto G = plab::todd_coxeter(P, max_cosets);
    return {{"realization", "complete"}, {"realized_order", G.order()}};
  } catch (const plab::Error& e) {
    if (e.code() != ErrorCode::out_of_bounds) throw;
    status = PLAB_INCONCLUSIVE;
    return {{"realization", "out_of_bounds"}, {"realized_order", nullptr}, {"max_cosets", max_cosets}};
  }
}

}  // namespace

extern "C" {

int plab_status_class(plab_status status) {
  switch (status) {
    case PLAB_OK: return 0;
    case PLAB_NEGATIVE: return 1;
    case PLAB_INCONCLUSIVE:
    case PLAB_GROUND_SET_TOO_LARGE:
    case PLAB_OUT_OF_BOUNDS:
    case PLAB_BACKEND_INCONCLUSIVE:
    case PLAB_CLOSURE_CAP_EXCEEDED:
    case PLAB_GROUP_CLOSURE_CAP_EXCEEDED: return 2;
    case PLAB_PARSE_ERROR:
    case PLAB_UNKNOWN_GENERATOR:
    case PLAB_BAD_EXPONENT:
    case PLAB_EMPTY_GENERATOR_LIST:
    case PLAB_PRECONDITION_RADIUS:
    case PLAB_INVALID_ARGUMENT:
    case PLAB_INTERNAL: return 3;
    default: return 1;
  }
}

const char* plab_status_name(plab_status status) {
  switch (status) {
    case PLAB_NEGATIVE: return "Negative";
    case PLAB_INCONCLUSIVE: return "Inconclusive";
    default: return plab::error_name(static_cast<ErrorCode>(status));
  }
}

const char* plab_last_error(void) { return last_error.c_str(); }

void plab_string_free(char* s) { std::free(s); }

plab_status plab_permutoid_from_json(const char* text, plab_permutoid** out, char** error_json) {
  if (error_json) *error_json = nullptr;
  if (!text || !out) return PLAB_INVALID_ARGUMENT;
  *out = nullptr;
  return guarded_make(error_json, [&] {
    *out = new plab_permutoid{plab::io::permutoid_from_json(plab::io::parse_json(text))};
  });
}

void plab_permutoid_free(plab_permutoid* p) { delete p; }

plab_status plab_permutoid_describe(const plab_permutoid* p, char** out_json) {
  return guarded(out_json, [&] {
    require_handle(p);
    const auto& P = p->value;
    json j;
    j["valid"] = true;
    j["ground_set_size"] = P.ground_size();
    j["element_count"] = P.size();
    j["identity_index"] = P.identity_index();
    j["rigid"] = plab::is_rigid_permutoid(P);
    j["witness_triples"] = P.witness_triples().size();
    j["permutoid"] = plab::io::permutoid_to_json(P);
    if (P.ground_size() <= plab::kDefaultCanonicalCap)
      j["canonical_form"] = hex(plab::canonical_form(P));
    else
      j["canonical_form"] = nullptr;
    return Report{PLAB_OK, j};
  });
}

plab_status plab_quotients(const plab_permutoid* p, int nontrivial_only, size_t canonical_cap, char** out_json) {
  return guarded(out_json, [&] {
    require_handle(p);
    auto qs = plab::enumerate_quotients(p->value, nontrivial_only != 0, canonical_cap);
    json list = json::array();
    for (const auto& q : qs)
      list.push_back({{"permutoid", plab::io::permutoid_to_json(*q.permutoid)},
                      {"morphism", plab::io::morphism_to_json(q.morphism)},
                      {"canonical_form", hex(plab::canonical_form(*q.permutoid, canonical_cap))}});
    return Report{PLAB_OK, {{"nontrivial_only", nontrivial_only != 0}, {"count", qs.size()}, {"quotients", list}}};
  });
}

plab_status plab_universal_group(const plab_permutoid* p, size_t max_cosets, char** out_json) {
  return guarded(out_json, [&] {
    require_handle(p);
    auto U = plab::universal_group(p->value);
    Report r;
    r.body = presentation_json(U);
    r.body["element_names"] = p->value.names();
    if (max_cosets > 0) r.body.update(realize(U, max_cosets, r.status));
    return r;
  });
}

plab_status plab_develop(const plab_permutoid* p, size_t max_ground, size_t node_budget, int deterministic,
                         int timing, char** out_json) {
  return guarded(out_json, [&] {
    require_handle(p);
    plab::DevelopmentProblem problem{p->value, max_ground, node_budget, deterministic != 0};
    auto verdict = plab::search_development(problem);
    const auto status = verdict.kind == plab::VerdictKind::found ? PLAB_OK : PLAB_INCONCLUSIVE;
    return Report{status, plab::io::verdict_to_json(p->value, verdict, timing != 0)};
  });
}

plab_status plab_verify_development(const plab_permutoid* p, const char* development_json, char** out_json) {
  return guarded(out_json, [&] {
    require_handle(p);
    require_handle(development_json);
    auto D = plab::io::development_from_json(p->value, plab::io::parse_json(development_json));
    plab::verify_development(p->value, D);
    return Report{PLAB_OK, {{"valid", true}, {"ground_size", D.target_size}}};
  });
}

plab_status plab_group_from_presentation(const char* text, plab_group** out, char** error_json) {
  if (error_json) *error_json = nullptr;
  if (!text || !out) return PLAB_INVALID_ARGUMENT;
  *out = nullptr;
  return guarded_make(error_json, [&] {
    auto parsed = plab::parse_presentation(text);
    *out = new plab_group{std::move(parsed.presentation), nullptr, std::move(parsed.warnings)};
  });
}

plab_status plab_group_from_table_json(const char* text, plab_group** out, char** error_json) {
  if (error_json) *error_json = nullptr;
  if (!text || !out) return PLAB_INVALID_ARGUMENT;
  *out = nullptr;
  return guarded_make(error_json, [&] {
    auto G = std::make_shared<const plab::MarkedGroup>(plab::io::group_from_table_json(plab::io::parse_json(text)));
    *out = new plab_group{std::nullopt, std::move(G), {}};
  });
}

void plab_group_free(plab_group* g) { delete g; }

plab_status plab_coset_enum(const plab_group* g, size_t max_cosets, char** out_json) {
  return guarded(out_json, [&] {
    const auto& P = need_presentation(g);
    plab::CosetEnumerationStats stats;
    auto G = plab::todd_coxeter(P, max_cosets, &stats);
    json j = plab::io::group_to_json(G, P.generators());
    j["statistics"] = {{"cosets_defined", stats.defined}, {"max_live", stats.max_live},
                       {"lookaheads", stats.lookaheads}};
    j["warnings"] = g->warnings;
    return Report{PLAB_OK, j};
  });
}

plab_status plab_cameron(const plab_group* g, size_t radius, size_t max_cosets, char** out_json) {
  return guarded(out_json, [&] {
    auto c = plab::cameron_permutoid(marked(g, max_cosets), radius);
    json j = plab::io::cameron_to_json(c);
    j["rigid"] = plab::is_rigid_permutoid(c.permutoid);
    return Report{PLAB_OK, j};
  });
}

plab_status plab_triangulate(const plab_group* g, size_t m, size_t max_cosets, char** out_json) {
  return guarded(out_json, [&] {
    const auto& P = need_presentation(g);
    auto T = plab::triangulate(P, m, max_cosets);
    Report r;
    r.body = presentation_json(T.presentation);
    r.body["labels"] = T.labels;
    r.body["m"] = m;
    if (auto input = plab::MarkedGroup::from_presentation(P, max_cosets); input.realized())
      r.body["input_order"] = input.realized()->order();
    r.body.update(realize(T.presentation, max_cosets, r.status));
    return r;
  });
}

void plab_probe_options_init(plab_probe_options* options) {
  if (!options) return;
  plab::ProbeOptions d;
  options->radius = d.radius;
  options->max_ground = d.max_ground;
  options->node_budget = d.node_budget;
  options->max_cosets = d.max_cosets;
  options->canonical_cap = d.canonical_cap;
  options->deterministic = d.deterministic ? 1 : 0;
}

plab_status plab_probe(const plab_group* g, const plab_probe_options* options, char** out_json) {
  return guarded(out_json, [&] {
    const auto& P = need_presentation(g);
    require_handle(options);
    plab::ProbeOptions o;
    o.radius = options->radius;
    o.max_ground = options->max_ground;
    o.node_budget = options->node_budget;
    o.max_cosets = options->max_cosets;
    o.canonical_cap = options->canonical_cap;
    o.deterministic = options->deterministic != 0;
    auto report = plab::probe_finite_quotient(P, o);
    plab_status status = PLAB_INCONCLUSIVE;
    if (report.kind == plab::ProbeKind::found_quotient) status = PLAB_OK;
    if (report.kind == plab::ProbeKind::definitely_none) status = PLAB_NEGATIVE;
    return Report{status, plab::io::probe_to_json(report)};
  });
}

plab_status plab_pseudogroup_from_json(const char* text, plab_pseudogroup** out, char** error_json) {
  if (error_json) *error_json = nullptr;
  if (!text || !out) return PLAB_INVALID_ARGUMENT;
  *out = nullptr;
  return guarded_make(error_json, [&] {
    *out = new plab_pseudogroup{plab::io::pseudogroup_from_json(plab::io::parse_json(text))};
  });
}

void plab_pseudogroup_free(plab_pseudogroup* h) { delete h; }

plab_status plab_pseudogroup_generate(const plab_pseudogroup* h, char** out_json) {
  return guarded(out_json, [&] {
    require_handle(h);
    return Report{PLAB_OK, plab::io::pseudogroup_to_json(h->value)};
  });
}

plab_status plab_pseudogroup_rigid(const plab_pseudogroup* h, char** out_json) {
  return guarded(out_json, [&] {
    require_handle(h);
    const bool rigid = plab::is_rigid_pseudogroup(h->value);
    return Report{rigid ? PLAB_OK : PLAB_NEGATIVE,
                  {{"rigid", rigid}, {"maximal_element_count", h->value.maximal_elements().size()}}};
  });
}

plab_status plab_pseudogroup_maximal(const plab_pseudogroup* h, char** out_json) {
  return guarded(out_json, [&] {
    require_handle(h);
    return Report{PLAB_OK, plab::io::permutoid_to_json(plab::maximal_permutoid(h->value))};
  });
}

plab_status plab_pseudogroup_develop(const plab_pseudogroup* h, size_t max_ground, size_t node_budget,
                                     size_t group_cap, int timing, char** out_json) {
  return guarded(out_json, [&] {
    require_handle(h);
    auto lambda = plab::maximal_permutoid(h->value);
    auto verdict = plab::search_rigid_development(h->value, max_ground, node_budget, group_cap);
    const auto status = verdict.kind == plab::RigidVerdictKind::found ? PLAB_OK : PLAB_INCONCLUSIVE;
    return Report{status, plab::io::rigid_verdict_to_json(lambda, verdict, timing != 0)};
  });
}

}  // extern "C"
