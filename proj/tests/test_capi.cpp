#include <cstring>
#include <memory>
#include <string>

#include "doctest.h"
#include "json.hpp"
#include "plab/permutoid_c.h"

using nlohmann::json;

namespace {

// Takes ownership of a library string.
json take(char* s) {
  REQUIRE(s != nullptr);
  auto j = json::parse(s);
  plab_string_free(s);
  return j;
}

struct Permutoid {
  plab_permutoid* p = nullptr;
  explicit Permutoid(const std::string& text) { REQUIRE(plab_permutoid_from_json(text.c_str(), &p, nullptr) == PLAB_OK); }
  ~Permutoid() { plab_permutoid_free(p); }
};

struct Group {
  plab_group* g = nullptr;
  explicit Group(const std::string& text, bool table = false) {
    auto status = table ? plab_group_from_table_json(text.c_str(), &g, nullptr)
                        : plab_group_from_presentation(text.c_str(), &g, nullptr);
    REQUIRE(status == PLAB_OK);
  }
  ~Group() { plab_group_free(g); }
};

const char* kRestrictions =
    R"({"ground_set_size": 2, "elements": [
          {"name": "id", "map": [[0, 0], [1, 1]]},
          {"name": "p1", "map": [[0, 1]]},
          {"name": "p2", "map": [[1, 0]]}]})";

}  // namespace

TEST_CASE("status classes") {
  CHECK(plab_status_class(PLAB_OK) == 0);
  CHECK(plab_status_class(PLAB_NEGATIVE) == 1);
  CHECK(plab_status_class(PLAB_UNIQUE_EXTENSION_VIOLATED) == 1);
  CHECK(plab_status_class(PLAB_NOT_RIGID) == 1);
  CHECK(plab_status_class(PLAB_RELATOR_NOT_KILLED) == 1);
  CHECK(plab_status_class(PLAB_INCONCLUSIVE) == 2);
  CHECK(plab_status_class(PLAB_OUT_OF_BOUNDS) == 2);
  CHECK(plab_status_class(PLAB_PARSE_ERROR) == 3);
  CHECK(plab_status_class(PLAB_INVALID_ARGUMENT) == 3);
  CHECK(std::string(plab_status_name(PLAB_NOT_FREE)) == "NotFree");
  CHECK(std::string(plab_status_name(PLAB_INCONCLUSIVE)) == "Inconclusive");
}

TEST_CASE("permutoid construction reports structured errors") {
  plab_permutoid* p = nullptr;
  char* err = nullptr;
  const char* bad = R"({"ground_set_size": 2, "elements": [{"map": [[0, 0], [1, 1]]}, {"map": [[0, 1], [0, 0]]}]})";
  CHECK(plab_permutoid_from_json(bad, &p, &err) == PLAB_NOT_FUNCTIONAL);
  CHECK(p == nullptr);
  auto j = take(err);
  CHECK(j["error"] == "NotFunctional");
  CHECK(j["code"] == PLAB_NOT_FUNCTIONAL);
  CHECK(std::strlen(plab_last_error()) > 0);

  CHECK(plab_permutoid_from_json("{", &p, &err) == PLAB_PARSE_ERROR);
  take(err);
  CHECK(plab_permutoid_from_json(nullptr, &p, nullptr) == PLAB_INVALID_ARGUMENT);

  const char* non_unique = R"({"ground_set_size": 2, "elements": [
      {"map": [[0, 0], [1, 1]]}, {"map": [[0, 1], [1, 0]]}, {"map": [[0, 1]]}]})";
  CHECK(plab_permutoid_from_json(non_unique, &p, nullptr) == PLAB_UNIQUE_EXTENSION_VIOLATED);
}

TEST_CASE("describe, develop and verify round trip") {
  Permutoid P(kRestrictions);
  char* out = nullptr;
  REQUIRE(plab_permutoid_describe(P.p, &out) == PLAB_OK);
  auto d = take(out);
  CHECK(d["element_count"] == 3);
  CHECK(d["rigid"] == true);
  CHECK(d["canonical_form"].is_string());

  REQUIRE(plab_develop(P.p, 4, 1000000, 1, 0, &out) == PLAB_OK);
  auto v = take(out);
  CHECK(v["verdict"] == "Found");
  CHECK(v["development"]["ground_size"] == 2);
  CHECK(v["development"]["maps"]["p1"] == json::array({1, 0}));
  CHECK_FALSE(v["statistics"].contains("wall_time_ms"));

  const auto dev = v["development"].dump();
  REQUIRE(plab_verify_development(P.p, dev.c_str(), &out) == PLAB_OK);
  CHECK(take(out)["valid"] == true);

  auto broken = v["development"];
  broken["maps"]["id"] = json::array({1, 0});
  const auto b = broken.dump();
  CHECK(plab_verify_development(P.p, b.c_str(), &out) == PLAB_IDENTITY_NOT_FULL);
  CHECK(take(out)["error"] == "IdentityNotFull");

  REQUIRE(plab_develop(P.p, 4, 1000000, 1, 1, &out) == PLAB_OK);
  CHECK(take(out)["statistics"].contains("wall_time_ms"));
}

TEST_CASE("develop verdicts map to status") {
  // Integer ball of radius 2 is not developable on fewer than five points.
  Group G("gens: a");
  char* out = nullptr;
  REQUIRE(plab_cameron(G.g, 1, 10000, &out) == PLAB_OK);
  auto c = take(out);
  CHECK(c["rigid"] == true);
  CHECK(c["permutoid"]["ground_set_size"] == 5);
  Permutoid P(c["permutoid"].dump());
  CHECK(plab_develop(P.p, 5, 1000000, 1, 0, &out) == PLAB_OK);
  take(out);

  Group F("gens: a, b");
  REQUIRE(plab_cameron(F.g, 1, 10000, &out) == PLAB_OK);
  Permutoid Q(take(out)["permutoid"].dump());
  CHECK(plab_develop(Q.p, 20, 3, 1, 0, &out) == PLAB_INCONCLUSIVE);
  CHECK(take(out)["verdict"] == "BudgetExceeded");
}

TEST_CASE("quotients and universal group") {
  Permutoid P(kRestrictions);
  char* out = nullptr;
  REQUIRE(plab_quotients(P.p, 1, 10, &out) == PLAB_OK);
  auto q = take(out);
  CHECK(q["count"] == q["quotients"].size());

  Group Z5("gens: a; rels: a^5");
  REQUIRE(plab_cameron(Z5.g, 3, 10000, &out) == PLAB_OK);
  Permutoid C(take(out)["permutoid"].dump());
  REQUIRE(plab_universal_group(C.p, 10000, &out) == PLAB_OK);
  auto u = take(out);
  CHECK(u["realization"] == "complete");
  CHECK(u["realized_order"] == 5);
}

TEST_CASE("groups from presentations and tables") {
  Group S3("gens: a, b; rels: a^2, b^3, a b a b");
  char* out = nullptr;
  REQUIRE(plab_coset_enum(S3.g, 10000, &out) == PLAB_OK);
  auto t = take(out);
  CHECK(t["order"] == 6);

  REQUIRE(plab_triangulate(S3.g, 3, 10000, &out) == PLAB_OK);
  auto tri = take(out);
  CHECK(tri["realized_order"] == 6);
  CHECK(tri["input_order"] == 6);

  Group table(t.dump(), true);
  REQUIRE(plab_cameron(table.g, 2, 0, &out) == PLAB_OK);
  CHECK(take(out)["permutoid"]["ground_set_size"] == 6);
  CHECK(plab_coset_enum(table.g, 10000, &out) == PLAB_INVALID_ARGUMENT);
  take(out);

  Group Z("gens: a");
  CHECK(plab_coset_enum(Z.g, 100, &out) == PLAB_OUT_OF_BOUNDS);
  CHECK(plab_status_class(PLAB_OUT_OF_BOUNDS) == 2);
  take(out);

  plab_group* g = nullptr;
  char* err = nullptr;
  CHECK(plab_group_from_presentation("gens: a; rels: b", &g, &err) == PLAB_UNKNOWN_GENERATOR);
  CHECK(take(err)["error"] == "UnknownGenerator");
  CHECK(plab_group_from_table_json(R"({"order": 2, "table": [[0, 1], [1, 1]], "generator_images": {"a": 1}})",
                                   &g, &err) == PLAB_BAD_GROUP_TABLE);
  take(err);
}

TEST_CASE("probe") {
  plab_probe_options o;
  plab_probe_options_init(&o);
  CHECK(o.radius == 1);
  CHECK(o.max_ground == 8);
  char* out = nullptr;

  Group Z6("gens: a; rels: a^6");
  o.radius = 4;
  o.max_ground = 12;
  REQUIRE(plab_probe(Z6.g, &o, &out) == PLAB_OK);
  auto r = take(out);
  CHECK(r["verdict"] == "FoundQuotient");
  const int order = r["group_order"];
  CHECK(order > 1);
  CHECK(6 % order == 0);

  Group trivial("gens: a; rels: a");
  o.radius = 1;
  CHECK(plab_probe(trivial.g, &o, &out) == PLAB_NEGATIVE);
  CHECK(take(out)["verdict"] == "DefinitelyNone");

  o.radius = 3;
  CHECK(plab_probe(Z6.g, &o, &out) == PLAB_PRECONDITION_RADIUS);
  take(out);
}

TEST_CASE("pseudogroups") {
  plab_pseudogroup* h = nullptr;
  REQUIRE(plab_pseudogroup_from_json(R"({"ground_set_size": 3, "elements": [{"map": [[0, 1]]}]})", &h, nullptr) ==
          PLAB_OK);
  char* out = nullptr;
  REQUIRE(plab_pseudogroup_generate(h, &out) == PLAB_OK);
  CHECK(take(out)["maximal_elements"].size() == 3);
  CHECK(plab_pseudogroup_rigid(h, &out) == PLAB_OK);
  take(out);
  REQUIRE(plab_pseudogroup_maximal(h, &out) == PLAB_OK);
  CHECK(take(out)["elements"].size() == 3);
  REQUIRE(plab_pseudogroup_develop(h, 5, 1000000, 100000, 0, &out) == PLAB_OK);
  auto d = take(out);
  CHECK(d["development"]["group_order"] == 3);
  CHECK(d["development"]["ground_size"] == 3);
  plab_pseudogroup_free(h);

  REQUIRE(plab_pseudogroup_from_json(
              R"({"ground_set_size": 4, "elements": [{"map": [[0, 1], [1, 0]]}, {"map": [[0, 1], [2, 3]]}]})", &h,
              nullptr) == PLAB_OK);
  CHECK(plab_pseudogroup_rigid(h, &out) == PLAB_NEGATIVE);
  CHECK(take(out)["rigid"] == false);
  CHECK(plab_pseudogroup_maximal(h, &out) == PLAB_NOT_RIGID);
  take(out);
  CHECK(plab_pseudogroup_develop(h, 5, 1000, 1000, 0, &out) == PLAB_NOT_RIGID);
  take(out);
  plab_pseudogroup_free(h);
}

TEST_CASE("null handles") {
  char* out = nullptr;
  CHECK(plab_permutoid_describe(nullptr, &out) == PLAB_INVALID_ARGUMENT);
  CHECK(take(out)["error"] == "InvalidArgument");
  CHECK(plab_develop(nullptr, 4, 10, 1, 0, nullptr) == PLAB_INVALID_ARGUMENT);
  CHECK(plab_probe(nullptr, nullptr, nullptr) == PLAB_INVALID_ARGUMENT);
  plab_permutoid_free(nullptr);
  plab_group_free(nullptr);
  plab_pseudogroup_free(nullptr);
  plab_string_free(nullptr);
}

TEST_CASE("reports are byte-identical across runs") {
  Group S3("gens: a, b; rels: a^2, b^3, a b a b");
  auto once = [&] {
    char* out = nullptr;
    REQUIRE(plab_cameron(S3.g, 2, 10000, &out) == PLAB_OK);
    std::string s(out);
    plab_string_free(out);
    return s;
  };
  CHECK(once() == once());
}
