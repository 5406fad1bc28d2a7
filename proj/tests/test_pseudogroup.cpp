#include "doctest.h"
#include "support.hpp"

using namespace plab;
using namespace testing_support;

namespace {

ErrorCode code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::ok;
}

std::set<Graph> graphs(const Pseudogroup& H) {
  std::set<Graph> out;
  for (const auto& m : H.maximal_elements()) out.insert(graph_of(m));
  return out;
}

Pseudogroup generated(std::size_t n, std::vector<std::vector<Pair>> gens) {
  std::vector<PartialPermutation> ps;
  for (auto& g : gens) ps.push_back(pp(n, g));
  return generate_pseudogroup(n, ps);
}

Pseudogroup non_rigid() { return generated(4, {{{0, 1}, {1, 0}}, {{0, 1}, {2, 3}}}); }

Pseudogroup cameron_pseudogroup(const char* text, std::size_t rho) {
  auto c = cameron_permutoid(marked(text), rho);
  return generate_pseudogroup(c.permutoid.ground_size(), c.permutoid.elements());
}

RealizedGroup cyclic2() { return RealizedGroup({{0, 1}, {1, 0}}, {1}, Backend::explicit_table); }

}  // namespace

TEST_CASE("generation examples") {
  CHECK(graphs(generated(3, {{{0, 1}}})) == std::set<Graph>{graph_of(identity_pairs(3)), {{0, 1}}, {{1, 0}}});
  CHECK(graphs(generated(3, {})) == std::set<Graph>{graph_of(identity_pairs(3))});

  auto H = cameron_pseudogroup("gens: a; rels: a^4", 3);
  REQUIRE(H.maximal_elements().size() == 4);
  for (const auto& m : H.maximal_elements()) CHECK(m.is_full());

  CHECK(code_of([] { generate_pseudogroup(3, {pp(2, {{0, 1}})}); }) == ErrorCode::ground_set_mismatch);
}

TEST_CASE("generation agrees with brute-force saturation") {
  for (const auto& [n, gens] : generator_pool()) {
    std::vector<Graph> g;
    for (const auto& f : gens) g.push_back(graph_of(f));
    CHECK(graphs(generated(n, gens)) == oracle_saturate(n, g));
  }
}

TEST_CASE("membership") {
  auto H = generated(3, {{{0, 1}}});
  CHECK(pseudogroup_membership(H, pp(3, {{0, 1}})));
  CHECK(pseudogroup_membership(H, pp(3, {{2, 2}})));
  CHECK(pseudogroup_membership(H, pp(3, identity_pairs(3))));
  CHECK_FALSE(pseudogroup_membership(H, pp(3, {{0, 2}})));
  CHECK(code_of([&] { pseudogroup_membership(H, pp(2, {{0, 1}})); }) == ErrorCode::ground_set_mismatch);

  // Left action of the cyclic group of order 4 on itself; f = {1 -> a, a -> a^3}.
  auto c = cameron_permutoid(marked("gens: a; rels: a^4"), 3);
  auto Z4 = generate_pseudogroup(c.permutoid.ground_size(), c.permutoid.elements());
  std::map<std::string, Point> at;
  for (std::size_t x = 0; x < c.ball->size(); ++x) at[c.ball->label(x)] = static_cast<Point>(x);
  auto f = pp(4, {{at["1"], at["a"]}, {at["a"], at["a^-1"]}});
  CHECK_FALSE(pseudogroup_membership(Z4, f));
  CHECK(pseudogroup_membership(Z4, pp(4, {{at["1"], at["a"]}, {at["a"], at["a^2"]}})));
}

TEST_CASE("membership is downward closed") {
  auto H = cameron_pseudogroup("gens: a, b; rels: a^2, b^3, a b a b", 3);
  for (const auto& m : H.maximal_elements())
    for (const auto& g : downward_closure({graph_of(m)})) {
      std::vector<Pair> pairs(g.begin(), g.end());
      CHECK(pseudogroup_membership(H, pp(6, pairs)));
    }
}

TEST_CASE("rigidity examples") {
  CHECK(is_rigid_pseudogroup(generated(3, {{{0, 1}}})));
  CHECK_FALSE(is_rigid_pseudogroup(non_rigid()));
  // Rigid once B_rho is the whole group; below that, incomparable restrictions
  // of one left multiplication agree at a point.
  const std::vector<std::pair<const char*, std::size_t>> saturating{
      {"gens: a; rels: a^2", 1}, {"gens: a; rels: a^5", 2}, {"gens: a, b; rels: a^2, b^2, a b a b", 2},
      {"gens: a, b; rels: a^2, b^3, a b a b", 2}, {"gens: a; rels: a^8", 4},
      {"gens: a, b; rels: a^4, b^4, a^2 b^-2, a b a^-1 b", 3}};
  for (auto [text, rho] : saturating) CHECK(is_rigid_pseudogroup(cameron_pseudogroup(text, rho)));
  CHECK_FALSE(is_rigid_pseudogroup(cameron_pseudogroup("gens: a; rels: a^5", 1)));
  CHECK_FALSE(is_rigid_pseudogroup(cameron_pseudogroup("gens: a; rels: a^8", 3)));
}

TEST_CASE("three formulations of rigidity agree") {
  std::size_t rigid = 0, not_rigid = 0;
  for (const auto& [n, gens] : generator_pool()) {
    auto H = generated(n, gens);
    auto M = graphs(H);
    const bool r = is_rigid_pseudogroup(H);
    CHECK(rigid_by_agreement(M) == r);
    CHECK(rigid_by_unique_extension(M) == r);
    CHECK(rigid_by_gluing(M, n) == r);
    (r ? rigid : not_rigid)++;
  }
  CHECK(rigid > 0);
  CHECK(not_rigid > 0);
}

TEST_CASE("regenerating from maximal elements is a fixpoint") {
  std::mt19937_64 rng(20261016);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 1 + rng() % 5;
    std::vector<PartialPermutation> gens;
    for (std::size_t k = rng() % 4; k > 0; --k) gens.push_back(PartialPermutation::from_pairs(n, random_pairs(rng, n)));
    auto H = generate_pseudogroup(n, gens);
    CHECK(graphs(generate_pseudogroup(n, H.maximal_elements())) == graphs(H));
  }
}

TEST_CASE("maximal permutoid") {
  auto P = maximal_permutoid(generated(3, {{{0, 1}}}));
  CHECK(P.size() == 3);
  CHECK(is_rigid_permutoid(P));
  CHECK(code_of([] { maximal_permutoid(non_rigid()); }) == ErrorCode::not_rigid);

  auto c = cameron_permutoid(marked("gens: a; rels: a^3"), 2);
  auto M = maximal_permutoid(generate_pseudogroup(3, c.permutoid.elements()));
  CHECK(canonical_form(M) == canonical_form(c.permutoid));
  CHECK(oracle_isomorphic(M, c.permutoid));
}

TEST_CASE("extension to maximal elements") {
  auto c = cameron_permutoid(marked("gens: a; rels: a^3"), 2);
  auto iso = extend_to_maximal(c.permutoid);
  auto k = validate_morphism(iso);
  CHECK(k.is_extension);
  CHECK(k.element_map_injective);
  CHECK(k.is_isomorphism);

  auto restrictions = permutoid(2, {identity_pairs(2), {{0, 1}}, {{1, 0}}});
  // Without gluing, the two restrictions of the swap stay maximal.
  auto m = extend_to_maximal(restrictions);
  CHECK(m.target->size() == 3);
  auto kind = validate_morphism(m);
  CHECK(kind.is_extension);
  CHECK(kind.is_isomorphism);

  // {0->1} and {1->2} both extend to the inverse of {1->0, 2->1}.
  auto nested = permutoid(3, {identity_pairs(3), {{0, 1}}, {{1, 2}}, {{1, 0}, {2, 1}}});
  auto n = extend_to_maximal(nested);
  CHECK(n.target->size() == 5);
  CHECK(n.element_map[1] == n.element_map[2]);
  CHECK(n.element_map[1] != n.element_map[0]);
  auto nk = validate_morphism(n);
  CHECK(nk.is_extension);
  CHECK_FALSE(nk.element_map_injective);

  auto trivial = permutoid(2, {identity_pairs(2)});
  auto t = extend_to_maximal(trivial);
  CHECK(t.element_map == std::vector<ElementIndex>{0});
  CHECK(validate_morphism(t).is_isomorphism);

  auto bad = permutoid(4, {identity_pairs(4), {{0, 1}, {1, 0}}, {{0, 1}, {2, 3}}});
  CHECK(code_of([&] { extend_to_maximal(bad); }) == ErrorCode::not_rigid);
}

TEST_CASE("free action pseudogroups") {
  auto H = group_action_pseudogroup(cyclic2(), {{0, 1}, {1, 0}});
  CHECK(H.maximal_elements().size() == 2);
  CHECK(is_rigid_pseudogroup(H));

  CHECK(code_of([] { group_action_pseudogroup(cyclic2(), {{0, 1}, {0, 1}}); }) == ErrorCode::not_free);
  CHECK(code_of([] { group_action_pseudogroup(cyclic2(), {{0, 1, 2, 3}, {1, 2, 3, 0}}); }) ==
        ErrorCode::not_an_action);

  auto s3 = marked("gens: a, b; rels: a^2, b^3, a b a b");
  const auto& G = *s3->realized();
  std::vector<Permutation> regular;
  for (GroupElement g = 0; g < G.order(); ++g) {
    Permutation p;
    for (GroupElement y = 0; y < G.order(); ++y) p.push_back(G.multiply(g, y));
    regular.push_back(p);
  }
  auto R = group_action_pseudogroup(G, regular);
  CHECK(R.maximal_elements().size() == 6);
  CHECK(is_rigid_pseudogroup(R));
  auto v = search_rigid_development(R, 6, 1'000'000);
  REQUIRE(v.kind == RigidVerdictKind::found);
  CHECK(v.development->target_size <= 6);
}

TEST_CASE("rigid developments") {
  auto v = search_rigid_development(generated(3, {{{0, 1}}}), 5, 1'000'000);
  REQUIRE(v.kind == RigidVerdictKind::found);
  const auto& d = *v.development;
  CHECK(d.target_size == 3);
  CHECK(d.group.size() == 3);
  for (const auto& g : d.group) {
    bool fixes = false;
    for (std::size_t y = 0; y < g.size(); ++y) fixes = fixes || g[y] == y;
    CHECK((g == Permutation{0, 1, 2} || !fixes));
  }

  auto H = cameron_pseudogroup("gens: a; rels: a^4", 3);
  auto w = search_rigid_development(H, 6, 1'000'000);
  REQUIRE(w.kind == RigidVerdictKind::found);
  CHECK(w.development->target_size == 4);
  CHECK(w.development->group.size() == 4);
  CHECK_NOTHROW(verify_development(maximal_permutoid(H), w.development->permutoid_development));

  CHECK(code_of([] { search_rigid_development(non_rigid(), 6, 1000); }) == ErrorCode::not_rigid);
}

TEST_CASE("every found rigid development yields a permutoid development") {
  for (const auto& [n, gens] : generator_pool()) {
    if (n > 3) continue;
    auto H = generated(n, gens);
    if (!is_rigid_pseudogroup(H)) continue;
    auto v = search_rigid_development(H, 4, 100'000);
    if (v.kind != RigidVerdictKind::found) continue;
    CHECK_NOTHROW(verify_development(maximal_permutoid(H), v.development->permutoid_development));
    CHECK(generated_order(v.development->group, v.development->target_size, 1000) == v.development->group.size());
  }
}

TEST_CASE("a finite quotient yields a rigid developable quotient pseudogroup") {
  // The integers surject onto finite cyclic groups.
  auto c = cameron_permutoid(marked("gens: a"), 1);
  bool found = false;
  for (const auto& q : enumerate_quotients(c.permutoid, true, 10)) {
    auto H = generate_pseudogroup(q.permutoid->ground_size(), q.permutoid->elements());
    if (!is_rigid_pseudogroup(H)) continue;
    auto v = search_rigid_development(H, 6, 100'000);
    if (v.kind == RigidVerdictKind::found && v.development->group.size() > 1) found = true;
  }
  CHECK(found);
  CHECK_FALSE(is_rigid_pseudogroup(generate_pseudogroup(5, c.permutoid.elements())));
}
