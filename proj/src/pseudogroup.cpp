#include "plab/pseudogroup.hpp"

#include <algorithm>

#include "plab/error.hpp"
#include "plab/universal.hpp"

namespace plab {

namespace {

// Adds f unless it is a restriction of a member; drops members it extends.
bool insert_maximal(std::vector<PartialPermutation>& antichain, const PartialPermutation& f) {
  for (const auto& m : antichain)
    if (m.extends(f)) return false;
  std::erase_if(antichain, [&](const PartialPermutation& m) { return f.extends(m); });
  antichain.push_back(f);
  return true;
}

}  // namespace

Pseudogroup generate_pseudogroup(std::size_t ground_size, const std::vector<PartialPermutation>& generators) {
  if (ground_size == 0) raise(ErrorCode::invalid_argument, {}, "ground set must be non-empty");
  std::vector<PartialPermutation> M;
  insert_maximal(M, PartialPermutation::identity(ground_size));
  for (std::size_t i = 0; i < generators.size(); ++i) {
    if (generators[i].ground_size() != ground_size)
      raise(ErrorCode::ground_set_mismatch, {static_cast<std::int64_t>(i)});
    insert_maximal(M, generators[i]);
  }

  bool changed = true;
  while (changed) {
    changed = false;
    const auto snapshot = M;
    for (const auto& a : snapshot) changed |= insert_maximal(M, a.inverse());
    for (const auto& a : snapshot)
      for (const auto& b : snapshot)
        if (auto ab = compose_partial(a, b)) changed |= insert_maximal(M, *ab);
  }
  std::sort(M.begin(), M.end());

  Pseudogroup H;
  H.ground_size_ = ground_size;
  H.maximal_ = std::move(M);
  return H;
}

bool pseudogroup_membership(const Pseudogroup& H, const PartialPermutation& f) {
  if (f.ground_size() != H.ground_size()) raise(ErrorCode::ground_set_mismatch);
  return std::any_of(H.maximal_elements().begin(), H.maximal_elements().end(),
                     [&](const auto& m) { return m.extends(f); });
}

bool is_rigid_pseudogroup(const Pseudogroup& H) {
  const auto& M = H.maximal_elements();
  for (std::size_t i = 0; i < M.size(); ++i)
    for (std::size_t j = i + 1; j < M.size(); ++j)
      if (M[i].agrees_somewhere(M[j])) return false;
  return true;
}

Permutoid maximal_permutoid(const Pseudogroup& H) {
  if (!is_rigid_pseudogroup(H)) raise(ErrorCode::not_rigid);
  std::vector<std::string> names;
  for (std::size_t i = 0; i < H.maximal_elements().size(); ++i) names.push_back("m" + std::to_string(i));
  return make_permutoid(H.ground_size(), H.maximal_elements(), std::move(names));
}

Morphism extend_to_maximal(const Permutoid& P) {
  auto H = generate_pseudogroup(P.ground_size(), P.elements());
  auto lambda = std::make_shared<const Permutoid>(maximal_permutoid(H));
  Morphism m;
  m.source = std::make_shared<const Permutoid>(P);
  m.target = lambda;
  for (Point x = 0; x < P.ground_size(); ++x) m.point_map.push_back(x);
  for (const auto& p : P.elements()) {
    ElementIndex target = 0;
    for (ElementIndex i = 0; i < lambda->size(); ++i)
      if (lambda->element(i).extends(p)) target = i;
    m.element_map.push_back(target);
  }
  validate_morphism(m);
  return m;
}

Pseudogroup group_action_pseudogroup(const RealizedGroup& G, const std::vector<Permutation>& action) {
  if (action.size() != G.order()) raise(ErrorCode::invalid_argument, {}, "one permutation per group element");
  const std::size_t degree = action.front().size();
  if (degree == 0) raise(ErrorCode::invalid_argument, {}, "empty action set");
  for (std::size_t g = 0; g < action.size(); ++g) {
    if (action[g].size() != degree) raise(ErrorCode::invalid_argument, {static_cast<std::int64_t>(g)}, "degree mismatch");
    std::vector<bool> seen(degree, false);
    for (auto v : action[g]) {
      if (v >= degree || seen[v]) raise(ErrorCode::not_a_permutation, {static_cast<std::int64_t>(g)});
      seen[v] = true;
    }
  }
  for (std::size_t g = 0; g < G.order(); ++g)
    for (std::size_t h = 0; h < G.order(); ++h) {
      const auto& gh = action[G.multiply(static_cast<GroupElement>(g), static_cast<GroupElement>(h))];
      for (std::size_t y = 0; y < degree; ++y)
        if (gh[y] != action[g][action[h][y]])
          raise(ErrorCode::not_an_action, {static_cast<std::int64_t>(g), static_cast<std::int64_t>(h)});
    }
  for (std::size_t g = 1; g < G.order(); ++g)
    for (std::size_t y = 0; y < degree; ++y)
      if (action[g][y] == y) raise(ErrorCode::not_free, {static_cast<std::int64_t>(g), static_cast<std::int64_t>(y)});

  Pseudogroup H;
  H.ground_size_ = degree;
  for (const auto& a : action) {
    std::vector<std::int32_t> images(a.begin(), a.end());
    H.maximal_.push_back(PartialPermutation::from_images(std::move(images)));
  }
  std::sort(H.maximal_.begin(), H.maximal_.end());
  return H;
}

RigidSearchVerdict search_rigid_development(const Pseudogroup& H, std::size_t max_ground,
                                            std::size_t node_budget, std::size_t group_cap) {
  auto lambda = maximal_permutoid(H);
  auto free_action = [&](const std::vector<Permutation>& maps) {
    const std::size_t m = maps.front().size();
    std::vector<Permutation> group;
    try {
      group = generated_group(maps, m, group_cap);
    } catch (const Error& e) {
      if (e.code() == ErrorCode::closure_cap_exceeded)
        raise(ErrorCode::group_closure_cap_exceeded, e.indices());
      throw;
    }
    for (std::size_t i = 1; i < group.size(); ++i)
      for (std::size_t y = 0; y < m; ++y)
        if (group[i][y] == y) return false;
    return true;
  };

  DevelopmentProblem problem{lambda, max_ground, node_budget, true};
  auto verdict = search_development(problem, free_action);

  RigidSearchVerdict out;
  out.max_ground = max_ground;
  out.stats = verdict.stats;
  switch (verdict.kind) {
    case VerdictKind::exhausted: out.kind = RigidVerdictKind::exhausted; return out;
    case VerdictKind::budget_exceeded: out.kind = RigidVerdictKind::budget_exceeded; return out;
    case VerdictKind::found: break;
  }
  const auto& D = *verdict.development;
  RigidDevelopment rd;
  rd.target_size = D.target_size;
  rd.group = generated_group(D.maps, D.target_size, group_cap);
  for (const auto& f : D.maps) {
    auto it = std::find(rd.group.begin(), rd.group.end(), f);
    rd.assignment.push_back(static_cast<std::size_t>(it - rd.group.begin()));
  }
  rd.permutoid_development = D;
  out.kind = RigidVerdictKind::found;
  out.development = std::move(rd);
  return out;
}

}  // namespace plab
