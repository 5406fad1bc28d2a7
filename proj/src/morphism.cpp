#include "plab/morphism.hpp"

#include <algorithm>

#include "plab/error.hpp"

namespace plab {

namespace {

template <typename T>
bool injective(const std::vector<T>& map, std::size_t codomain) {
  std::vector<bool> hit(codomain, false);
  for (auto v : map) {
    if (hit[v]) return false;
    hit[v] = true;
  }
  return true;
}

template <typename T>
bool surjective(const std::vector<T>& map, std::size_t codomain) {
  std::vector<bool> hit(codomain, false);
  for (auto v : map) hit[v] = true;
  return std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
}

}  // namespace

MorphismKind validate_morphism(const Morphism& m) {
  if (!m.source || !m.target) raise(ErrorCode::invalid_argument, {}, "missing source or target");
  const Permutoid& S = *m.source;
  const Permutoid& T = *m.target;
  if (m.point_map.size() != S.ground_size() || m.element_map.size() != S.size())
    raise(ErrorCode::invalid_argument, {}, "map sizes do not match the source");
  for (auto y : m.point_map)
    if (y >= T.ground_size()) raise(ErrorCode::invalid_argument, {}, "point map leaves the target");
  for (auto e : m.element_map)
    if (e >= T.size()) raise(ErrorCode::invalid_argument, {}, "element map leaves the target");

  if (m.element_map[S.identity_index()] != T.identity_index()) raise(ErrorCode::identity_not_preserved);

  for (ElementIndex p = 0; p < S.size(); ++p) {
    const auto& sp = S.element(p);
    const auto& tp = T.element(m.element_map[p]);
    for (auto x : sp.domain()) {
      auto fx = m.point_map[x];
      auto lhs = tp(fx);
      if (lhs == PartialPermutation::kNone ||
          static_cast<Point>(lhs) != m.point_map[static_cast<Point>(sp(x))])
        raise(ErrorCode::equivariance_violated, {static_cast<std::int64_t>(p), x});
    }
  }

  for (const auto& [p, q, r] : S.witness_triples()) {
    auto composed = compose_partial(T.element(m.element_map[p]), T.element(m.element_map[q]));
    if (!composed || !T.element(m.element_map[r]).extends(*composed))
      raise(ErrorCode::composition_not_preserved, {static_cast<std::int64_t>(p),
                                                   static_cast<std::int64_t>(q),
                                                   static_cast<std::int64_t>(r)});
  }

  MorphismKind kind;
  const bool points_injective = injective(m.point_map, T.ground_size());
  const bool points_surjective = surjective(m.point_map, T.ground_size());
  kind.element_map_injective = injective(m.element_map, T.size());
  const bool elements_surjective = surjective(m.element_map, T.size());

  kind.is_quotient = points_surjective && elements_surjective;
  kind.is_extension = points_injective;
  kind.is_complete_extension =
      kind.is_extension && std::all_of(T.elements().begin(), T.elements().end(),
                                       [](const auto& e) { return e.is_full(); });

  if (points_injective && points_surjective && kind.element_map_injective && elements_surjective) {
    // phi(p) must equal the conjugate of p by the point bijection, graph for graph.
    bool conjugate = true;
    for (ElementIndex p = 0; p < S.size() && conjugate; ++p) {
      const auto& sp = S.element(p);
      const auto& tp = T.element(m.element_map[p]);
      if (sp.size() != tp.size()) conjugate = false;
    }
    kind.is_isomorphism = conjugate;  // equivariance already gave containment
  }
  return kind;
}

}  // namespace plab
