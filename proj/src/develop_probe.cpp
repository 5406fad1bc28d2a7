#include <algorithm>

#include "plab/develop.hpp"
#include "plab/error.hpp"

namespace plab {

FiniteQuotientEvidence quotient_evidence(const Presentation& P, const CameronPermutoid& cameron,
                                         const Morphism& quotient, const Development& D) {
  if (cameron.generator_elements.size() != P.generator_count())
    raise(ErrorCode::invalid_argument, {}, "Cameron permutoid built from a different presentation");
  if (quotient.element_map.size() != cameron.permutoid.size())
    raise(ErrorCode::invalid_argument, {}, "quotient map does not start at the Cameron permutoid");
  std::vector<Permutation> images;
  for (auto e : cameron.generator_elements) images.push_back(D.maps.at(quotient.element_map[e]));
  return verify_quotient_hom(P, images);
}

ProbeReport probe_finite_quotient(const Presentation& P, const ProbeOptions& options) {
  if (options.radius == 0 || 2 * options.radius <= P.max_relator_length())
    raise(ErrorCode::precondition_radius, {static_cast<std::int64_t>(options.radius)},
          "need 2*radius greater than the longest relator");

  ProbeReport report;
  report.bounds = options;
  auto group = std::make_shared<const MarkedGroup>(MarkedGroup::from_presentation(P, options.max_cosets));
  auto cameron = cameron_permutoid(group, options.radius);
  report.stats.cameron_points = cameron.permutoid.ground_size();
  report.stats.cameron_elements = cameron.permutoid.size();
  if (cameron.permutoid.is_trivial()) {
    report.kind = ProbeKind::definitely_none;
    return report;
  }

  auto quotients = enumerate_quotients(cameron.permutoid, true, options.canonical_cap);
  std::stable_sort(quotients.begin(), quotients.end(), [](const Quotient& a, const Quotient& b) {
    return a.permutoid->ground_size() < b.permutoid->ground_size();
  });
  report.stats.quotient_classes = quotients.size();

  for (const auto& q : quotients) {
    if (q.permutoid->ground_size() > options.max_ground) break;
    ++report.stats.quotients_searched;
    DevelopmentProblem problem{*q.permutoid, options.max_ground, options.node_budget, options.deterministic};
    auto verdict = search_development(problem);
    report.stats.nodes += verdict.stats.nodes;
    if (verdict.kind == VerdictKind::budget_exceeded) ++report.stats.budget_exceeded;
    if (verdict.kind != VerdictKind::found) continue;

    auto evidence = quotient_evidence(P, cameron, q.morphism, *verdict.development);
    // Any non-identity element of a permutoid moves a point, so its
    // extension cannot be trivial; a trivial image would mean a bug upstream.
    if (!evidence.nontrivial())
      raise(ErrorCode::internal, {}, "developed a non-trivial quotient but got trivial evidence");
    report.kind = ProbeKind::found_quotient;
    report.evidence = std::move(evidence);
    report.quotient = q;
    report.development = std::move(verdict.development);
    return report;
  }
  report.kind = ProbeKind::inconclusive;
  return report;
}

}  // namespace plab
