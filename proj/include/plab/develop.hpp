#pragma once

#include <cstddef>
#include <functional>
#include <memory>
#include <optional>
#include <vector>

#include "plab/cayley.hpp"
#include "plab/permutoid.hpp"
#include "plab/quotients.hpp"
#include "plab/universal.hpp"

namespace plab {

struct DevelopmentProblem {
  Permutoid source;
  std::size_t max_ground = 0;
  std::size_t node_budget = 1'000'000;
  bool deterministic = true;
};

/// Complete finite extension: X sits inside Y = {0,...,target_size-1} as the
/// initial segment, and maps[e] is the permutation of Y extending element e.
struct Development {
  std::size_t target_size = 0;
  std::vector<Permutation> maps;

  friend bool operator==(const Development&, const Development&) = default;
};

struct SearchStats {
  std::vector<std::size_t> sizes_tried;
  std::size_t nodes = 0;
  double wall_ms = 0.0;
};

enum class VerdictKind { found, exhausted, budget_exceeded };

/// Found comes with a development that passed verify_development.
/// `exhausted` only says no development exists with |Y| <= max_ground.
struct SearchVerdict {
  VerdictKind kind = VerdictKind::exhausted;
  std::optional<Development> development;
  std::size_t max_ground = 0;
  SearchStats stats;
};

/// Extra acceptance test applied to each complete assignment.
using LeafFilter = std::function<bool(const std::vector<Permutation>&)>;

/// Iterative deepening on |Y| from |X| to max_ground, backtracking with
/// propagation over the witness triples. Throws InvalidSource when
/// max_ground < |X|.
SearchVerdict search_development(const DevelopmentProblem& problem, const LeafFilter& filter = {});

/// Re-derives the witness triples from the graphs and checks every
/// development invariant. Throws IdentityNotFull, NotAPermutation(e),
/// NotExtending(e, x) or CompositionBroken(p, q, r, y).
void verify_development(const Permutoid& P, const Development& D);

/// Sends each generator a to the development's permutation for the image of
/// p_a under the quotient map, then certifies it with verify_quotient_hom.
FiniteQuotientEvidence quotient_evidence(const Presentation& P, const CameronPermutoid& cameron,
                                         const Morphism& quotient, const Development& D);

struct ProbeOptions {
  std::size_t radius = 1;
  std::size_t max_ground = 8;
  std::size_t node_budget = 1'000'000;  // per quotient
  std::size_t max_cosets = 10'000;
  std::size_t canonical_cap = kDefaultCanonicalCap;
  bool deterministic = true;
};

enum class ProbeKind { found_quotient, definitely_none, inconclusive };

struct ProbeStats {
  std::size_t cameron_points = 0;
  std::size_t cameron_elements = 0;
  std::size_t quotient_classes = 0;
  std::size_t quotients_searched = 0;
  std::size_t budget_exceeded = 0;
  std::size_t nodes = 0;
};

struct ProbeReport {
  ProbeKind kind = ProbeKind::inconclusive;
  std::optional<FiniteQuotientEvidence> evidence;
  std::optional<Quotient> quotient;
  std::optional<Development> development;
  ProbeOptions bounds;
  ProbeStats stats;
};

/// Builds the Cameron permutoid, enumerates its non-trivial quotient classes
/// (smallest first) and searches each for a development. A found development
/// is turned into certified finite-quotient evidence. Requires 2*radius to
/// exceed the longest relator (PreconditionRadius).
ProbeReport probe_finite_quotient(const Presentation& P, const ProbeOptions& options);

}  // namespace plab
