#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "plab/develop.hpp"
#include "plab/group.hpp"
#include "plab/morphism.hpp"
#include "plab/partial_permutation.hpp"
#include "plab/permutoid.hpp"

namespace plab {

/// Finite pseudogroup on {0,...,n-1}, stored as its maximal elements.
///
/// H is every non-empty restriction of some maximal element. The antichain
/// is closed under inverse and, up to restriction, under composition, and
/// always contains the identity. Elements are kept sorted, identity included.
class Pseudogroup {
public:
  std::size_t ground_size() const noexcept { return ground_size_; }
  const std::vector<PartialPermutation>& maximal_elements() const noexcept { return maximal_; }

private:
  friend Pseudogroup generate_pseudogroup(std::size_t, const std::vector<PartialPermutation>&);
  friend Pseudogroup group_action_pseudogroup(const RealizedGroup&, const std::vector<Permutation>&);

  std::size_t ground_size_ = 0;
  std::vector<PartialPermutation> maximal_;
};

/// Saturates generators ∪ {1_X} under inverse and composition, discarding
/// restrictions of other elements as it goes. The gluing axiom is not
/// applied. Throws GroundSetMismatch.
Pseudogroup generate_pseudogroup(std::size_t ground_size, const std::vector<PartialPermutation>& generators);

/// graph(f) lies inside some maximal element.
bool pseudogroup_membership(const Pseudogroup& H, const PartialPermutation& f);

/// No two distinct maximal elements agree at a point.
bool is_rigid_pseudogroup(const Pseudogroup& H);

/// The maximal elements as a (rigid) permutoid. Throws NotRigid.
Permutoid maximal_permutoid(const Pseudogroup& H);

/// Sends every element of Pi to its unique maximal extension in H_Pi, with
/// the identity point map. Throws NotRigid.
Morphism extend_to_maximal(const Permutoid& P);

/// The pseudogroup of restrictions of a free action. `action[g]` is the
/// permutation of Y for group element g, with action[gh] = action[g] ∘ action[h].
/// Throws NotAnAction(g, h) or NotFree(g, y).
Pseudogroup group_action_pseudogroup(const RealizedGroup& G, const std::vector<Permutation>& action);

struct RigidDevelopment {
  std::size_t target_size = 0;
  std::vector<Permutation> group;        // identity first
  std::vector<std::size_t> assignment;   // maximal element -> index into group
  Development permutoid_development;     // the induced development of (Lambda; X)
};

enum class RigidVerdictKind { found, exhausted, budget_exceeded };

struct RigidSearchVerdict {
  RigidVerdictKind kind = RigidVerdictKind::exhausted;
  std::optional<RigidDevelopment> development;
  std::size_t max_ground = 0;
  SearchStats stats;
};

inline constexpr std::size_t kDefaultGroupCap = 100'000;

/// Development search on the maximal permutoid, accepting only assignments
/// whose generated group acts freely. Throws NotRigid or GroupClosureCapExceeded.
RigidSearchVerdict search_rigid_development(const Pseudogroup& H, std::size_t max_ground,
                                            std::size_t node_budget,
                                            std::size_t group_cap = kDefaultGroupCap);

}  // namespace plab
