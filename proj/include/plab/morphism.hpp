#pragma once

#include <memory>
#include <vector>

#include "plab/permutoid.hpp"

namespace plab {

/// Pair (element map, point map) between two permutoids.
struct Morphism {
  std::shared_ptr<const Permutoid> source;
  std::shared_ptr<const Permutoid> target;
  std::vector<Point> point_map;           // source ground set -> target ground set
  std::vector<ElementIndex> element_map;  // source elements -> target elements
};

struct MorphismKind {
  bool is_isomorphism = false;
  bool is_quotient = false;
  bool is_extension = false;
  bool is_complete_extension = false;
  bool element_map_injective = false;

  friend bool operator==(const MorphismKind&, const MorphismKind&) = default;
};

/// Checks the three morphism clauses and classifies the morphism.
///
/// Throws IdentityNotPreserved, EquivarianceViolated(p, x) or
/// CompositionNotPreserved(p, q, r); invalid_argument when the maps have the
/// wrong shape.
MorphismKind validate_morphism(const Morphism& m);

}  // namespace plab
