#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <vector>

#include "plab/morphism.hpp"
#include "plab/permutoid.hpp"

namespace plab {

inline constexpr std::size_t kDefaultCanonicalCap = 10;

/// Byte string that is equal for two permutoids iff they are isomorphic.
/// Element names do not take part. Throws GroundSetTooLarge above `cap`.
std::string canonical_form(const Permutoid& P, std::size_t cap = kDefaultCanonicalCap);

struct Quotient {
  std::shared_ptr<const Permutoid> permutoid;
  Morphism morphism;  // source -> permutoid; point_map is the partition
};

/// One representative per isomorphism class of partition-induced quotients,
/// in the order their partitions are first met (restricted growth order, so
/// the identity partition comes last and the one-class partition first).
std::vector<Quotient> enumerate_quotients(const Permutoid& P, bool nontrivial_only,
                                          std::size_t cap = kDefaultCanonicalCap);

}  // namespace plab
