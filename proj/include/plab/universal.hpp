#pragma once

#include <cstddef>
#include <vector>

#include "plab/group.hpp"
#include "plab/permutoid.hpp"
#include "plab/presentation.hpp"

namespace plab {

/// <Pi | p q = r whenever r extends p·q>, one generator "p<i>" per element in
/// index order and one relator p q r^-1 per witness triple.
Presentation universal_group(const Permutoid& P);

struct Triangulation {
  Presentation presentation;       // generators t0.. for the ball elements
  std::vector<std::string> labels; // geodesic word of each generator in the input group
};

/// Triangular presentation on the ball B_m of the group presented by P, with
/// every length-3 string over B^{±1} that multiplies to 1 as a relator
/// (unreduced strings included). Requires 2m > longest relator
/// (PreconditionRadius); BackendInconclusive if P cannot be realized.
Triangulation triangulate(const Presentation& P, std::size_t m, std::size_t max_cosets);

inline constexpr std::size_t kDefaultClosureCap = 1'000'000;

/// Images of the generators of a presentation in Perm(Y) that kill every relator.
struct FiniteQuotientEvidence {
  std::vector<Permutation> generator_images;
  std::size_t group_order = 0;  // order of the subgroup they generate
  bool nontrivial() const noexcept { return group_order > 1; }
};

/// Word a1...ak evaluates to f_{a1} ∘ ... ∘ f_{ak} (rightmost letter acts first).
Permutation evaluate_word(const Word& w, const std::vector<Permutation>& images);

/// Checks that every relator maps to the identity and computes the order of
/// the generated subgroup. Throws RelatorNotKilled(r), ClosureCapExceeded,
/// NotAPermutation, invalid_argument.
FiniteQuotientEvidence verify_quotient_hom(const Presentation& P, const std::vector<Permutation>& images,
                                           std::size_t closure_cap = kDefaultClosureCap);

/// Order of the group generated by `gens` (all of the same degree). Throws
/// ClosureCapExceeded when more than `cap` elements are found.
std::size_t generated_order(const std::vector<Permutation>& gens, std::size_t degree, std::size_t cap);

/// Every element of the group generated by `gens`, identity first, in
/// breadth-first order. Throws ClosureCapExceeded.
std::vector<Permutation> generated_group(const std::vector<Permutation>& gens, std::size_t degree,
                                         std::size_t cap);

}  // namespace plab
