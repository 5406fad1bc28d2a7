#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "plab/partial_permutation.hpp"

namespace plab {

using ElementIndex = std::size_t;

/// Candidate element as read from input: a display name and a raw graph.
struct ElementSpec {
  std::string name;
  std::vector<Pair> map;
};

enum class WitnessKind { element, no_witness, undefined };

/// Outcome of looking up the element extending p·q.
struct Witness {
  WitnessKind kind = WitnessKind::undefined;
  ElementIndex element = 0;  // meaningful only for WitnessKind::element

  friend bool operator==(const Witness&, const Witness&) = default;
};

struct WitnessTriple {
  ElementIndex p, q, r;
  friend bool operator==(const WitnessTriple&, const WitnessTriple&) = default;
};

/// A validated finite permutoid on {0,...,ground_size-1}.
///
/// The witness relation (which element extends p·q) is recomputed from the
/// graphs at construction; it cannot be supplied from outside.
class Permutoid {
public:
  std::size_t ground_size() const noexcept { return ground_size_; }
  std::size_t size() const noexcept { return elements_.size(); }
  ElementIndex identity_index() const noexcept { return identity_; }

  const PartialPermutation& element(ElementIndex i) const { return elements_.at(i); }
  const std::vector<PartialPermutation>& elements() const noexcept { return elements_; }
  const std::string& name(ElementIndex i) const { return names_.at(i); }
  const std::vector<std::string>& names() const noexcept { return names_; }

  /// Throws invalid_argument on out-of-range indices.
  Witness extension_witness(ElementIndex p, ElementIndex q) const;
  /// All (p,q,r) with r extending p·q, in (p,q) lexicographic order.
  std::vector<WitnessTriple> witness_triples() const;

  bool is_trivial() const noexcept { return elements_.size() == 1; }

private:
  friend Permutoid validate_permutoid(std::size_t, const std::vector<ElementSpec>&);
  friend Permutoid make_permutoid(std::size_t, std::vector<PartialPermutation>,
                                  std::vector<std::string>);

  Permutoid() = default;

  std::size_t ground_size_ = 0;
  std::vector<PartialPermutation> elements_;
  std::vector<std::string> names_;
  ElementIndex identity_ = 0;
  std::vector<Witness> witness_;  // size()*size(), row-major in p
};

/// Checks the permutoid axioms and builds the permutoid.
///
/// Errors (thrown as plab::Error, indices in parentheses):
/// EmptyElement(i), PointOutOfRange(i), NotFunctional(i), NotInjective(i),
/// DuplicateElement(i,j), MissingIdentity, UniqueExtensionViolated(p,q,r1,r2).
/// Checks run in that order; the first violation found is reported.
Permutoid validate_permutoid(std::size_t ground_size, const std::vector<ElementSpec>& elements);

/// Same as validate_permutoid for already-built partial permutations. Names
/// default to "p<i>" when `names` is empty.
Permutoid make_permutoid(std::size_t ground_size, std::vector<PartialPermutation> elements,
                         std::vector<std::string> names = {});

inline Witness extension_witness(const Permutoid& P, ElementIndex p, ElementIndex q) {
  return P.extension_witness(p, q);
}

/// Distinct elements never agree at a point.
bool is_rigid_permutoid(const Permutoid& P);

}  // namespace plab
