#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "plab/presentation.hpp"

namespace plab {

using GroupElement = std::uint32_t;

enum class Backend { finite_enumerated, free_group_ball, explicit_table };

const char* backend_name(Backend b) noexcept;

/// A finite group as a full multiplication table; element 0 is the identity.
class RealizedGroup {
public:
  /// Checks the group axioms (full associativity check up to order 64,
  /// random triples beyond) and that the generator images generate.
  /// Throws BadGroupTable.
  RealizedGroup(std::vector<std::vector<GroupElement>> table,
                std::vector<GroupElement> generator_images, Backend backend);

  std::size_t order() const noexcept { return table_.size(); }
  GroupElement multiply(GroupElement g, GroupElement h) const { return table_[g][h]; }
  GroupElement inverse(GroupElement g) const { return inverse_[g]; }
  GroupElement generator_image(std::size_t generator) const { return generator_images_.at(generator); }
  const std::vector<GroupElement>& generator_images() const noexcept { return generator_images_; }
  const std::vector<std::vector<GroupElement>>& table() const noexcept { return table_; }
  Backend backend() const noexcept { return backend_; }

  GroupElement evaluate(const Word& w) const;
  /// Order of g as a group element.
  std::size_t element_order(GroupElement g) const;

private:
  std::vector<std::vector<GroupElement>> table_;
  std::vector<GroupElement> inverse_;
  std::vector<GroupElement> generator_images_;
  Backend backend_;
};

struct CosetEnumerationStats {
  std::size_t defined = 0;      // total cosets ever defined
  std::size_t max_live = 0;
  std::size_t lookaheads = 0;
};

/// Coset enumeration over the trivial subgroup (HLT strategy with lookahead,
/// cosets defined first-in first-out). Elements of the result are numbered
/// in breadth-first order from the identity over the letters a, a^-1, b, ...
/// Throws OutOfBounds when more than `max_cosets` live cosets are needed;
/// that is never evidence that the group is infinite.
RealizedGroup todd_coxeter(const Presentation& P, std::size_t max_cosets,
                           CosetEnumerationStats* stats = nullptr);

/// A marked group whose word problem we can solve inside a bounded ball:
/// either a realized finite group or a free group on named generators.
class MarkedGroup {
public:
  static MarkedGroup finite(RealizedGroup g, std::vector<std::string> generator_names);
  static MarkedGroup free(std::vector<std::string> generator_names);
  /// Free backend for relator-free presentations, coset enumeration otherwise.
  /// OutOfBounds surfaces as BackendInconclusive.
  static MarkedGroup from_presentation(const Presentation& P, std::size_t max_cosets);

  std::size_t generator_count() const noexcept { return names_.size(); }
  const std::vector<std::string>& generator_names() const noexcept { return names_; }
  Backend backend() const noexcept;
  const RealizedGroup* realized() const noexcept { return group_.get(); }

  /// Normal form of the element represented by w: the table index as a
  /// one-letter key for finite groups, the reduced word for free groups.
  /// Two words are equal in the group iff their keys are equal.
  std::vector<std::int64_t> key(const Word& w) const;

private:
  std::vector<std::string> names_;
  std::shared_ptr<const RealizedGroup> group_;  // null for the free backend
};

}  // namespace plab
