#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "plab/group.hpp"
#include "plab/morphism.hpp"
#include "plab/permutoid.hpp"

namespace plab {

/// Ball of radius r about 1 in the word metric of a marked group.
///
/// Elements are listed breadth first (letters tried in the order a, a^-1,
/// b, b^-1, ...), so element 0 is the identity, depths are non-decreasing,
/// and a smaller ball is a prefix of a larger one on the same group.
class CayleyBall {
public:
  CayleyBall(std::shared_ptr<const MarkedGroup> group, std::size_t radius);

  std::size_t radius() const noexcept { return radius_; }
  std::size_t size() const noexcept { return words_.size(); }
  const Word& geodesic(std::size_t i) const { return words_.at(i); }
  std::size_t depth(std::size_t i) const { return words_.at(i).size(); }
  /// Number of elements at distance <= r.
  std::size_t count_within(std::size_t r) const;
  std::string label(std::size_t i) const;
  const MarkedGroup& group() const noexcept { return *group_; }

  std::optional<std::size_t> find(const Word& w) const;
  /// Index of g_i * g_j when it lies in this ball.
  std::optional<std::size_t> product(std::size_t i, std::size_t j) const;
  std::optional<std::size_t> inverse(std::size_t i) const;

private:
  std::shared_ptr<const MarkedGroup> group_;
  std::size_t radius_;
  std::vector<Word> words_;
  std::map<std::vector<std::int64_t>, std::size_t> index_;
};

/// The permutoid of left multiplications B_rho -> B_2rho, with labels.
struct CameronPermutoid {
  Permutoid permutoid;
  std::shared_ptr<const CayleyBall> ball;   // carrier B_2rho; point i is ball element i
  std::size_t radius = 0;                   // rho
  std::vector<std::size_t> element_to_ball; // element index -> ball index of b
  std::vector<ElementIndex> generator_elements;  // generator a -> element p_a
};

/// Throws invalid_argument when rho == 0.
CameronPermutoid cameron_permutoid(std::shared_ptr<const MarkedGroup> group, std::size_t rho);

/// The extension (Pi_rho'; B_2rho') -> (Pi_rho; B_2rho) given by inclusion.
/// Requires 0 < rho_small < rho_large.
Morphism radius_extension(std::shared_ptr<const MarkedGroup> group, std::size_t rho_small,
                          std::size_t rho_large);

}  // namespace plab
