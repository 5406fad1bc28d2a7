#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace plab {

using Point = std::uint32_t;
using Pair = std::pair<Point, Point>;
/// Full permutation of {0,...,n-1} as its image vector.
using Permutation = std::vector<Point>;

/// Injective map between two non-empty subsets of {0,...,ground_size-1}.
///
/// Stored densely: image(x) is kNone outside the domain. Instances are only
/// created through the checked factories, so every live value satisfies the
/// non-empty/functional/injective invariants.
class PartialPermutation {
public:
  static constexpr std::int32_t kNone = -1;

  /// Throws Error(empty_element | point_out_of_range | not_functional | not_injective).
  static PartialPermutation from_pairs(std::size_t ground_size, std::span<const Pair> pairs);
  /// `images[x]` is the image of x or kNone.
  static PartialPermutation from_images(std::vector<std::int32_t> images);
  static PartialPermutation identity(std::size_t ground_size);

  std::size_t ground_size() const noexcept { return images_.size(); }
  std::size_t size() const noexcept { return size_; }

  bool defined_at(Point x) const noexcept {
    return x < images_.size() && images_[x] != kNone;
  }
  std::int32_t operator()(Point x) const noexcept {
    return x < images_.size() ? images_[x] : kNone;
  }

  std::vector<Point> domain() const;
  std::vector<Point> range() const;
  std::vector<Pair> pairs() const;
  const std::vector<std::int32_t>& images() const noexcept { return images_; }

  /// Total with domain and range the whole ground set.
  bool is_full() const noexcept { return size_ == images_.size(); }
  bool is_identity() const noexcept;

  /// graph(other) is a subset of graph(*this).
  bool extends(const PartialPermutation& other) const noexcept;
  /// Some x in both domains with equal images.
  bool agrees_somewhere(const PartialPermutation& other) const noexcept;

  PartialPermutation inverse() const;
  PartialPermutation restricted(std::span<const Point> points) const;

  friend bool operator==(const PartialPermutation&, const PartialPermutation&) = default;
  friend auto operator<=>(const PartialPermutation& a, const PartialPermutation& b) {
    return a.images_ <=> b.images_;
  }

private:
  explicit PartialPermutation(std::vector<std::int32_t> images);

  std::vector<std::int32_t> images_;
  std::size_t size_ = 0;
};

/// p·q: x -> p(q(x)) for x in dom q with q(x) in dom p. nullopt when that set
/// is empty (the composition does not exist). Throws ground_set_mismatch.
std::optional<PartialPermutation> compose_partial(const PartialPermutation& p,
                                                  const PartialPermutation& q);

}  // namespace plab
