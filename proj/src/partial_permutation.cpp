#include "plab/partial_permutation.hpp"

#include <algorithm>

#include "plab/error.hpp"

namespace plab {

PartialPermutation::PartialPermutation(std::vector<std::int32_t> images)
    : images_(std::move(images)),
      size_(static_cast<std::size_t>(
          std::count_if(images_.begin(), images_.end(), [](auto v) { return v != kNone; }))) {}

PartialPermutation PartialPermutation::from_pairs(std::size_t ground_size,
                                                  std::span<const Pair> pairs) {
  if (ground_size == 0) raise(ErrorCode::invalid_argument, {}, "ground set must be non-empty");
  if (pairs.empty()) raise(ErrorCode::empty_element);
  std::vector<std::int32_t> images(ground_size, kNone);
  std::vector<bool> hit(ground_size, false);
  for (auto [x, y] : pairs) {
    if (x >= ground_size || y >= ground_size) raise(ErrorCode::point_out_of_range);
    if (images[x] != kNone) {
      if (images[x] == static_cast<std::int32_t>(y)) continue;  // repeated pair
      raise(ErrorCode::not_functional);
    }
    if (hit[y]) raise(ErrorCode::not_injective);
    images[x] = static_cast<std::int32_t>(y);
    hit[y] = true;
  }
  return PartialPermutation(std::move(images));
}

PartialPermutation PartialPermutation::from_images(std::vector<std::int32_t> images) {
  std::vector<Pair> pairs;
  for (std::size_t x = 0; x < images.size(); ++x) {
    if (images[x] == kNone) continue;
    if (images[x] < 0) raise(ErrorCode::point_out_of_range);
    pairs.emplace_back(static_cast<Point>(x), static_cast<Point>(images[x]));
  }
  return from_pairs(images.size(), pairs);
}

PartialPermutation PartialPermutation::identity(std::size_t ground_size) {
  if (ground_size == 0) raise(ErrorCode::invalid_argument, {}, "ground set must be non-empty");
  std::vector<std::int32_t> images(ground_size);
  for (std::size_t x = 0; x < ground_size; ++x) images[x] = static_cast<std::int32_t>(x);
  return PartialPermutation(std::move(images));
}

std::vector<Point> PartialPermutation::domain() const {
  std::vector<Point> out;
  for (std::size_t x = 0; x < images_.size(); ++x)
    if (images_[x] != kNone) out.push_back(static_cast<Point>(x));
  return out;
}

std::vector<Point> PartialPermutation::range() const {
  std::vector<Point> out;
  for (auto y : images_)
    if (y != kNone) out.push_back(static_cast<Point>(y));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Pair> PartialPermutation::pairs() const {
  std::vector<Pair> out;
  for (std::size_t x = 0; x < images_.size(); ++x)
    if (images_[x] != kNone) out.emplace_back(static_cast<Point>(x), static_cast<Point>(images_[x]));
  return out;
}

bool PartialPermutation::is_identity() const noexcept {
  if (!is_full()) return false;
  for (std::size_t x = 0; x < images_.size(); ++x)
    if (images_[x] != static_cast<std::int32_t>(x)) return false;
  return true;
}

bool PartialPermutation::extends(const PartialPermutation& other) const noexcept {
  if (other.ground_size() != ground_size() || other.size_ > size_) return false;
  for (std::size_t x = 0; x < images_.size(); ++x)
    if (other.images_[x] != kNone && other.images_[x] != images_[x]) return false;
  return true;
}

bool PartialPermutation::agrees_somewhere(const PartialPermutation& other) const noexcept {
  if (other.ground_size() != ground_size()) return false;
  for (std::size_t x = 0; x < images_.size(); ++x)
    if (images_[x] != kNone && images_[x] == other.images_[x]) return true;
  return false;
}

PartialPermutation PartialPermutation::inverse() const {
  std::vector<std::int32_t> inv(images_.size(), kNone);
  for (std::size_t x = 0; x < images_.size(); ++x)
    if (images_[x] != kNone) inv[static_cast<std::size_t>(images_[x])] = static_cast<std::int32_t>(x);
  return PartialPermutation(std::move(inv));
}

PartialPermutation PartialPermutation::restricted(std::span<const Point> points) const {
  std::vector<std::int32_t> out(images_.size(), kNone);
  for (auto x : points)
    if (x < images_.size()) out[x] = images_[x];
  if (std::all_of(out.begin(), out.end(), [](auto v) { return v == kNone; }))
    raise(ErrorCode::empty_element, {}, "restriction to a set disjoint from the domain");
  return PartialPermutation(std::move(out));
}

std::optional<PartialPermutation> compose_partial(const PartialPermutation& p,
                                                  const PartialPermutation& q) {
  if (p.ground_size() != q.ground_size()) raise(ErrorCode::ground_set_mismatch);
  std::vector<std::int32_t> out(q.ground_size(), PartialPermutation::kNone);
  bool any = false;
  for (std::size_t x = 0; x < out.size(); ++x) {
    auto y = q(static_cast<Point>(x));
    if (y == PartialPermutation::kNone) continue;
    auto z = p(static_cast<Point>(y));
    if (z == PartialPermutation::kNone) continue;
    out[x] = z;
    any = true;
  }
  if (!any) return std::nullopt;
  return PartialPermutation::from_images(std::move(out));
}

}  // namespace plab
