#include "plab/cayley.hpp"

#include "plab/error.hpp"

namespace plab {

CayleyBall::CayleyBall(std::shared_ptr<const MarkedGroup> group, std::size_t radius)
    : group_(std::move(group)), radius_(radius) {
  if (!group_) raise(ErrorCode::invalid_argument, {}, "null group");
  words_.push_back({});
  index_.emplace(group_->key({}), 0);
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if (words_[i].size() == radius_) continue;
    for (std::uint32_t g = 0; g < group_->generator_count(); ++g)
      for (bool inv : {false, true}) {
        Word w = words_[i];
        w.push_back({g, inv});
        if (index_.emplace(group_->key(w), words_.size()).second) words_.push_back(std::move(w));
      }
  }
}

std::size_t CayleyBall::count_within(std::size_t r) const {
  std::size_t k = 0;
  while (k < words_.size() && words_[k].size() <= r) ++k;
  return k;
}

std::string CayleyBall::label(std::size_t i) const {
  return format_word(words_.at(i), group_->generator_names());
}

std::optional<std::size_t> CayleyBall::find(const Word& w) const {
  auto it = index_.find(group_->key(w));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::optional<std::size_t> CayleyBall::product(std::size_t i, std::size_t j) const {
  Word w = words_.at(i);
  const auto& v = words_.at(j);
  w.insert(w.end(), v.begin(), v.end());
  return find(w);
}

std::optional<std::size_t> CayleyBall::inverse(std::size_t i) const {
  return find(inverse_word(words_.at(i)));
}

CameronPermutoid cameron_permutoid(std::shared_ptr<const MarkedGroup> group, std::size_t rho) {
  if (rho == 0) raise(ErrorCode::invalid_argument, {}, "radius must be positive");
  auto ball = std::make_shared<const CayleyBall>(std::move(group), 2 * rho);
  const std::size_t n = ball->size();
  const std::size_t inner = ball->count_within(rho);

  std::vector<PartialPermutation> elements;
  std::vector<std::string> names;
  std::vector<std::size_t> element_to_ball;
  elements.push_back(PartialPermutation::identity(n));
  names.push_back(ball->label(0));
  element_to_ball.push_back(0);
  for (std::size_t b = 1; b < inner; ++b) {
    std::vector<Pair> pairs;
    for (std::size_t x = 0; x < inner; ++x) {
      auto bx = ball->product(b, x);
      if (!bx) raise(ErrorCode::internal, {}, "product of two rho-ball elements left the 2rho-ball");
      pairs.emplace_back(static_cast<Point>(x), static_cast<Point>(*bx));
    }
    elements.push_back(PartialPermutation::from_pairs(n, pairs));
    names.push_back(ball->label(b));
    element_to_ball.push_back(b);
  }

  CameronPermutoid out{make_permutoid(n, std::move(elements), std::move(names)), ball, rho,
                       std::move(element_to_ball), {}};
  const auto& G = ball->group();
  for (std::uint32_t g = 0; g < G.generator_count(); ++g) {
    auto at = ball->find(Word{{g, false}});
    // Element indices coincide with ball indices inside B_rho.
    out.generator_elements.push_back(*at);
  }
  return out;
}

Morphism radius_extension(std::shared_ptr<const MarkedGroup> group, std::size_t rho_small,
                          std::size_t rho_large) {
  if (rho_small == 0 || rho_small >= rho_large)
    raise(ErrorCode::invalid_argument, {}, "radius extension needs 0 < rho' < rho");
  auto small = cameron_permutoid(group, rho_small);
  auto large = cameron_permutoid(group, rho_large);

  Morphism m;
  for (std::size_t x = 0; x < small.ball->size(); ++x) {
    auto y = large.ball->find(small.ball->geodesic(x));
    m.point_map.push_back(static_cast<Point>(*y));
  }
  for (std::size_t e = 0; e < small.permutoid.size(); ++e) {
    auto y = *large.ball->find(small.ball->geodesic(small.element_to_ball[e]));
    ElementIndex target = 0;
    for (ElementIndex f = 0; f < large.element_to_ball.size(); ++f)
      if (large.element_to_ball[f] == y) target = f;
    m.element_map.push_back(target);
  }
  m.source = std::make_shared<const Permutoid>(std::move(small.permutoid));
  m.target = std::make_shared<const Permutoid>(std::move(large.permutoid));
  return m;
}

}  // namespace plab
