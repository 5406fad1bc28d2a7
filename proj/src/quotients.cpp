#include "plab/quotients.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <tuple>

#include "plab/error.hpp"

namespace plab {

namespace {

using PointInvariant = std::vector<std::tuple<std::size_t, bool, bool, bool>>;

PointInvariant point_invariant(const Permutoid& P, Point x) {
  PointInvariant inv;
  inv.reserve(P.size());
  for (const auto& e : P.elements()) {
    auto y = e(x);
    bool in_range = false;
    for (auto v : e.images())
      if (v == static_cast<std::int32_t>(x)) in_range = true;
    inv.emplace_back(e.size(), y != PartialPermutation::kNone, in_range,
                     y == static_cast<std::int32_t>(x));
  }
  std::sort(inv.begin(), inv.end());
  return inv;
}

std::string serialize(const Permutoid& P, const std::vector<Point>& relabel) {
  const std::size_t n = P.ground_size();
  std::vector<std::string> encoded;
  encoded.reserve(P.size());
  for (const auto& e : P.elements()) {
    std::string enc(n, '\0');
    for (std::size_t x = 0; x < n; ++x) {
      auto y = e(static_cast<Point>(x));
      if (y != PartialPermutation::kNone)
        enc[relabel[x]] = static_cast<char>(relabel[static_cast<std::size_t>(y)] + 1);
    }
    encoded.push_back(std::move(enc));
  }
  std::sort(encoded.begin(), encoded.end());
  std::string key;
  key.push_back(static_cast<char>(n));
  key.push_back(static_cast<char>(P.size() & 0xff));
  key.push_back(static_cast<char>((P.size() >> 8) & 0xff));
  for (const auto& enc : encoded) key += enc;
  return key;
}

class CanonicalSearch {
public:
  explicit CanonicalSearch(const Permutoid& P) : P_(P), relabel_(P.ground_size()) {
    const std::size_t n = P.ground_size();
    std::vector<std::pair<PointInvariant, Point>> keyed;
    for (Point x = 0; x < n; ++x) keyed.emplace_back(point_invariant(P, x), x);
    std::sort(keyed.begin(), keyed.end());
    for (std::size_t i = 0; i < n; ++i) {
      if (i == 0 || keyed[i].first != keyed[i - 1].first) cells_.emplace_back();
      cells_.back().push_back(keyed[i].second);
    }
  }

  std::string run() {
    recurse(0, 0);
    return best_;
  }

private:
  void recurse(std::size_t cell, Point next_label) {
    if (cell == cells_.size()) {
      auto key = serialize(P_, relabel_);
      if (best_.empty() || key < best_) best_ = std::move(key);
      return;
    }
    auto members = cells_[cell];
    std::sort(members.begin(), members.end());
    do {
      for (std::size_t i = 0; i < members.size(); ++i)
        relabel_[members[i]] = next_label + static_cast<Point>(i);
      recurse(cell + 1, next_label + static_cast<Point>(members.size()));
    } while (std::next_permutation(members.begin(), members.end()));
  }

  const Permutoid& P_;
  std::vector<std::vector<Point>> cells_;
  std::vector<Point> relabel_;
  std::string best_;
};

// Visits every set partition of {0..n-1} as a restricted growth string.
template <typename Visit>
void partitions_from(std::vector<std::size_t>& cls, std::size_t i, std::size_t classes, Visit& visit) {
  if (i == cls.size()) {
    visit(static_cast<const std::vector<std::size_t>&>(cls), classes);
    return;
  }
  for (std::size_t c = 0; c <= classes; ++c) {
    cls[i] = c;
    partitions_from(cls, i + 1, std::max(classes, c + 1), visit);
  }
}

template <typename Visit>
void for_each_partition(std::size_t n, Visit&& visit) {
  std::vector<std::size_t> cls(n, 0);
  partitions_from(cls, 0, 0, visit);
}

}  // namespace

std::string canonical_form(const Permutoid& P, std::size_t cap) {
  if (P.ground_size() > cap)
    raise(ErrorCode::ground_set_too_large, {static_cast<std::int64_t>(P.ground_size())});
  return CanonicalSearch(P).run();
}

std::vector<Quotient> enumerate_quotients(const Permutoid& P, bool nontrivial_only, std::size_t cap) {
  const std::size_t n = P.ground_size();
  if (n > cap) raise(ErrorCode::ground_set_too_large, {static_cast<std::int64_t>(n)});
  auto source = std::make_shared<const Permutoid>(P);

  std::vector<Quotient> out;
  std::set<std::string> seen;
  for_each_partition(n, [&](const std::vector<std::size_t>& cls, std::size_t k) {
    std::vector<PartialPermutation> induced;
    std::vector<std::string> names;
    std::map<std::vector<std::int32_t>, ElementIndex> index_of;
    std::vector<ElementIndex> element_map(P.size());

    for (ElementIndex e = 0; e < P.size(); ++e) {
      const auto& p = P.element(e);
      std::vector<std::int32_t> img(k, PartialPermutation::kNone);
      std::vector<bool> hit(k, false);
      for (auto x : p.domain()) {
        auto cx = cls[x];
        auto cy = static_cast<std::int32_t>(cls[static_cast<std::size_t>(p(x))]);
        if (img[cx] == cy) continue;
        if (img[cx] != PartialPermutation::kNone) return;  // not well defined
        if (hit[static_cast<std::size_t>(cy)]) return;     // not injective
        img[cx] = cy;
        hit[static_cast<std::size_t>(cy)] = true;
      }
      auto [it, inserted] = index_of.emplace(img, induced.size());
      if (inserted) {
        induced.push_back(PartialPermutation::from_images(img));
        names.push_back(P.name(e));
      }
      element_map[e] = it->second;
    }
    if (nontrivial_only && induced.size() == 1) return;

    std::shared_ptr<const Permutoid> target;
    try {
      target = std::make_shared<const Permutoid>(make_permutoid(k, std::move(induced), std::move(names)));
    } catch (const Error&) {
      return;
    }
    Morphism m{source, target, std::vector<Point>(cls.begin(), cls.end()), std::move(element_map)};
    try {
      auto kind = validate_morphism(m);
      if (!kind.is_quotient) return;
    } catch (const Error&) {
      return;
    }
    if (!seen.insert(canonical_form(*target, cap)).second) return;
    out.push_back({std::move(target), std::move(m)});
  });
  return out;
}

}  // namespace plab
