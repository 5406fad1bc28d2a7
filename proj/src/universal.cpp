#include "plab/universal.hpp"

#include <algorithm>
#include <unordered_set>

#include "plab/cayley.hpp"
#include "plab/error.hpp"

namespace plab {

Presentation universal_group(const Permutoid& P) {
  std::vector<std::string> gens;
  for (std::size_t i = 0; i < P.size(); ++i) gens.push_back("p" + std::to_string(i));
  std::vector<Word> relators;
  for (const auto& [p, q, r] : P.witness_triples()) {
    relators.push_back({{static_cast<std::uint32_t>(p), false},
                        {static_cast<std::uint32_t>(q), false},
                        {static_cast<std::uint32_t>(r), true}});
  }
  return Presentation(std::move(gens), std::move(relators));
}

Triangulation triangulate(const Presentation& P, std::size_t m, std::size_t max_cosets) {
  if (2 * m <= P.max_relator_length())
    raise(ErrorCode::precondition_radius, {static_cast<std::int64_t>(m)},
          "need m greater than half the longest relator");
  auto group = std::make_shared<const MarkedGroup>(MarkedGroup::from_presentation(P, max_cosets));
  CayleyBall ball(group, m);

  Triangulation out;
  std::vector<std::string> gens;
  for (std::size_t i = 0; i < ball.size(); ++i) {
    gens.push_back("t" + std::to_string(i));
    out.labels.push_back(ball.label(i));
  }

  // letter (i, inverse) -> word in the original generators
  auto spell = [&](std::size_t i, bool inverse) {
    return inverse ? inverse_word(ball.geodesic(i)) : ball.geodesic(i);
  };
  const auto identity = group->key({});
  std::vector<Word> relators;
  const std::size_t letters = 2 * ball.size();
  for (std::size_t a = 0; a < letters; ++a)
    for (std::size_t b = 0; b < letters; ++b)
      for (std::size_t c = 0; c < letters; ++c) {
        Word w = spell(a / 2, a % 2);
        auto wb = spell(b / 2, b % 2);
        auto wc = spell(c / 2, c % 2);
        w.insert(w.end(), wb.begin(), wb.end());
        w.insert(w.end(), wc.begin(), wc.end());
        if (group->key(w) != identity) continue;
        relators.push_back({{static_cast<std::uint32_t>(a / 2), a % 2 == 1},
                            {static_cast<std::uint32_t>(b / 2), b % 2 == 1},
                            {static_cast<std::uint32_t>(c / 2), c % 2 == 1}});
      }
  out.presentation = Presentation::verbatim(std::move(gens), std::move(relators));
  return out;
}

Permutation evaluate_word(const Word& w, const std::vector<Permutation>& images) {
  if (images.empty()) raise(ErrorCode::invalid_argument, {}, "no generator images");
  const std::size_t n = images.front().size();
  Permutation out(n);
  for (std::size_t y = 0; y < n; ++y) {
    Point v = static_cast<Point>(y);
    for (auto it = w.rbegin(); it != w.rend(); ++it) {
      const auto& f = images.at(it->generator);
      if (!it->inverse) {
        v = f[v];
      } else {
        v = static_cast<Point>(std::find(f.begin(), f.end(), v) - f.begin());
      }
    }
    out[y] = v;
  }
  return out;
}

namespace {

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const noexcept {
    std::size_t h = 1469598103934665603ULL;
    for (auto v : p) h = (h ^ v) * 1099511628211ULL;
    return h;
  }
};

void check_permutation(const Permutation& p, std::size_t degree, std::size_t index) {
  if (p.size() != degree) raise(ErrorCode::invalid_argument, {static_cast<std::int64_t>(index)}, "degree mismatch");
  std::vector<bool> seen(degree, false);
  for (auto v : p) {
    if (v >= degree || seen[v]) raise(ErrorCode::not_a_permutation, {static_cast<std::int64_t>(index)});
    seen[v] = true;
  }
}

}  // namespace

std::vector<Permutation> generated_group(const std::vector<Permutation>& gens, std::size_t degree,
                                         std::size_t cap) {
  Permutation id(degree);
  for (std::size_t y = 0; y < degree; ++y) id[y] = static_cast<Point>(y);
  std::vector<Permutation> elements{id};
  std::unordered_set<Permutation, PermutationHash> seen{id};
  for (std::size_t i = 0; i < elements.size(); ++i) {
    for (const auto& g : gens) {
      Permutation next(degree);
      for (std::size_t y = 0; y < degree; ++y) next[y] = g[elements[i][y]];  // g ∘ element
      if (seen.insert(next).second) {
        if (elements.size() >= cap) raise(ErrorCode::closure_cap_exceeded, {static_cast<std::int64_t>(cap)});
        elements.push_back(std::move(next));
      }
    }
  }
  return elements;
}

std::size_t generated_order(const std::vector<Permutation>& gens, std::size_t degree, std::size_t cap) {
  return generated_group(gens, degree, cap).size();
}

FiniteQuotientEvidence verify_quotient_hom(const Presentation& P, const std::vector<Permutation>& images,
                                           std::size_t closure_cap) {
  if (images.size() != P.generator_count())
    raise(ErrorCode::invalid_argument, {}, "one image per generator required");
  if (images.empty()) return {images, 1};
  const std::size_t degree = images.front().size();
  for (std::size_t i = 0; i < images.size(); ++i) check_permutation(images[i], degree, i);

  for (std::size_t r = 0; r < P.relators().size(); ++r) {
    auto img = evaluate_word(P.relators()[r], images);
    for (std::size_t y = 0; y < degree; ++y)
      if (img[y] != y) raise(ErrorCode::relator_not_killed, {static_cast<std::int64_t>(r)});
  }
  return {images, generated_order(images, degree, closure_cap)};
}

}  // namespace plab
