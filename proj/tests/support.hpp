#pragma once

// Builders and brute-force oracles shared by the test programs. The oracles
// work on plain pair sets and never call the library code they check.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "plab/cayley.hpp"
#include "plab/error.hpp"
#include "plab/develop.hpp"
#include "plab/group.hpp"
#include "plab/partial_permutation.hpp"
#include "plab/permutoid.hpp"
#include "plab/presentation.hpp"
#include "plab/pseudogroup.hpp"

namespace testing_support {

using Graph = std::set<std::pair<unsigned, unsigned>>;

inline plab::PartialPermutation pp(std::size_t n, std::vector<plab::Pair> pairs) {
  return plab::PartialPermutation::from_pairs(n, pairs);
}

inline plab::Permutoid permutoid(std::size_t n, std::vector<std::vector<plab::Pair>> graphs) {
  std::vector<plab::ElementSpec> specs;
  for (std::size_t i = 0; i < graphs.size(); ++i) specs.push_back({"e" + std::to_string(i), graphs[i]});
  return plab::validate_permutoid(n, specs);
}

inline std::vector<plab::Pair> identity_pairs(std::size_t n) {
  std::vector<plab::Pair> out;
  for (plab::Point x = 0; x < n; ++x) out.emplace_back(x, x);
  return out;
}

inline plab::Presentation presentation(const std::string& text) {
  return plab::parse_presentation(text).presentation;
}

inline std::shared_ptr<const plab::MarkedGroup> marked(const std::string& text, std::size_t max_cosets = 10'000) {
  return std::make_shared<const plab::MarkedGroup>(plab::MarkedGroup::from_presentation(presentation(text), max_cosets));
}

inline Graph graph_of(const std::vector<plab::Pair>& pairs) {
  Graph g;
  for (auto [x, y] : pairs) g.emplace(x, y);
  return g;
}

inline Graph graph_of(const plab::PartialPermutation& p) { return graph_of(p.pairs()); }

// {(x, p(q(x)))}, computed straight from the pair sets.
inline Graph compose_graphs(const Graph& p, const Graph& q) {
  Graph out;
  for (auto [x, y] : q)
    for (auto [a, b] : p)
      if (a == y) out.emplace(x, b);
  return out;
}

inline bool subset(const Graph& small, const Graph& big) {
  return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

inline bool graph_is_partial_permutation(const Graph& g, std::size_t n) {
  if (g.empty()) return false;
  std::set<unsigned> dom, ran;
  for (auto [x, y] : g) {
    if (x >= n || y >= n) return false;
    if (!dom.insert(x).second || !ran.insert(y).second) return false;
  }
  return true;
}

// Accepts exactly the valid permutoid inputs.
inline bool oracle_valid_permutoid(std::size_t n, const std::vector<Graph>& elements) {
  Graph id;
  for (unsigned x = 0; x < n; ++x) id.emplace(x, x);
  bool has_identity = false;
  for (std::size_t i = 0; i < elements.size(); ++i) {
    if (!graph_is_partial_permutation(elements[i], n)) return false;
    for (std::size_t j = 0; j < i; ++j)
      if (elements[i] == elements[j]) return false;
    if (elements[i] == id) has_identity = true;
  }
  if (!has_identity) return false;
  for (const auto& p : elements)
    for (const auto& q : elements) {
      auto pq = compose_graphs(p, q);
      if (pq.empty()) continue;
      int extenders = 0;
      for (const auto& r : elements) extenders += subset(pq, r) ? 1 : 0;
      if (extenders > 1) return false;
    }
  return true;
}

inline std::vector<std::vector<unsigned>> all_permutations(std::size_t n) {
  std::vector<unsigned> p(n);
  std::iota(p.begin(), p.end(), 0u);
  std::vector<std::vector<unsigned>> out;
  do out.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

inline Graph relabel(const Graph& g, const std::vector<unsigned>& sigma) {
  Graph out;
  for (auto [x, y] : g) out.emplace(sigma[x], sigma[y]);
  return out;
}

// Isomorphism by trying every relabeling of the ground set.
inline bool oracle_isomorphic(const plab::Permutoid& a, const plab::Permutoid& b) {
  if (a.ground_size() != b.ground_size() || a.size() != b.size()) return false;
  std::set<Graph> target;
  for (const auto& e : b.elements()) target.insert(graph_of(e));
  for (const auto& sigma : all_permutations(a.ground_size())) {
    std::set<Graph> image;
    for (const auto& e : a.elements()) image.insert(relabel(graph_of(e), sigma));
    if (image == target) return true;
  }
  return false;
}

// Tries every assignment of permutations of Y = {0..m-1} (X embedded as a
// prefix), with the identity element sent to 1_Y.
inline bool oracle_developable_at(const plab::Permutoid& P, std::size_t m) {
  std::vector<Graph> g;
  for (const auto& e : P.elements()) g.push_back(graph_of(e));
  std::vector<std::tuple<std::size_t, std::size_t, std::size_t>> triples;
  for (std::size_t p = 0; p < g.size(); ++p)
    for (std::size_t q = 0; q < g.size(); ++q) {
      auto pq = compose_graphs(g[p], g[q]);
      if (pq.empty()) continue;
      for (std::size_t r = 0; r < g.size(); ++r)
        if (subset(pq, g[r])) triples.emplace_back(p, q, r);
    }
  const auto perms = all_permutations(m);
  std::vector<std::vector<std::size_t>> candidates(g.size());
  for (std::size_t e = 0; e < g.size(); ++e)
    for (std::size_t k = 0; k < perms.size(); ++k) {
      bool ok = true;
      for (auto [x, y] : g[e]) ok = ok && perms[k][x] == y;
      if (e == P.identity_index()) ok = ok && k == 0;
      if (ok) candidates[e].push_back(k);
    }
  std::vector<std::size_t> choice(g.size());
  std::function<bool(std::size_t)> rec = [&](std::size_t e) -> bool {
    if (e == g.size()) {
      for (auto [p, q, r] : triples)
        for (std::size_t y = 0; y < m; ++y)
          if (perms[choice[p]][perms[choice[q]][y]] != perms[choice[r]][y]) return false;
      return true;
    }
    for (auto k : candidates[e]) {
      choice[e] = k;
      if (rec(e + 1)) return true;
    }
    return false;
  };
  return rec(0);
}

// Random partial permutation with at least one pair.
inline std::vector<plab::Pair> random_pairs(std::mt19937_64& rng, std::size_t n) {
  std::vector<unsigned> dom(n), ran(n);
  std::iota(dom.begin(), dom.end(), 0u);
  std::iota(ran.begin(), ran.end(), 0u);
  std::shuffle(dom.begin(), dom.end(), rng);
  std::shuffle(ran.begin(), ran.end(), rng);
  const std::size_t k = 1 + rng() % n;
  std::vector<plab::Pair> out;
  for (std::size_t i = 0; i < k; ++i) out.emplace_back(dom[i], ran[i]);
  std::sort(out.begin(), out.end());
  return out;
}

// Every valid permutoid on n points with at most k elements, identity first.
inline std::vector<plab::Permutoid> all_permutoids(std::size_t n, std::size_t k) {
  std::vector<std::vector<plab::Pair>> candidates;
  const auto perms = all_permutations(n);
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    std::vector<unsigned> dom;
    for (unsigned x = 0; x < n; ++x)
      if (mask & (1u << x)) dom.push_back(x);
    std::set<std::vector<plab::Pair>> seen;
    for (const auto& p : perms) {
      std::vector<plab::Pair> g;
      for (std::size_t i = 0; i < dom.size(); ++i) g.emplace_back(dom[i], p[i]);
      if (seen.insert(g).second && g != identity_pairs(n)) candidates.push_back(g);
    }
  }
  std::vector<plab::Permutoid> out;
  std::vector<std::size_t> pick;
  std::function<void(std::size_t)> rec = [&](std::size_t start) {
    std::vector<std::vector<plab::Pair>> graphs{identity_pairs(n)};
    for (auto i : pick) graphs.push_back(candidates[i]);
    try {
      out.push_back(permutoid(n, graphs));
    } catch (const plab::Error&) {
    }
    if (pick.size() + 1 == k) return;
    for (std::size_t i = start; i < candidates.size(); ++i) {
      pick.push_back(i);
      rec(i + 1);
      pick.pop_back();
    }
  };
  rec(0);
  return out;
}

inline Graph inverse_graph(const Graph& g) {
  Graph out;
  for (auto [x, y] : g) out.emplace(y, x);
  return out;
}

inline std::set<Graph> maximal_graphs(const std::set<Graph>& all) {
  std::set<Graph> out;
  for (const auto& g : all) {
    bool dominated = false;
    for (const auto& h : all) dominated = dominated || (h != g && subset(g, h));
    if (!dominated) out.insert(g);
  }
  return out;
}

// Closure of generators and the identity under inverse and non-empty
// composition, reduced to its maximal graphs.
inline std::set<Graph> oracle_saturate(std::size_t n, const std::vector<Graph>& generators) {
  std::set<Graph> all(generators.begin(), generators.end());
  Graph id;
  for (unsigned x = 0; x < n; ++x) id.emplace(x, x);
  all.insert(id);
  for (bool grew = true; grew;) {
    grew = false;
    std::vector<Graph> current(all.begin(), all.end());
    for (const auto& p : current) {
      grew = all.insert(inverse_graph(p)).second || grew;
      for (const auto& q : current) {
        auto pq = compose_graphs(p, q);
        if (!pq.empty()) grew = all.insert(pq).second || grew;
      }
    }
  }
  return maximal_graphs(all);
}

// Every non-empty restriction of some maximal graph.
inline std::set<Graph> downward_closure(const std::set<Graph>& maximal) {
  std::set<Graph> out;
  for (const auto& m : maximal) {
    std::vector<std::pair<unsigned, unsigned>> pairs(m.begin(), m.end());
    for (unsigned mask = 1; mask < (1u << pairs.size()); ++mask) {
      Graph g;
      for (std::size_t i = 0; i < pairs.size(); ++i)
        if (mask & (1u << i)) g.insert(pairs[i]);
      out.insert(g);
    }
  }
  return out;
}

inline bool agree_somewhere(const Graph& f, const Graph& g) {
  for (auto pair : f)
    if (g.count(pair)) return true;
  return false;
}

// No two distinct maximal elements agree at a point.
inline bool rigid_by_agreement(const std::set<Graph>& maximal) {
  for (const auto& a : maximal)
    for (const auto& b : maximal)
      if (a != b && agree_somewhere(a, b)) return false;
  return true;
}

// Every element of H lies in exactly one maximal element.
inline bool rigid_by_unique_extension(const std::set<Graph>& maximal) {
  for (const auto& h : downward_closure(maximal)) {
    int count = 0;
    for (const auto& m : maximal) count += subset(h, m) ? 1 : 0;
    if (count != 1) return false;
  }
  return true;
}

// f and g in H agreeing at a point always glue to an element of H.
inline bool rigid_by_gluing(const std::set<Graph>& maximal, std::size_t n) {
  const auto H = downward_closure(maximal);
  for (const auto& f : H)
    for (const auto& g : H) {
      if (!agree_somewhere(f, g)) continue;
      Graph u = f;
      u.insert(g.begin(), g.end());
      if (!graph_is_partial_permutation(u, n) || !H.count(u)) return false;
    }
  return true;
}

inline std::vector<std::vector<plab::Pair>> all_partial_injections(std::size_t n) {
  std::vector<std::vector<plab::Pair>> out;
  for (const auto& P : all_permutoids(n, 2))
    if (P.size() == 2) out.push_back(P.element(1 - P.identity_index()).pairs());
  out.push_back(identity_pairs(n));
  return out;
}

// Generator sets on at most four points: every single map, and every pair on
// at most three points.
inline std::vector<std::pair<std::size_t, std::vector<std::vector<plab::Pair>>>> generator_pool() {
  std::vector<std::pair<std::size_t, std::vector<std::vector<plab::Pair>>>> out;
  for (std::size_t n = 1; n <= 4; ++n) {
    const auto maps = all_partial_injections(n);
    for (const auto& f : maps) out.push_back({n, {f}});
    if (n <= 3)
      for (std::size_t i = 0; i < maps.size(); ++i)
        for (std::size_t j = i + 1; j < maps.size(); ++j) out.push_back({n, {maps[i], maps[j]}});
  }
  return out;
}

}  // namespace testing_support
