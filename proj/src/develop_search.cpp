#include <algorithm>
#include <atomic>
#include <chrono>
#include <mutex>
#include <thread>

#include "plab/develop.hpp"
#include "plab/error.hpp"

namespace plab {

namespace {

constexpr std::int32_t kUnset = -1;

struct Triple {
  std::size_t p, q, r;
};

struct Shared {
  std::atomic<std::size_t> nodes{0};
  std::atomic<bool> stop{false};
  std::size_t budget = 0;
};

// Backtracking state for one target size. Variables are f_e(y); the
// identity's row is preset. New points are introduced in increasing order:
// only points below next_new_ may appear anywhere in the assignment.
class Engine {
public:
  Engine(const Permutoid& P, std::size_t m, Shared& shared, const LeafFilter& filter)
      : P_(P), n_(P.ground_size()), m_(m), E_(P.size()), shared_(shared), filter_(filter),
        fwd_(E_ * m, kUnset), bwd_(E_ * m, kUnset), by_p_(E_), by_q_(E_), by_r_(E_),
        next_new_(n_) {
    const auto id = P.identity_index();
    for (const auto& t : P.witness_triples()) {
      if (t.p == id || t.q == id) continue;  // implied by f_id = 1_Y
      auto k = triples_.size();
      triples_.push_back({t.p, t.q, t.r});
      by_p_[t.p].push_back(k);
      by_q_[t.q].push_back(k);
      by_r_[t.r].push_back(k);
    }
    for (std::size_t y = 0; y < m_; ++y) {
      fwd(id, y) = static_cast<std::int32_t>(y);
      bwd(id, y) = static_cast<std::int32_t>(y);
    }
  }

  // Presets f_e = e on X and propagates. False on conflict.
  bool initialise() {
    for (std::size_t e = 0; e < E_; ++e) {
      if (e == P_.identity_index()) continue;
      for (auto [x, y] : P_.element(e).pairs())
        if (!assign(e, x, y)) return false;
    }
    return propagate();
  }

  struct Choice {
    std::size_t element = 0, point = 0;
    std::vector<std::int32_t> values;
  };

  // Next unassigned variable and its candidate values; nullopt when every
  // variable over the points in use is set.
  std::optional<Choice> choose() const {
    for (std::size_t y = 0; y < next_new_; ++y)
      for (std::size_t e = 0; e < E_; ++e) {
        if (fwd(e, y) != kUnset) continue;
        Choice c{e, y, {}};
        const std::size_t limit = std::min(next_new_ + 1, m_);
        for (std::size_t z = 0; z < limit; ++z)
          if (bwd(e, z) == kUnset) c.values.push_back(static_cast<std::int32_t>(z));
        return c;
      }
    return std::nullopt;
  }

  // Depth-first search; true when a solution is stored in solution().
  bool search() {
    if (shared_.stop.load(std::memory_order_relaxed)) return false;
    auto choice = choose();
    if (!choice) return accept_leaf();
    for (auto z : choice->values) {
      if (!try_value(choice->element, choice->point, z)) continue;
      if (search()) return true;
      undo_to_mark();
      if (shared_.stop.load(std::memory_order_relaxed)) return false;
    }
    return false;
  }

  // Assigns f_e(y) = z and propagates; on failure the state is restored.
  // On success a mark is left for undo_to_mark().
  bool try_value(std::size_t e, std::size_t y, std::int32_t z) {
    if (shared_.nodes.fetch_add(1, std::memory_order_relaxed) + 1 > shared_.budget) {
      budget_hit_ = true;
      shared_.stop.store(true);
      return false;
    }
    marks_.push_back({trail_.size(), next_new_});
    if (static_cast<std::size_t>(z) == next_new_) ++next_new_;
    if (assign(e, y, static_cast<std::size_t>(z)) && propagate()) return true;
    undo_to_mark();
    return false;
  }

  void undo_to_mark() {
    auto [size, next_new] = marks_.back();
    marks_.pop_back();
    while (trail_.size() > size) {
      auto [e, y] = trail_.back();
      trail_.pop_back();
      bwd(e, static_cast<std::size_t>(fwd(e, y))) = kUnset;
      fwd(e, y) = kUnset;
    }
    queue_.clear();
    next_new_ = next_new;
  }

  bool budget_hit() const noexcept { return budget_hit_; }
  const std::vector<Permutation>& solution() const noexcept { return solution_; }

private:
  std::int32_t& fwd(std::size_t e, std::size_t y) { return fwd_[e * m_ + y]; }
  std::int32_t& bwd(std::size_t e, std::size_t z) { return bwd_[e * m_ + z]; }
  std::int32_t fwd(std::size_t e, std::size_t y) const { return fwd_[e * m_ + y]; }
  std::int32_t bwd(std::size_t e, std::size_t z) const { return bwd_[e * m_ + z]; }

  bool assign(std::size_t e, std::size_t y, std::size_t z) {
    auto cur = fwd(e, y);
    if (cur == static_cast<std::int32_t>(z)) return true;
    if (cur != kUnset || bwd(e, z) != kUnset) return false;
    fwd(e, y) = static_cast<std::int32_t>(z);
    bwd(e, z) = static_cast<std::int32_t>(y);
    trail_.emplace_back(e, y);
    queue_.emplace_back(e, y);
    return true;
  }

  // Enforces f_r(y) = f_p(f_q(y)) around every newly set value.
  bool propagate() {
    for (std::size_t head = 0; head < queue_.size(); ++head) {
      auto [e, y] = queue_[head];
      auto z = static_cast<std::size_t>(fwd(e, y));
      for (auto k : by_q_[e]) {  // f_q(y) = z
        const auto& t = triples_[k];
        if (auto w = fwd(t.p, z); w != kUnset) {
          if (!assign(t.r, y, static_cast<std::size_t>(w))) return fail();
        } else if (auto w2 = fwd(t.r, y); w2 != kUnset) {
          if (!assign(t.p, z, static_cast<std::size_t>(w2))) return fail();
        }
      }
      for (auto k : by_p_[e]) {  // f_p(y) = z
        const auto& t = triples_[k];
        if (auto u = bwd(t.q, y); u != kUnset)
          if (!assign(t.r, static_cast<std::size_t>(u), z)) return fail();
        if (auto u = bwd(t.r, z); u != kUnset)
          if (!assign(t.q, static_cast<std::size_t>(u), y)) return fail();
      }
      for (auto k : by_r_[e]) {  // f_r(y) = z
        const auto& t = triples_[k];
        if (auto u = fwd(t.q, y); u != kUnset)
          if (!assign(t.p, static_cast<std::size_t>(u), z)) return fail();
        if (auto u = bwd(t.p, z); u != kUnset)
          if (!assign(t.q, y, static_cast<std::size_t>(u))) return fail();
      }
    }
    queue_.clear();
    return true;
  }

  bool fail() {
    queue_.clear();
    return false;
  }

  bool accept_leaf() {
    // Points never brought into use form an invariant block; fix them.
    std::vector<Permutation> maps(E_, Permutation(m_));
    for (std::size_t e = 0; e < E_; ++e)
      for (std::size_t y = 0; y < m_; ++y)
        maps[e][y] = y < next_new_ ? static_cast<Point>(fwd(e, y)) : static_cast<Point>(y);
    if (filter_ && !filter_(maps)) return false;
    solution_ = std::move(maps);
    return true;
  }

  const Permutoid& P_;
  std::size_t n_, m_, E_;
  Shared& shared_;
  const LeafFilter& filter_;
  std::vector<std::int32_t> fwd_, bwd_;
  std::vector<Triple> triples_;
  std::vector<std::vector<std::size_t>> by_p_, by_q_, by_r_;
  std::vector<std::pair<std::size_t, std::size_t>> trail_, queue_;
  std::vector<std::pair<std::size_t, std::size_t>> marks_;
  std::size_t next_new_;
  bool budget_hit_ = false;
  std::vector<Permutation> solution_;
};

struct SizeOutcome {
  bool found = false;
  bool budget_hit = false;
  std::vector<Permutation> maps;
};

SizeOutcome search_sequential(const Permutoid& P, std::size_t m, Shared& shared, const LeafFilter& filter) {
  Engine engine(P, m, shared, filter);
  SizeOutcome out;
  if (!engine.initialise()) return out;
  out.found = engine.search();
  out.budget_hit = engine.budget_hit();
  if (out.found) out.maps = engine.solution();
  return out;
}

// Splits the first branching variable's values across worker threads. The
// witness may differ from the sequential one; the verdict may not.
SizeOutcome search_parallel(const Permutoid& P, std::size_t m, Shared& shared, const LeafFilter& filter) {
  Engine root(P, m, shared, filter);
  SizeOutcome out;
  if (!root.initialise()) return out;
  auto choice = root.choose();
  if (!choice) {
    out.found = root.search();
    if (out.found) out.maps = root.solution();
    return out;
  }

  std::atomic<std::size_t> next{0};
  std::atomic<bool> budget_hit{false};
  std::mutex result_mutex;
  auto worker = [&] {
    while (!shared.stop.load()) {
      auto i = next.fetch_add(1);
      if (i >= choice->values.size()) return;
      Engine engine = root;
      if (!engine.try_value(choice->element, choice->point, choice->values[i])) {
        if (engine.budget_hit()) budget_hit = true;
        continue;
      }
      bool found = engine.search();
      if (engine.budget_hit()) budget_hit = true;
      if (found) {
        std::lock_guard lock(result_mutex);
        if (!out.found) {
          out.found = true;
          out.maps = engine.solution();
          shared.stop = true;
        }
        return;
      }
    }
  };
  const std::size_t workers =
      std::clamp<std::size_t>(std::thread::hardware_concurrency(), 1, choice->values.size());
  std::vector<std::jthread> pool;
  for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(worker);
  pool.clear();
  out.budget_hit = budget_hit && !out.found;
  return out;
}

}  // namespace

SearchVerdict search_development(const DevelopmentProblem& problem, const LeafFilter& filter) {
  const auto start = std::chrono::steady_clock::now();
  const Permutoid& P = problem.source;
  if (problem.max_ground < P.ground_size())
    raise(ErrorCode::invalid_source, {static_cast<std::int64_t>(problem.max_ground)},
          "max_ground is below the source ground size");

  SearchVerdict verdict;
  verdict.max_ground = problem.max_ground;
  Shared shared;
  shared.budget = problem.node_budget;
  for (std::size_t m = P.ground_size(); m <= problem.max_ground; ++m) {
    verdict.stats.sizes_tried.push_back(m);
    auto outcome = problem.deterministic ? search_sequential(P, m, shared, filter)
                                         : search_parallel(P, m, shared, filter);
    if (outcome.found) {
      Development D{m, std::move(outcome.maps)};
      verify_development(P, D);
      verdict.kind = VerdictKind::found;
      verdict.development = std::move(D);
      break;
    }
    if (outcome.budget_hit) {
      verdict.kind = VerdictKind::budget_exceeded;
      break;
    }
  }
  verdict.stats.nodes = shared.nodes.load();
  verdict.stats.wall_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return verdict;
}

void verify_development(const Permutoid& P, const Development& D) {
  const std::size_t m = D.target_size;
  if (m < P.ground_size()) raise(ErrorCode::invalid_argument, {}, "target smaller than the source ground set");
  if (D.maps.size() != P.size()) raise(ErrorCode::invalid_argument, {}, "one map per element required");
  for (std::size_t e = 0; e < D.maps.size(); ++e) {
    const auto& f = D.maps[e];
    if (f.size() != m) raise(ErrorCode::not_a_permutation, {static_cast<std::int64_t>(e)});
    std::vector<bool> seen(m, false);
    for (auto v : f) {
      if (v >= m || seen[v]) raise(ErrorCode::not_a_permutation, {static_cast<std::int64_t>(e)});
      seen[v] = true;
    }
  }
  const auto& id = D.maps[P.identity_index()];
  for (std::size_t y = 0; y < m; ++y)
    if (id[y] != y) raise(ErrorCode::identity_not_full, {static_cast<std::int64_t>(y)});

  for (std::size_t e = 0; e < P.size(); ++e)
    for (auto [x, y] : P.element(e).pairs())
      if (D.maps[e][x] != y) raise(ErrorCode::not_extending, {static_cast<std::int64_t>(e), x});

  // Witness triples straight from the graphs, not from the cached table.
  const auto& els = P.elements();
  for (std::size_t p = 0; p < els.size(); ++p)
    for (std::size_t q = 0; q < els.size(); ++q) {
      auto pq = compose_partial(els[p], els[q]);
      if (!pq) continue;
      for (std::size_t r = 0; r < els.size(); ++r) {
        if (!els[r].extends(*pq)) continue;
        for (std::size_t y = 0; y < m; ++y)
          if (D.maps[p][D.maps[q][y]] != D.maps[r][y])
            raise(ErrorCode::composition_broken,
                  {static_cast<std::int64_t>(p), static_cast<std::int64_t>(q),
                   static_cast<std::int64_t>(r), static_cast<std::int64_t>(y)});
      }
    }
}

}  // namespace plab
