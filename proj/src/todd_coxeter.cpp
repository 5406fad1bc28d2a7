#include <algorithm>
#include <deque>

#include "plab/error.hpp"
#include "plab/group.hpp"

namespace plab {

namespace {

constexpr std::int32_t kUndefined = -1;

// Coset table for the trivial subgroup. Rows are cosets, columns are letters
// (2g for g, 2g+1 for g^-1). Dead cosets keep their rows until compaction;
// parent_ links a dead coset towards the live coset it was identified with.
class CosetEnumerator {
public:
  CosetEnumerator(const Presentation& P, std::size_t max_cosets)
      : cols_(2 * P.generator_count()), max_live_(max_cosets),
        capacity_(std::max<std::size_t>(2 * max_cosets, 64)) {
    for (const auto& r : P.relators()) {
      std::vector<std::size_t> w;
      for (const auto& l : r) w.push_back(l.column());
      relators_.push_back(std::move(w));
    }
    add_row();
  }

  // False when the live-coset bound was hit.
  bool run() {
    while (true) {
      for (std::size_t c = 0; c < rows(); ++c) {
        if (!process(c)) return false;
      }
      if (complete()) return true;
    }
  }

  std::size_t rows() const noexcept { return parent_.size(); }
  bool live(std::size_t c) const noexcept { return parent_[c] == c; }
  std::int32_t at(std::size_t c, std::size_t col) const noexcept { return table_[c * cols_ + col]; }
  std::size_t columns() const noexcept { return cols_; }

  CosetEnumerationStats stats;

private:
  std::int32_t& cell(std::size_t c, std::size_t col) { return table_[c * cols_ + col]; }
  static std::size_t inv(std::size_t col) { return col ^ 1U; }

  void add_row() {
    parent_.push_back(rows());
    table_.resize(table_.size() + cols_, kUndefined);
    ++live_;
    ++stats.defined;
    stats.max_live = std::max(stats.max_live, live_);
  }

  bool define(std::size_t c, std::size_t col) {
    if (live_ >= max_live_ || rows() >= capacity_) return false;
    auto n = static_cast<std::int32_t>(rows());
    add_row();
    cell(c, col) = n;
    cell(static_cast<std::size_t>(n), inv(col)) = static_cast<std::int32_t>(c);
    return true;
  }

  std::size_t rep(std::size_t c) {
    std::size_t r = c;
    while (parent_[r] != r) r = parent_[r];
    while (parent_[c] != r) {
      auto next = parent_[c];
      parent_[c] = r;
      c = next;
    }
    return r;
  }

  void merge(std::size_t a, std::size_t b) {
    auto ra = rep(a), rb = rep(b);
    if (ra == rb) return;
    auto lo = std::min(ra, rb), hi = std::max(ra, rb);
    parent_[hi] = lo;
    --live_;
    pending_.push_back(hi);
  }

  void coincidence(std::size_t a, std::size_t b) {
    merge(a, b);
    while (!pending_.empty()) {
      auto dead = pending_.front();
      pending_.pop_front();
      for (std::size_t col = 0; col < cols_; ++col) {
        auto target = cell(dead, col);
        if (target == kUndefined) continue;
        auto d = static_cast<std::size_t>(target);
        if (cell(d, inv(col)) == static_cast<std::int32_t>(dead)) cell(d, inv(col)) = kUndefined;
        auto mu = rep(dead), nu = rep(d);
        if (cell(mu, col) != kUndefined) {
          merge(nu, static_cast<std::size_t>(cell(mu, col)));
        } else if (cell(nu, inv(col)) != kUndefined) {
          merge(mu, static_cast<std::size_t>(cell(nu, inv(col))));
        } else {
          cell(mu, col) = static_cast<std::int32_t>(nu);
          cell(nu, inv(col)) = static_cast<std::int32_t>(mu);
        }
      }
    }
  }

  enum class Scan { closed, stuck };

  // Scans w at c; with `fill` new cosets are defined to close the cycle.
  Scan scan(std::size_t c, const std::vector<std::size_t>& w, bool fill) {
    if (w.empty()) return Scan::closed;
    std::size_t f = c, b = c;
    std::size_t i = 0, j = w.size();  // unscanned letters are w[i..j)
    while (true) {
      while (i < j && cell(f, w[i]) != kUndefined) f = static_cast<std::size_t>(cell(f, w[i++]));
      if (i == j) {
        if (f != b) coincidence(f, b);
        return Scan::closed;
      }
      while (j > i && cell(b, inv(w[j - 1])) != kUndefined)
        b = static_cast<std::size_t>(cell(b, inv(w[--j])));
      if (i == j) {
        coincidence(f, b);
        return Scan::closed;
      }
      if (j == i + 1) {
        cell(f, w[i]) = static_cast<std::int32_t>(b);
        cell(b, inv(w[i])) = static_cast<std::int32_t>(f);
        return Scan::closed;
      }
      if (!fill || !define(f, w[i])) return Scan::stuck;
    }
  }

  // Deductions and coincidences only, over every live coset.
  void lookahead() {
    ++stats.lookaheads;
    for (std::size_t c = 0; c < rows(); ++c)
      for (const auto& r : relators_) {
        if (!live(c)) break;
        scan(c, r, false);
      }
  }

  // Renumbers live cosets 0..live-1 preserving order; returns the new index
  // of the first live coset at or after `position`.
  std::size_t compact(std::size_t position) {
    std::vector<std::int32_t> renumber(rows(), kUndefined);
    std::size_t next = 0, new_position = 0;
    for (std::size_t c = 0; c < rows(); ++c) {
      if (c == position) new_position = next;
      if (live(c)) renumber[c] = static_cast<std::int32_t>(next++);
    }
    if (position >= rows()) new_position = next;
    std::vector<std::int32_t> table(next * cols_, kUndefined);
    for (std::size_t c = 0; c < rows(); ++c) {
      if (!live(c)) continue;
      for (std::size_t col = 0; col < cols_; ++col) {
        auto t = cell(c, col);
        if (t != kUndefined) table[static_cast<std::size_t>(renumber[c]) * cols_ + col] = renumber[static_cast<std::size_t>(t)];
      }
    }
    table_ = std::move(table);
    parent_.resize(next);
    for (std::size_t c = 0; c < next; ++c) parent_[c] = c;
    return new_position;
  }

  // Handles a failed definition; false when no room could be made.
  bool make_room(std::size_t& c) {
    lookahead();
    c = compact(c);
    return live_ < max_live_;
  }

  bool process(std::size_t& c) {
    while (true) {
      if (c >= rows() || !live(c)) return true;
      bool stuck = false;
      for (const auto& r : relators_) {
        if (!live(c)) return true;
        if (scan(c, r, true) == Scan::stuck) {
          stuck = true;
          break;
        }
      }
      for (std::size_t col = 0; !stuck && col < cols_; ++col) {
        if (!live(c)) return true;
        if (cell(c, col) == kUndefined && !define(c, col)) stuck = true;
      }
      if (!stuck) return true;
      if (!make_room(c)) return false;
    }
  }

  bool complete() {
    for (std::size_t c = 0; c < rows(); ++c) {
      if (!live(c)) continue;
      for (std::size_t col = 0; col < cols_; ++col)
        if (cell(c, col) == kUndefined || !live(static_cast<std::size_t>(cell(c, col)))) return false;
    }
    return true;
  }

  std::size_t cols_;
  std::size_t max_live_;
  std::size_t capacity_;
  std::vector<std::vector<std::size_t>> relators_;
  std::vector<std::int32_t> table_;
  std::vector<std::size_t> parent_;
  std::deque<std::size_t> pending_;
  std::size_t live_ = 0;
};

}  // namespace

RealizedGroup todd_coxeter(const Presentation& P, std::size_t max_cosets, CosetEnumerationStats* stats) {
  if (max_cosets == 0) raise(ErrorCode::invalid_argument, {}, "max_cosets must be positive");
  if (P.generator_count() == 0) raise(ErrorCode::empty_generator_list);
  CosetEnumerator e(P, max_cosets);
  const bool ok = e.run();
  if (stats) *stats = e.stats;
  if (!ok) raise(ErrorCode::out_of_bounds, {static_cast<std::int64_t>(max_cosets)}, "coset enumeration inconclusive");

  // Breadth-first renumbering from the identity coset (always coset 0).
  const std::size_t cols = e.columns();
  std::vector<std::int32_t> number(e.rows(), kUndefined);
  std::vector<std::size_t> order_to_coset{0};
  std::vector<std::pair<std::size_t, std::size_t>> tree{{0, 0}};  // (parent element, column)
  number[0] = 0;
  for (std::size_t i = 0; i < order_to_coset.size(); ++i) {
    auto c = order_to_coset[i];
    for (std::size_t col = 0; col < cols; ++col) {
      auto t = static_cast<std::size_t>(e.at(c, col));
      if (number[t] != kUndefined) continue;
      number[t] = static_cast<std::int32_t>(order_to_coset.size());
      order_to_coset.push_back(t);
      tree.emplace_back(i, col);
    }
  }
  const std::size_t n = order_to_coset.size();
  // act[i][col]: element i times letter col.
  std::vector<std::vector<GroupElement>> act(n, std::vector<GroupElement>(cols));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t col = 0; col < cols; ++col)
      act[i][col] = static_cast<GroupElement>(number[static_cast<std::size_t>(e.at(order_to_coset[i], col))]);

  std::vector<std::vector<GroupElement>> table(n, std::vector<GroupElement>(n));
  for (std::size_t i = 0; i < n; ++i) {
    table[i][0] = static_cast<GroupElement>(i);
    for (std::size_t j = 1; j < n; ++j) {
      auto [parent, col] = tree[j];
      table[i][j] = act[table[i][parent]][col];
    }
  }
  std::vector<GroupElement> gens;
  for (std::size_t g = 0; g < P.generator_count(); ++g) gens.push_back(act[0][2 * g]);

  RealizedGroup G(std::move(table), std::move(gens), Backend::finite_enumerated);
  for (std::size_t r = 0; r < P.relators().size(); ++r)
    if (G.evaluate(P.relators()[r]) != 0)
      raise(ErrorCode::internal, {static_cast<std::int64_t>(r)}, "enumerated table violates a relator");
  return G;
}

}  // namespace plab
